#pragma once

// Inner and class-preserving automorphisms, Out_c triviality, and the automorphism
// lemmas: pointwise powers, fixed-point witnesses for coprime actions, p-part normalization.

#include <set>

#include "fgt/classify.hpp"

namespace fgt {

/// x -> g^-1 x g
inline GroupMap inner_automorphism(const Group& g, elem c) {
  std::vector<elem> im(g.order());
  for (elem x = 0; x < g.order(); ++x) im[x] = g.conj(x, c);
  return GroupMap(g, g, std::move(im));
}

inline void require_automorphism(const Group& g, const GroupMap& f, std::string_view what) {
  if (!(f.source() == g) || !f.is_automorphism())
    throw error(errc::not_automorphism, std::string(what) + " is not an automorphism of the group");
}

/// f(x) lies in the conjugacy class of x for every x; class_id from class_index().
inline bool maps_into_classes(const GroupMap& f, const std::vector<std::uint32_t>& class_id) {
  for (elem x = 0; x < class_id.size(); ++x)
    if (class_id[f(x)] != class_id[x]) return false;
  return true;
}

inline bool is_class_preserving(const Group& g, const GroupMap& f) {
  require_automorphism(g, f, "map");
  return maps_into_classes(f, class_index(g, conjugacy_classes(g)));
}

/// Images of the generating sequence under every inner automorphism.
class inner_lookup {
 public:
  explicit inner_lookup(const Group& g) : gens_(generating_sequence(g)) {
    for (elem c = 0; c < g.order(); ++c) {
      std::vector<elem> key;
      for (elem s : gens_) key.push_back(g.conj(s, c));
      by_images_.emplace(std::move(key), c);
    }
  }

  /// An element inducing f, if f is inner (compares on generators only).
  std::optional<elem> conjugator(const GroupMap& f) const {
    std::vector<elem> key;
    for (elem s : gens_) key.push_back(f(s));
    auto it = by_images_.find(key);
    if (it == by_images_.end()) return std::nullopt;
    return it->second;
  }
  bool is_inner(const GroupMap& f) const { return conjugator(f).has_value(); }
  const std::vector<elem>& gens() const { return gens_; }

 private:
  std::vector<elem> gens_;
  std::map<std::vector<elem>, elem> by_images_;
};

inline bool is_inner(const Group& g, const GroupMap& f) { return inner_lookup(g).is_inner(f); }

struct AutcReport {
  Group group;
  std::vector<elem> generating_set;
  std::uint64_t autc_order = 0;
  std::uint64_t inn_order = 0;
  bool outc_trivial = true;
  std::optional<GroupMap> witness;  // a non-inner class-preserving automorphism
  std::uint64_t search_nodes = 0;
};

struct AutcResult {
  std::vector<GroupMap> maps;
  AutcReport report;
};

/// All class-preserving automorphisms: generator images range over their conjugacy
/// classes, partial maps are pruned by multiplicative consistency and by requiring
/// every determined element to stay in its class.
inline AutcResult enumerate_autc(const Group& g, const limits& lim = {}, std::size_t workers = default_workers()) {
  if (g.order() > lim.max_autc_order)
    throw error(errc::order_cap, "enumerate_autc: order " + std::to_string(g.order()) + " > cap " +
                                     std::to_string(lim.max_autc_order));
  const auto classes = conjugacy_classes(g);
  const auto cid = class_index(g, classes);
  const auto pr = automorphism_problem(g, cid);
  search_stats stats;
  auto raw = collect_homomorphisms(pr, [](const std::vector<elem>&) { return true; }, lim.search_budget, workers, &stats);

  AutcResult res;
  res.report.group = g;
  res.report.generating_set = pr.gens;
  res.report.search_nodes = stats.nodes;
  res.report.inn_order = g.order() / center(g).order();
  const inner_lookup inner(g);
  for (auto& im : raw) {
    GroupMap f(g, g, std::move(im));
    if (!f.is_bijective() || !maps_into_classes(f, cid))
      throw error(errc::claim_failed, "search produced a map that is not a class-preserving bijection");
    if (!res.report.witness && !inner.is_inner(f)) res.report.witness = f;
    res.maps.push_back(std::move(f));
  }
  res.report.autc_order = res.maps.size();
  res.report.outc_trivial = !res.report.witness.has_value();
  if (res.report.outc_trivial != (res.report.autc_order == res.report.inn_order) ||
      res.report.autc_order % res.report.inn_order != 0)
    throw error(errc::claim_failed, "Aut_c count inconsistent with Inn(G)");
  return res;
}

inline AutcReport outc_trivial(const Group& g, const limits& lim = {}, std::size_t workers = default_workers()) {
  return enumerate_autc(g, lim, workers).report;
}

/// Least n >= 0 with beta = alpha^n, searching n below the order of alpha.
inline std::optional<std::uint64_t> power_of(const GroupMap& alpha, const GroupMap& beta) {
  require_automorphism(alpha.source(), alpha, "alpha");
  require_automorphism(alpha.source(), beta, "beta");
  const auto& a = alpha.images();
  std::vector<elem> cur(a.size());
  std::iota(cur.begin(), cur.end(), 0);
  for (std::uint64_t n = 0;; ++n) {
    if (cur == beta.images()) return n;
    for (auto& y : cur) y = a[y];
    bool back_to_id = true;
    for (elem x = 0; x < cur.size() && back_to_id; ++x) back_to_id = cur[x] == x;
    if (back_to_id) return std::nullopt;
  }
}

/// orbit_id[x] numbers the <alpha>-orbits, in order of smallest member.
inline std::vector<std::uint32_t> orbit_labels(const std::vector<elem>& alpha) {
  constexpr auto unset = ~std::uint32_t{0};
  std::vector<std::uint32_t> id(alpha.size(), unset);
  std::uint32_t next = 0;
  for (elem x = 0; x < alpha.size(); ++x) {
    if (id[x] != unset) continue;
    for (elem y = x; id[y] == unset; y = alpha[y]) id[y] = next;
    ++next;
  }
  return id;
}

/// For every g there is n with g beta = g alpha^n.
inline bool locally_power(const Group& g, const GroupMap& alpha, const GroupMap& beta) {
  require_automorphism(g, alpha, "alpha");
  require_automorphism(g, beta, "beta");
  const auto orbit = orbit_labels(alpha.images());
  for (elem x = 0; x < g.order(); ++x)
    if (orbit[beta(x)] != orbit[x]) return false;
  return true;
}

inline bool commute(const GroupMap& a, const GroupMap& b) { return a.then(b) == b.then(a); }

struct IspowerGroupReport {
  std::uint64_t p = 0;
  std::size_t order = 0;
  std::size_t automorphisms_of_p_power_order = 0;
  std::size_t pairs_checked = 0;  // commuting p-power pairs with the pointwise-power property
  std::optional<std::pair<GroupMap, GroupMap>> counterexample;
};

/// Exhaustive check of the pointwise-power lemma on one finite p-group: every commuting
/// pair (alpha, beta) of p-power-order automorphisms with g beta in g<alpha> for all g must
/// have beta in <alpha>. For each alpha the candidates beta are exactly the automorphisms
/// mapping each element into its own <alpha>-orbit, found by the labelled search.
inline IspowerGroupReport ispower_scan(const Group& g, const limits& lim = {}, std::size_t workers = default_workers()) {
  auto p = prime_power_base(g.order());
  if (!p) throw error(errc::precondition_failed, "ispower_scan needs a nontrivial p-group");
  IspowerGroupReport rep;
  rep.p = *p;
  rep.order = g.order();
  auto p_power_order = [&](const std::vector<elem>& im) {
    std::vector<elem> cur = im;
    for (std::uint64_t k = 1; k <= g.order(); ++k) {
      bool id = true;
      for (elem x = 0; x < cur.size() && id; ++x) id = cur[x] == x;
      if (id) return is_power_of(k, *p);
      for (auto& y : cur) y = im[y];
    }
    return false;
  };
  const auto base = automorphism_problem(g, element_orders(g));
  const auto alphas = collect_homomorphisms(base, p_power_order, lim.search_budget, workers);
  rep.automorphisms_of_p_power_order = alphas.size();

  std::vector<std::size_t> pairs(alphas.size(), 0);
  std::vector<std::optional<std::vector<elem>>> bad(alphas.size());
  parallel_for(
      alphas.size(),
      [&](std::size_t i) {
        const auto& a = alphas[i];
        hom_problem pr{g, g, base.gens, orbit_labels(a), {}, true};
        pr.tgt_label = pr.src_label;
        auto betas = collect_homomorphisms(
            pr,
            [&](const std::vector<elem>& b) {
              for (elem x = 0; x < b.size(); ++x)
                if (b[a[x]] != a[b[x]]) return false;
              return p_power_order(b);
            },
            lim.search_budget, 1);
        pairs[i] = betas.size();
        for (auto& b : betas) {
          if (!power_of(GroupMap(g, g, a), GroupMap(g, g, b))) {
            bad[i] = std::move(b);
            break;
          }
        }
      },
      workers);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    rep.pairs_checked += pairs[i];
    if (bad[i] && !rep.counterexample)
      rep.counterexample = std::make_pair(GroupMap(g, g, alphas[i]), GroupMap(g, g, *bad[i]));
  }
  if (rep.counterexample && g.is_abelian())
    throw error(errc::counterexample_found, "abelian group of order " + std::to_string(g.order()) +
                                                " has a pointwise-power pair that is not a power");
  return rep;
}

/// n0 in N whose stabilizer in H equals the kernel of the action, for an abelian
/// p'-group H acting on a p-group N. Returns the smallest such index.
inline elem find_hn_witness(const Action& act) {
  const Group& n = act.acted();
  const Group& h = act.actor();
  const auto p = prime_power_base(n.order());
  if (n.order() > 1 && !p) throw error(errc::precondition_failed, "N is not a p-group");
  if (!h.is_abelian()) throw error(errc::precondition_failed, "H is not abelian");
  if (p && h.order() % *p == 0) throw error(errc::precondition_failed, "|H| is not coprime to p");
  if (!act.is_valid()) throw error(errc::precondition_failed, "not a valid action");
  const auto ker = act.kernel();
  for (elem x = 0; x < n.order(); ++x)
    if (act.stabilizer(x) == ker) return x;
  throw error(errc::no_witness, "no element has stabilizer equal to the kernel");
}

/// (gamma sigma)^r with r the p'-part of the order of gamma sigma (gamma applied first).
/// The result is checked to be class-preserving of p-power order, and inner iff sigma is.
inline GroupMap p_part_normalize(const Group& g, const GroupMap& sigma, const GroupMap& gamma, std::uint64_t p) {
  if (!is_prime(p)) throw error(errc::precondition_failed, "p must be prime");
  require_automorphism(g, sigma, "sigma");
  require_automorphism(g, gamma, "gamma");
  const auto cid = class_index(g, conjugacy_classes(g));
  if (!maps_into_classes(sigma, cid)) throw error(errc::precondition_failed, "sigma is not class-preserving");
  const auto sigma_order = map_order(sigma);
  if (!sigma_order || !is_power_of(sigma_order, p)) throw error(errc::precondition_failed, "sigma does not have p-power order");
  const inner_lookup inner(g);
  if (!inner.is_inner(gamma)) throw error(errc::precondition_failed, "gamma is not inner");

  const auto prod = gamma.then(sigma);
  const auto m = map_order(prod);
  if (!m) throw error(errc::precondition_failed, "order of gamma sigma exceeds the iteration cap");
  const auto r = p_prime_part(m, p);
  auto out = power(prod, static_cast<long long>(r));
  const auto out_order = map_order(out);
  if (!maps_into_classes(out, cid) || !out_order || !is_power_of(out_order, p))
    throw error(errc::claim_failed, "(gamma sigma)^r is not class-preserving of p-power order");
  if (inner.is_inner(out) != inner.is_inner(sigma))
    throw error(errc::claim_failed, "(gamma sigma)^r and sigma differ in innerness");
  return out;
}

}  // namespace fgt
