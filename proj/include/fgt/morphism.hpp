#pragma once

// Backtracking search for homomorphisms given by images of a generating sequence.
//
// A partial assignment on generators g_1..g_k is extended to the subgroup they generate
// by walking the right Cayley graph: f(x g_j) must equal f(x) f(g_j). A full assignment
// with no conflict is a homomorphism, since these edge relations determine f on words.
// Each element's image is constrained by a label: f(x) must carry the same label as x.

#include <atomic>
#include <functional>
#include <optional>

#include "fgt/parallel.hpp"
#include "fgt/structure.hpp"

namespace fgt {

struct hom_problem {
  Group source;
  Group target;
  std::vector<elem> gens;                // generating sequence of source
  std::vector<std::uint32_t> src_label;  // per source element
  std::vector<std::uint32_t> tgt_label;  // per target element
  bool injective = true;
};

namespace detail {

class hom_state {
 public:
  static constexpr elem unset = ~elem{0};

  explicit hom_state(const hom_problem& pr)
      : pr_(pr), img_(pr.source.order(), unset), used_(pr.target.order()) {
    img_[0] = 0;
    used_.set(0);
    members_.push_back(0);
  }

  std::size_t depth() const { return level_start_.size(); }
  const std::vector<elem>& images() const { return img_; }

  /// Assigns generator `depth()` to t; false (state unchanged) on conflict.
  bool push(elem t) {
    const std::size_t k = depth();
    const elem g = pr_.gens[k];
    const std::size_t old = members_.size();
    level_start_.push_back(old);
    const Group& s = pr_.source;
    const Group& d = pr_.target;
    for (std::size_t i = 0; i < old; ++i) {
      const elem x = members_[i];
      if (!assign(s.mul(x, g), d.mul(img_[x], t))) return rollback();
    }
    for (std::size_t i = old; i < members_.size(); ++i) {
      const elem x = members_[i];
      for (std::size_t j = 0; j <= k; ++j) {
        const elem gj = pr_.gens[j];
        if (!assign(s.mul(x, gj), d.mul(img_[x], img_[gj]))) return rollback();
      }
    }
    return true;
  }

  void pop() { rollback(); }

 private:
  bool assign(elem y, elem fy) {
    const elem cur = img_[y];
    if (cur != unset) return cur == fy;
    if (pr_.src_label[y] != pr_.tgt_label[fy]) return false;
    if (pr_.injective) {
      if (used_.test(fy)) return false;
      used_.set(fy);
    }
    img_[y] = fy;
    members_.push_back(y);
    return true;
  }

  bool rollback() {
    const std::size_t start = level_start_.back();
    level_start_.pop_back();
    for (std::size_t i = start; i < members_.size(); ++i) {
      if (pr_.injective) used_.reset(img_[members_[i]]);
      img_[members_[i]] = unset;
    }
    members_.resize(start);
    return false;
  }

  const hom_problem& pr_;
  std::vector<elem> img_;
  element_set used_;
  std::vector<elem> members_;
  std::vector<std::size_t> level_start_;
};

inline std::vector<std::vector<elem>> candidates(const hom_problem& pr) {
  std::vector<std::vector<elem>> out;
  for (elem g : pr.gens) {
    std::vector<elem> c;
    for (elem t = 0; t < pr.target.order(); ++t)
      if (pr.tgt_label[t] == pr.src_label[g]) c.push_back(t);
    out.push_back(std::move(c));
  }
  return out;
}

class budget_counter {
 public:
  explicit budget_counter(std::uint64_t limit) : limit_(limit) {}
  void tick() {
    if (++nodes_ > limit_)
      throw error(errc::search_budget_exceeded, "more than " + std::to_string(limit_) + " search nodes");
  }
  std::uint64_t nodes() const { return nodes_.load(); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> nodes_{0};
};

/// Depth-first search below the current state; visit(images) returns false to stop.
template <class Visit>
bool descend(hom_state& st, const std::vector<std::vector<elem>>& cand, budget_counter& budget, Visit& visit) {
  const std::size_t k = st.depth();
  if (k == cand.size()) return visit(st.images());
  for (elem t : cand[k]) {
    budget.tick();
    if (!st.push(t)) continue;
    const bool go_on = descend(st, cand, budget, visit);
    st.pop();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

/// Statistics of a completed search.
struct search_stats {
  std::uint64_t nodes = 0;
};

/// All homomorphisms of the problem accepted by keep(images), in canonical order
/// (lexicographic in the candidate lists). Top-level branches run on `workers` threads;
/// keep must be safe to call concurrently.
template <class Keep>
std::vector<std::vector<elem>> collect_homomorphisms(const hom_problem& pr, Keep keep, std::uint64_t budget_limit,
                                                     std::size_t workers = default_workers(),
                                                     search_stats* stats = nullptr) {
  const auto cand = detail::candidates(pr);
  detail::budget_counter budget(budget_limit);
  std::vector<std::vector<elem>> out;
  if (cand.empty()) {
    std::vector<elem> id(pr.source.order(), 0);
    if (keep(id)) out.push_back(id);
    if (stats) stats->nodes = 0;
    return out;
  }
  std::vector<std::vector<std::vector<elem>>> per_branch(cand[0].size());
  parallel_for(
      cand[0].size(),
      [&](std::size_t b) {
        detail::hom_state st(pr);
        budget.tick();
        if (!st.push(cand[0][b])) return;
        auto& sink = per_branch[b];
        auto visit = [&](const std::vector<elem>& im) {
          if (keep(im)) sink.push_back(im);
          return true;
        };
        detail::descend(st, cand, budget, visit);
      },
      workers);
  for (auto& v : per_branch)
    for (auto& m : v) out.push_back(std::move(m));
  if (stats) stats->nodes = budget.nodes();
  return out;
}

/// First homomorphism in canonical order, single-threaded.
inline std::optional<std::vector<elem>> find_homomorphism(const hom_problem& pr, std::uint64_t budget_limit) {
  const auto cand = detail::candidates(pr);
  detail::budget_counter budget(budget_limit);
  detail::hom_state st(pr);
  std::optional<std::vector<elem>> found;
  auto visit = [&](const std::vector<elem>& im) {
    found = im;
    return false;
  };
  detail::descend(st, cand, budget, visit);
  return found;
}

/// Automorphism search problem with each element constrained to keep its label.
inline hom_problem automorphism_problem(const Group& g, std::vector<std::uint32_t> label) {
  return hom_problem{g, g, generating_sequence(g), label, std::move(label), true};
}

/// The full automorphism group (images constrained only by element order).
inline std::vector<GroupMap> automorphisms(const Group& g, const limits& lim = {}) {
  auto pr = automorphism_problem(g, element_orders(g));
  auto maps = collect_homomorphisms(pr, [](const std::vector<elem>&) { return true; }, lim.search_budget);
  std::vector<GroupMap> out;
  out.reserve(maps.size());
  for (auto& m : maps) out.emplace_back(g, g, std::move(m));
  return out;
}

namespace detail {

/// Joint labels (element order, class size) numbered consistently across both groups.
inline std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> iso_labels(const Group& a, const Group& b) {
  std::map<std::pair<std::uint32_t, std::size_t>, std::uint32_t> ids;
  auto label = [&](const Group& g) {
    const auto cls = conjugacy_classes(g);
    std::vector<std::uint32_t> out(g.order());
    for (const auto& c : cls)
      for (elem x : c) {
        auto key = std::make_pair(g.element_order(x), c.size());
        auto it = ids.emplace(key, static_cast<std::uint32_t>(ids.size())).first;
        out[x] = it->second;
      }
    return out;
  };
  auto la = label(a);
  auto lb = label(b);
  return {std::move(la), std::move(lb)};
}

}  // namespace detail

/// Brute-force isomorphism search (element order and class size must match).
inline std::optional<GroupMap> find_isomorphism(const Group& a, const Group& b, const limits& lim = {}) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > lim.max_iso_order)
    throw error(errc::order_cap, "isomorphism test: order " + std::to_string(a.order()) + " > cap " +
                                     std::to_string(lim.max_iso_order));
  auto [la, lb] = detail::iso_labels(a, b);
  auto ha = la, hb = lb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return std::nullopt;
  hom_problem pr{a, b, generating_sequence(a), std::move(la), std::move(lb), true};
  auto im = find_homomorphism(pr, lim.search_budget);
  if (!im) return std::nullopt;
  return GroupMap(a, b, std::move(*im));
}

inline bool are_isomorphic(const Group& a, const Group& b, const limits& lim = {}) {
  return find_isomorphism(a, b, lim).has_value();
}

}  // namespace fgt
