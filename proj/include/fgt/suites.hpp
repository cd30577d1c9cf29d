#pragma once

// Verification suites over the pinned catalog. Each suite counts cases and keeps the
// first failure together with an input that reproduces it.

#include <functional>
#include <random>

#include "fgt/catalog.hpp"
#include "fgt/io.hpp"
#include "fgt/kappa_example.hpp"
#include "fgt/oracles.hpp"

namespace fgt::suites {

struct SuiteResult {
  std::string name;
  std::size_t run = 0;
  std::size_t passed = 0;
  std::optional<std::string> failure;  // input + violated claim, present iff passed < run

  bool ok() const { return passed == run; }
};

enum class level { quick, full };

inline std::string_view to_string(level l) { return l == level::quick ? "quick" : "full"; }

inline level parse_level(std::string_view s) {
  if (s == "quick") return level::quick;
  if (s == "full") return level::full;
  throw error(errc::bad_params, "level must be 'quick' or 'full'");
}

inline std::size_t max_order(level l) { return l == level::quick ? 64 : 128; }

struct context {
  level lvl = level::quick;
  limits lim;
  std::size_t workers = default_workers();
};

namespace detail {

/// Records one case; a thrown fgt::error counts as a failure with its message.
class recorder {
 public:
  explicit recorder(std::string name) { res_.name = std::move(name); }

  void check(const std::string& input, const std::function<std::optional<std::string>()>& body) {
    ++res_.run;
    std::optional<std::string> bad;
    try {
      bad = body();
    } catch (const error& e) {
      bad = std::string(e.what());
    }
    if (!bad) {
      ++res_.passed;
    } else if (!res_.failure) {
      res_.failure = input + ": " + *bad;
    }
  }

  SuiteResult done() { return std::move(res_); }

 private:
  SuiteResult res_;
};

inline std::string builtin(const std::string& spec) { return "builtin " + spec; }

inline std::vector<catalog::Entry> entries_upto(std::size_t cap) {
  std::vector<catalog::Entry> out;
  for (const auto& e : catalog::manifest())
    if (e.order <= cap) out.push_back(e);
  return out;
}

inline std::optional<std::string> outc_claim(const Group& g, const context& ctx) {
  const auto rep = outc_trivial(g, ctx.lim, ctx.workers);
  if (rep.outc_trivial) return std::nullopt;
  return "Out_c(G) is nontrivial (|Aut_c| = " + std::to_string(rep.autc_order) + ", |Inn| = " +
         std::to_string(rep.inn_order) + ")";
}

/// Partitions of k as non-increasing part lists.
inline void partitions(std::size_t k, std::size_t max_part, std::vector<std::size_t>& cur,
                       std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t part = std::min(k, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(k - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Abelian p-groups of order p^k for 1 <= k <= max_k, as catalog specs.
inline std::vector<std::string> abelian_p_groups(std::uint64_t p, std::size_t max_k) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> cur;
    detail::partitions(k, k, cur, parts);
    for (const auto& pt : parts) {
      std::string spec = "abelian:";
      for (std::size_t i = 0; i < pt.size(); ++i) {
        std::uint64_t q = 1;
        for (std::size_t e = 0; e < pt[i]; ++e) q *= p;
        spec += (i ? "," : "") + std::to_string(q);
      }
      out.push_back(spec);
    }
  }
  return out;
}

inline SuiteResult class_equation(const context& ctx) {
  detail::recorder r("class_equation");
  for (const auto& e : detail::entries_upto(max_order(ctx.lvl)))
    r.check(detail::builtin(e.spec), [&] { return oracle::class_equation_violation(catalog::build(e.spec, ctx.lim)); });
  return r.done();
}

/// Subgroup lattice invariants, the two normality tests, and the Dedekind shortcut.
inline SuiteResult subgroups(const context& ctx) {
  detail::recorder r("subgroups");
  for (const auto& e : detail::entries_upto(max_order(ctx.lvl))) {
    r.check(detail::builtin(e.spec), [&]() -> std::optional<std::string> {
      const auto g = catalog::build(e.spec, ctx.lim);
      for (const auto& h : all_subgroups(g, ctx.lim)) {
        if (g.order() % h.order()) return "subgroup order does not divide |G|";
        if (!(subgroup_closure(g, h.members()) == h)) return "closure of a subgroup differs from it";
        if (is_normal(g, h) != is_normal_by_definition(g, h)) return "normality tests disagree";
      }
      if (is_dedekind(g) != oracle::is_dedekind_lattice(g, ctx.lim)) return "is_dedekind disagrees with the lattice";
      return std::nullopt;
    });
  }
  return r.done();
}

inline SuiteResult r_oracle(const context& ctx) {
  detail::recorder r("r_oracle");
  for (const auto& e : detail::entries_upto(max_order(ctx.lvl))) {
    r.check(detail::builtin(e.spec), [&]() -> std::optional<std::string> {
      const auto g = catalog::build(e.spec, ctx.lim);
      const auto fast = r_of(g, ctx.lim), slow = oracle::r_of_lattice(g, ctx.lim);
      if (fast.tag != slow.tag) return "R tag " + std::string(to_string(fast.tag)) + " vs lattice " + std::string(to_string(slow.tag));
      if (fast.subgroup && !(*fast.subgroup == *slow.subgroup)) return "R(G) differs from the lattice intersection";
      return std::nullopt;
    });
  }
  return r.done();
}

/// enumerate_autc equals Aut(G) filtered by class preservation (orders <= 64).
inline SuiteResult autc_oracle(const context& ctx) {
  detail::recorder r("autc_oracle");
  for (const auto& e : detail::entries_upto(64)) {
    r.check(detail::builtin(e.spec), [&]() -> std::optional<std::string> {
      const auto g = catalog::build(e.spec, ctx.lim);
      const auto res = enumerate_autc(g, ctx.lim, ctx.workers);
      std::vector<std::vector<elem>> fast;
      for (const auto& f : res.maps) {
        if (!f.is_automorphism() || !is_class_preserving(g, f)) return "enumerated map is not class-preserving";
        fast.push_back(f.images());
      }
      std::sort(fast.begin(), fast.end());
      const auto slow = oracle::class_preserving_by_filter(g);
      if (fast != slow)
        return "|Aut_c| = " + std::to_string(fast.size()) + " but filter gives " + std::to_string(slow.size());
      return std::nullopt;
    });
  }
  return r.done();
}

/// Groups with an abelian subgroup of index 2 have Out_c = 1 (orders <= 64).
inline SuiteResult index_two_abelian(const context& ctx) {
  detail::recorder r("index_two_abelian");
  for (const auto& e : detail::entries_upto(64)) {
    const auto g = catalog::build(e.spec, ctx.lim);
    if (!oracle::has_abelian_index_two(g)) continue;
    r.check(detail::builtin(e.spec), [&] { return detail::outc_claim(g, ctx); });
  }
  return r.done();
}

/// A normal abelian with G/A having a normal cyclic Sylow p: class-preserving
/// automorphisms of p-power order are inner.
inline SuiteResult cyclic_sylow_quotient(const context& ctx) {
  detail::recorder r("cyclic_sylow_quotient");
  for (const auto& e : detail::entries_upto(std::min<std::size_t>(max_order(ctx.lvl), 100))) {
    const auto g = catalog::build(e.spec, ctx.lim);
    const auto primes = oracle::cyclic_sylow_primes(g, ctx.lim);
    if (primes.empty()) continue;
    r.check(detail::builtin(e.spec), [&]() -> std::optional<std::string> {
      const auto res = enumerate_autc(g, ctx.lim, ctx.workers);
      const inner_lookup inner(g);
      for (const auto& f : res.maps) {
        const auto ord = map_order(f);
        for (auto p : primes)
          if (is_power_of(ord, p) && !inner.is_inner(f))
            return "non-inner class-preserving automorphism of order " + std::to_string(ord) + " (p = " + std::to_string(p) + ")";
      }
      return std::nullopt;
    });
  }
  return r.done();
}

/// Abelian-by-cyclic groups have Out_c = 1 (orders <= 100; quick stops at 64).
inline SuiteResult abelian_by_cyclic(const context& ctx) {
  detail::recorder r("abelian_by_cyclic");
  for (const auto& e : detail::entries_upto(std::min<std::size_t>(max_order(ctx.lvl), 100))) {
    const auto g = catalog::build(e.spec, ctx.lim);
    if (!oracle::is_abelian_by_cyclic(g, ctx.lim)) continue;
    r.check(detail::builtin(e.spec), [&] { return detail::outc_claim(g, ctx); });
  }
  return r.done();
}

/// A x| Q with Q generalized quaternion acting by power maps and a Sylow 2-subgroup
/// with an abelian subgroup of index 2: Out_c = 1. Hypotheses are checked per instance.
inline SuiteResult abelian_by_quaternion(const context& ctx) {
  detail::recorder r("abelian_by_quaternion");
  for (const auto& e : detail::entries_upto(max_order(ctx.lvl))) {
    if (e.spec.rfind("aq:", 0) != 0) continue;
    r.check(detail::builtin(e.spec), [&]() -> std::optional<std::string> {
      const auto g = catalog::build(e.spec, ctx.lim);
      const auto semi = e.spec.find(';');
      const auto qorder = std::stoul(e.spec.substr(semi + 1));
      const auto na = g.order() / qorder;
      // (a, y) has index a + |A| y: A is the first na indices, Q the multiples of na.
      element_set amask(g.order());
      for (elem a = 0; a < na; ++a) amask.set(a);
      const Subgroup a(g, amask);
      if (!is_abelian(a) || !is_normal(g, a)) return "A is not an abelian normal subgroup";
      for (elem y = 0; y < qorder; ++y) {
        const elem qy = static_cast<elem>(y * na);
        bool power_map = false;
        for (std::uint64_t k = 0; k < exponent(a) + 1 && !power_map; ++k) {
          power_map = true;
          for (elem x = 0; x < na && power_map; ++x) power_map = g.conj(x, qy) == g.pow(x, static_cast<long long>(k));
        }
        if (!power_map) return "an element of Q does not act by a fixed power";
      }
      const auto s = as_group(sylow(g, 2));
      if (!oracle::has_abelian_index_two(s.group)) return "Sylow 2-subgroup has no abelian subgroup of index 2";
      return detail::outc_claim(g, ctx);
    });
  }
  return r.done();
}

inline SuiteResult blackburn_outc(const context& ctx) {
  detail::recorder r("blackburn_outc");
  for (const auto& e : detail::entries_upto(max_order(ctx.lvl))) {
    const auto g = catalog::build(e.spec, ctx.lim);
    if (!is_blackburn(g, ctx.lim)) continue;
    r.check(detail::builtin(e.spec), [&] { return detail::outc_claim(g, ctx); });
  }
  return r.done();
}

/// Blackburn 2-groups get exactly one shape label.
inline SuiteResult blackburn_forms(const context& ctx) {
  detail::recorder r("blackburn_forms");
  for (const auto& e : detail::entries_upto(max_order(ctx.lvl))) {
    const auto g = catalog::build(e.spec, ctx.lim);
    if (prime_power_base(g.order()) != std::optional<std::uint64_t>(2) || !is_blackburn(g, ctx.lim)) continue;
    r.check(detail::builtin(e.spec), [&]() -> std::optional<std::string> {
      (void)blackburn_2group_form(g, ctx.lim);
      return std::nullopt;
    });
  }
  return r.done();
}

/// q-elements of a Blackburn group form a normal q-subgroup with all subgroups normal.
inline SuiteResult qdifp(const context& ctx) {
  detail::recorder r("qdifp");
  for (const auto& e : detail::entries_upto(max_order(ctx.lvl))) {
    const auto g = catalog::build(e.spec, ctx.lim);
    if (!is_blackburn(g, ctx.lim)) continue;
    const auto p = r_prime(g, ctx.lim);
    for (auto q : prime_divisors(g.order())) {
      if (q == p) continue;
      r.check(detail::builtin(e.spec) + " q=" + std::to_string(q), [&]() -> std::optional<std::string> {
        const auto rep = verify_qdifp(g, q, ctx.lim);
        if (rep.ok()) return std::nullopt;
        return rep.violations.front();
      });
    }
  }
  return r.done();
}

/// Every normal subgroup of a Blackburn group falls in case (a), (b) or (c).
inline SuiteResult fnsgp(const context& ctx) {
  detail::recorder r("fnsgp");
  for (const auto& e : detail::entries_upto(max_order(ctx.lvl))) {
    const auto g = catalog::build(e.spec, ctx.lim);
    if (!is_blackburn(g, ctx.lim)) continue;
    const auto normals = normal_subgroups(g, ctx.lim);
    for (std::size_t i = 0; i < normals.size(); ++i) {
      r.check(detail::builtin(e.spec) + " normal#" + std::to_string(i), [&]() -> std::optional<std::string> {
        const auto v = verify_fnsgp(g, normals[i], ctx.lim);
        if (v.case_c_data.has_value() != (v.which == fnsgp_case::c)) return "case (c) data inconsistent with the case";
        return std::nullopt;
      });
    }
  }
  return r.done();
}

struct HnInstance {
  std::string n_spec;
  std::string h_spec;
  Action action;
  std::string description;
};

/// Deterministic (N, H, action) instances: N a p-group of order <= 64, H abelian of
/// p'-order <= 15, action given by commuting automorphisms of N chosen by a fixed seed.
inline std::vector<HnInstance> hn_instances(std::size_t count = 50, std::uint32_t seed = 20061) {
  struct shape {
    std::string n;
    std::uint64_t p;
  };
  const std::vector<shape> ns = {
      {"cyclic:3", 3},        {"abelian:3,3", 3},  {"cyclic:9", 3},       {"abelian:9,3", 3},
      {"abelian:3,3,3", 3},   {"cyclic:5", 5},     {"abelian:5,5", 5},    {"cyclic:7", 7},
      {"abelian:2,2", 2},     {"abelian:2,2,2", 2}, {"abelian:4,2", 2},   {"abelian:2,2,2,2", 2},
      {"quaternion:8", 2},    {"dihedral:8", 2},   {"abelian:4,4", 2},    {"metacyclic:9,3,4", 3},
      {"cyclic:27", 3},       {"abelian:8,2", 2},  {"abelian:3,3,3", 3},  {"abelian:4,2,2", 2},
  };
  const std::vector<std::vector<std::size_t>> hs = {{2}, {3}, {4}, {5}, {6}, {7}, {8}, {9}, {10}, {11}, {12},
                                                    {13}, {14}, {15}, {2, 2}, {4, 2}, {3, 3}, {6, 2}};
  std::mt19937 rng(seed);
  std::map<std::string, std::vector<GroupMap>> aut_cache;
  std::vector<HnInstance> out;
  while (out.size() < count) {
    const auto& sn = ns[rng() % ns.size()];
    std::vector<std::vector<std::size_t>> fits;
    for (const auto& h : hs) {
      std::size_t order = 1;
      for (auto c : h) order *= c;
      if (order % sn.p) fits.push_back(h);
    }
    const auto& hf = fits[rng() % fits.size()];
    const Group n = catalog::build(sn.n);
    auto& auts = aut_cache[sn.n];
    if (auts.empty()) auts = automorphisms(n);

    // images of H's cyclic factors: commuting, with order dividing the factor order
    std::vector<GroupMap> chosen;
    for (auto c : hf) {
      std::vector<const GroupMap*> ok;
      for (const auto& f : auts) {
        if (c % map_order(f)) continue;
        bool commutes = true;
        for (const auto& prev : chosen) commutes = commutes && commute(prev, f);
        if (commutes) ok.push_back(&f);
      }
      chosen.push_back(*ok[rng() % ok.size()]);
    }
    std::string hspec = "abelian:";
    for (std::size_t i = 0; i < hf.size(); ++i) hspec += (i ? "," : "") + std::to_string(hf[i]);
    const Group h = catalog::build(hspec);
    // element of abelian(hf) with coordinates (c0, c1, ..) acts as chosen[0]^c0 chosen[1]^c1 ..
    std::vector<std::vector<elem>> maps(h.order());
    for (elem y = 0; y < h.order(); ++y) {
      auto f = GroupMap::identity(n);
      std::size_t rest = y;
      for (std::size_t i = 0; i < hf.size(); ++i) {
        f = f.then(power(chosen[i], static_cast<long long>(rest % hf[i])));
        rest /= hf[i];
      }
      maps[y] = f.images();
    }
    std::string desc = "N=" + sn.n + " H=" + hspec + " gens->";
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      desc += i ? ";" : "";
      for (elem x = 0; x < n.order(); ++x) desc += (x ? "," : "") + std::to_string(chosen[i](x));
    }
    out.push_back({sn.n, hspec, Action(h, n, std::move(maps)), std::move(desc)});
  }
  return out;
}

inline SuiteResult hn_witness(const context&) {
  detail::recorder r("hn_witness");
  for (const auto& inst : hn_instances()) {
    r.check(inst.description, [&]() -> std::optional<std::string> {
      const auto& act = inst.action;
      if (!act.is_valid()) return "generated action is not valid";
      const elem n0 = find_hn_witness(act);
      // kernel and stabilizer recomputed from the maps
      const Group& h = act.actor();
      const Group& n = act.acted();
      for (elem y = 0; y < h.order(); ++y) {
        bool in_kernel = true;
        for (elem x = 0; x < n.order() && in_kernel; ++x) in_kernel = act.apply(y, x) == x;
        if (in_kernel != (act.apply(y, n0) == n0)) return "stabilizer of " + std::to_string(n0) + " differs from the kernel";
      }
      return std::nullopt;
    });
  }
  return r.done();
}

/// Pointwise-power lemma over abelian p-groups, plus the nonabelian contrast case.
inline SuiteResult ispower(const context& ctx) {
  detail::recorder r("ispower");
  const bool full = ctx.lvl == level::full;
  std::vector<std::string> specs = abelian_p_groups(2, full ? 5 : 4);
  for (const auto& s : abelian_p_groups(3, full ? 4 : 3)) specs.push_back(s);
  for (const auto& s : specs) {
    r.check(detail::builtin(s), [&]() -> std::optional<std::string> {
      const auto rep = ispower_scan(catalog::build(s, ctx.lim), ctx.lim, ctx.workers);
      if (rep.counterexample) return "pair with beta not a power of alpha";
      return std::nullopt;
    });
  }
  r.check("paper G (p=3), expected negative", [&]() -> std::optional<std::string> {
    const auto b = kappa::build_bundle(3, ctx.lim);
    const auto oa = map_order(b.alpha), ob = map_order(b.beta);
    if (!is_power_of(oa, 3) || !is_power_of(ob, 3)) return "alpha or beta is not of 3-power order";
    if (!commute(b.alpha, b.beta)) return "alpha and beta do not commute";
    if (!locally_power(b.g, b.alpha, b.beta)) return "pointwise-power hypothesis fails";
    if (power_of(b.alpha, b.beta)) return "beta is a power of alpha";
    return std::nullopt;
  });
  return r.done();
}

/// (gamma sigma)^r stays class-preserving of p-power order, inner iff sigma is.
inline SuiteResult p_part(const context& ctx) {
  detail::recorder r("p_part");
  for (const auto& e : detail::entries_upto(32)) {
    const auto g = catalog::build(e.spec, ctx.lim);
    if (g.order() == 1) continue;
    r.check(detail::builtin(e.spec), [&]() -> std::optional<std::string> {
      const auto res = enumerate_autc(g, ctx.lim, ctx.workers);
      const inner_lookup inner(g);
      for (auto p : prime_divisors(g.order()))
        for (const auto& sigma : res.maps) {
          if (!is_power_of(map_order(sigma), p)) continue;
          for (elem c = 0; c < g.order(); ++c) {
            const auto out = p_part_normalize(g, sigma, inner_automorphism(g, c), p);
            if (inner.is_inner(out) != inner.is_inner(sigma)) return "innerness changed";
          }
        }
      return std::nullopt;
    });
  }
  if (ctx.lvl == level::full) {
    r.check("paper G<alpha> (p=3)", [&]() -> std::optional<std::string> {
      auto b = kappa::build_bundle(3, ctx.lim);
      kappa::extend_to_ga(b, ctx.lim);
      for (elem c : {elem{1}, b.t, static_cast<elem>(b.h + b.t)}) {
        const auto out = p_part_normalize(b.ga, b.sigma, inner_automorphism(b.ga, c), 3);
        if (is_inner(b.ga, out)) return "normalized sigma became inner";
      }
      return std::nullopt;
    });
  }
  return r.done();
}

/// serialize then parse gives the same table.
inline SuiteResult round_trip(const context& ctx) {
  detail::recorder r("round_trip");
  for (const auto& e : detail::entries_upto(max_order(ctx.lvl))) {
    r.check(detail::builtin(e.spec), [&]() -> std::optional<std::string> {
      const auto g = catalog::build(e.spec, ctx.lim);
      const auto back = io::parse_cayley(io::serialize_cayley(g), ctx.lim);
      if (!(back == g)) return "re-parsed table differs";
      return std::nullopt;
    });
  }
  return r.done();
}

inline SuiteResult example(const context& ctx) {
  detail::recorder r("example");
  for (std::uint64_t p : {3, 5}) {
    r.check("example p=" + std::to_string(p), [&]() -> std::optional<std::string> {
      const auto rep = kappa::verify_example(p, ctx.lim, ctx.workers);
      for (const auto& c : rep.claims)
        if (!c.holds) return "claim failed: " + c.name;
      if (p == 3 && (!rep.sigma_class_preserving || rep.sigma_inner)) return "sigma is not a class-preserving non-inner map";
      return std::nullopt;
    });
  }
  return r.done();
}

struct suite_entry {
  std::string_view name;
  SuiteResult (*run)(const context&);
  bool full_only;
};

inline const std::vector<suite_entry>& registry() {
  static const std::vector<suite_entry> all = {
      {"class_equation", class_equation, false},
      {"subgroups", subgroups, false},
      {"round_trip", round_trip, false},
      {"r_oracle", r_oracle, false},
      {"autc_oracle", autc_oracle, false},
      {"index_two_abelian", index_two_abelian, false},
      {"cyclic_sylow_quotient", cyclic_sylow_quotient, false},
      {"abelian_by_cyclic", abelian_by_cyclic, false},
      {"abelian_by_quaternion", abelian_by_quaternion, false},
      {"blackburn_outc", blackburn_outc, false},
      {"blackburn_forms", blackburn_forms, false},
      {"qdifp", qdifp, false},
      {"fnsgp", fnsgp, false},
      {"hn_witness", hn_witness, false},
      {"p_part", p_part, false},
      {"ispower", ispower, false},
      {"example", example, true},
  };
  return all;
}

/// Runs every suite of the level, or just the named one.
inline std::vector<SuiteResult> run(const context& ctx, std::string_view only = {}) {
  std::vector<SuiteResult> out;
  bool found = only.empty();
  for (const auto& s : registry()) {
    if (!only.empty() && s.name != only) continue;
    found = true;
    if (s.full_only && ctx.lvl == level::quick && only.empty()) continue;
    out.push_back(s.run(ctx));
  }
  if (!found) throw error(errc::bad_params, "unknown suite '" + std::string(only) + "'");
  return out;
}

}  // namespace fgt::suites
