#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <unordered_set>

#include "fgt/group.hpp"

namespace fgt {

// ---- integer helpers -------------------------------------------------------

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

/// Largest power of p dividing n.
inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// Largest divisor of n coprime to p.
inline std::uint64_t p_prime_part(std::uint64_t n, std::uint64_t p) { return n / p_part(n, p); }

inline bool is_power_of(std::uint64_t n, std::uint64_t p) { return p_part(n, p) == n; }

/// Prime p if n = p^k with k >= 1, else nullopt.
inline std::optional<std::uint64_t> prime_power_base(std::uint64_t n) {
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return std::nullopt;
  return ps[0];
}

// ---- subgroups -------------------------------------------------------------

/// Smallest subgroup containing seed.
inline Subgroup subgroup_closure(const Group& g, std::span<const elem> seed) {
  return Subgroup(g, right_closure(g, seed));
}

inline Subgroup subgroup_closure(const Group& g, std::initializer_list<elem> seed) {
  std::vector<elem> v(seed);
  return subgroup_closure(g, std::span<const elem>(v));
}

inline Subgroup cyclic_subgroup(const Group& g, elem x) {
  element_set s(g.order());
  elem y = 0;
  do {
    s.set(y);
    y = g.mul(y, x);
  } while (y != 0);
  return Subgroup(g, s);
}

/// Greedy generators of a subgroup (lowest member not yet generated).
inline std::vector<elem> generating_sequence_of(const Subgroup& h) {
  const Group& g = h.parent();
  std::vector<elem> gens;
  element_set in(g.order());
  in.set(0);
  std::vector<elem> members{0};
  for (elem c : h.members()) {
    if (in.test(c)) continue;
    gens.push_back(c);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (elem s : gens) {
        elem y = g.mul(members[i], s);
        if (!in.test(y)) {
          in.set(y);
          members.push_back(y);
        }
      }
    }
  }
  return gens;
}

/// Join of a subgroup with extra elements.
inline Subgroup join(const Subgroup& h, std::span<const elem> extra) {
  const Group& g = h.parent();
  element_set in = h.mask();
  std::vector<elem> members = h.members();
  std::vector<elem> gens = generating_sequence_of(h);
  gens.insert(gens.end(), extra.begin(), extra.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (elem s : gens) {
      elem y = g.mul(members[i], s);
      if (!in.test(y)) {
        in.set(y);
        members.push_back(y);
      }
    }
  }
  return Subgroup(g, in);
}

/// Normality test against the generators of G.
inline bool is_normal(const Group& g, const Subgroup& h) {
  const auto gens = generating_sequence(g);
  const auto hgens = generating_sequence_of(h);
  for (elem s : gens)
    for (elem x : hgens)
      if (!h.contains(g.conj(x, s))) return false;
  return true;
}

/// Normality straight from the definition: g^-1 h g in H for every g and h.
inline bool is_normal_by_definition(const Group& g, const Subgroup& h) {
  for (elem x = 0; x < g.order(); ++x)
    for (elem y : h.members())
      if (!h.contains(g.conj(y, x))) return false;
  return true;
}

inline Subgroup centralizer(const Group& g, std::span<const elem> xs) {
  element_set s(g.order());
  for (elem c = 0; c < g.order(); ++c) {
    bool ok = true;
    for (elem x : xs) {
      if (g.mul(c, x) != g.mul(x, c)) {
        ok = false;
        break;
      }
    }
    if (ok) s.set(c);
  }
  return Subgroup(g, s);
}

inline Subgroup centralizer(const Group& g, const Subgroup& h) {
  auto gens = generating_sequence_of(h);
  return centralizer(g, gens);
}

inline Subgroup center(const Group& g) {
  auto gens = generating_sequence(g);
  return centralizer(g, gens);
}

inline Subgroup normalizer(const Group& g, const Subgroup& h) {
  const auto hgens = generating_sequence_of(h);
  element_set s(g.order());
  for (elem c = 0; c < g.order(); ++c) {
    bool ok = true;
    for (elem x : hgens) {
      if (!h.contains(g.conj(x, c))) {
        ok = false;
        break;
      }
    }
    if (ok) s.set(c);
  }
  return Subgroup(g, s);
}

/// Conjugacy classes, each sorted, ordered by smallest member.
inline std::vector<std::vector<elem>> conjugacy_classes(const Group& g) {
  const auto gens = generating_sequence(g);
  std::vector<std::vector<elem>> classes;
  element_set done(g.order());
  for (elem x = 0; x < g.order(); ++x) {
    if (done.test(x)) continue;
    std::vector<elem> cls{x};
    done.set(x);
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (elem s : gens) {
        elem y = g.conj(cls[i], s);
        if (!done.test(y)) {
          done.set(y);
          cls.push_back(y);
        }
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

/// class_id[x] = index of x's class in conjugacy_classes(g).
inline std::vector<std::uint32_t> class_index(const Group& g, const std::vector<std::vector<elem>>& classes) {
  std::vector<std::uint32_t> id(g.order());
  for (std::uint32_t c = 0; c < classes.size(); ++c)
    for (elem x : classes[c]) id[x] = c;
  return id;
}

inline std::vector<std::uint32_t> element_orders(const Group& g) {
  auto o = g.element_orders();
  return {o.begin(), o.end()};
}

inline std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (auto o : g.element_orders()) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

inline std::uint64_t exponent(const Subgroup& h) {
  std::uint64_t e = 1;
  for (elem x : h.members()) e = std::lcm(e, static_cast<std::uint64_t>(h.parent().element_order(x)));
  return e;
}

inline bool is_abelian(const Subgroup& h) {
  const Group& g = h.parent();
  const auto gens = generating_sequence_of(h);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

inline bool is_cyclic(const Subgroup& h) {
  for (elem x : h.members())
    if (h.parent().element_order(x) == h.order()) return true;
  return false;
}

/// Every cyclic subgroup exactly once, ordered by the smallest generator that produces it.
inline std::vector<Subgroup> cyclic_subgroups(const Group& g) {
  std::vector<Subgroup> out;
  std::unordered_set<element_set, element_set_hash> seen;
  for (elem x = 0; x < g.order(); ++x) {
    auto c = cyclic_subgroup(g, x);
    if (seen.insert(c.mask()).second) out.push_back(std::move(c));
  }
  return out;
}

/// Full subgroup lattice by repeated joins with cyclic subgroups. Sorted by (order, mask).
inline std::vector<Subgroup> all_subgroups(const Group& g, const limits& lim = {}) {
  if (g.order() > lim.max_subgroup_enum)
    throw error(errc::order_cap, "all_subgroups: order " + std::to_string(g.order()) + " > cap " +
                                     std::to_string(lim.max_subgroup_enum));
  const auto cyc = cyclic_subgroups(g);
  std::vector<elem> cyc_gen;
  for (const auto& c : cyc) {
    for (elem x : c.members())
      if (g.element_order(x) == c.order()) {
        cyc_gen.push_back(x);
        break;
      }
  }
  std::unordered_set<element_set, element_set_hash> seen;
  std::vector<Subgroup> all;
  for (const auto& c : cyc)
    if (seen.insert(c.mask()).second) all.push_back(c);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (cyc[k].mask().subset_of(all[i].mask())) continue;
      elem x = cyc_gen[k];
      auto j = join(all[i], std::span<const elem>(&x, 1));
      if (seen.insert(j.mask()).second) all.push_back(std::move(j));
    }
  }
  std::sort(all.begin(), all.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.mask() < b.mask();
  });
  return all;
}

inline std::vector<Subgroup> normal_subgroups(const Group& g, const limits& lim = {}) {
  std::vector<Subgroup> out;
  for (auto& h : all_subgroups(g, lim))
    if (is_normal(g, h)) out.push_back(std::move(h));
  return out;
}

inline Subgroup commutator_subgroup(const Group& g) {
  std::vector<elem> comms;
  element_set seen(g.order());
  for (elem a = 0; a < g.order(); ++a)
    for (elem b = 0; b < g.order(); ++b) {
      elem c = g.commutator(a, b);
      if (!seen.test(c)) {
        seen.set(c);
        comms.push_back(c);
      }
    }
  return subgroup_closure(g, comms);
}

// ---- Sylow theory ----------------------------------------------------------

/// One Sylow p-subgroup: grow a p-subgroup by p-elements of its normalizer.
inline Subgroup sylow(const Group& g, std::uint64_t p) {
  if (!is_prime(p)) throw error(errc::bad_params, "sylow: p must be prime");
  const std::uint64_t target = p_part(g.order(), p);
  auto is_p_elem = [&](elem x) { return is_power_of(g.element_order(x), p); };
  Subgroup s = Subgroup::trivial(g);
  {
    elem best = 0;
    for (elem x = 0; x < g.order(); ++x)
      if (is_p_elem(x) && g.element_order(x) > g.element_order(best)) best = x;
    s = cyclic_subgroup(g, best);
  }
  while (s.order() < target) {
    auto nrm = normalizer(g, s);
    bool grown = false;
    // An element of N(S) \ S whose image in N(S)/S has p-power order extends S.
    for (elem x : nrm.members()) {
      if (s.contains(x)) continue;
      std::uint64_t k = 1;
      elem y = x;
      while (!s.contains(y)) {
        y = g.mul(y, x);
        ++k;
      }
      if (!is_power_of(k, p)) continue;
      auto bigger = join(s, std::span<const elem>(&x, 1));
      if (is_power_of(bigger.order(), p)) {
        s = std::move(bigger);
        grown = true;
        break;
      }
    }
    if (!grown) throw error(errc::claim_failed, "sylow: could not extend p-subgroup (not a group?)");
  }
  return s;
}

/// Largest normal p-subgroup: intersection of all conjugates of a Sylow p-subgroup.
inline Subgroup o_p(const Group& g, std::uint64_t p) {
  const auto s = sylow(g, p);
  element_set acc = s.mask();
  for (elem c = 0; c < g.order(); ++c) {
    element_set conj(g.order());
    for (elem x : s.members()) conj.set(g.conj(x, c));
    acc &= conj;
  }
  return Subgroup(g, acc);
}

/// The set of p'-elements when it is a subgroup.
inline std::optional<Subgroup> normal_p_complement(const Group& g, std::uint64_t p) {
  element_set s(g.order());
  std::vector<elem> members;
  for (elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) % p != 0) {
      s.set(x);
      members.push_back(x);
    }
  for (elem a : members)
    for (elem b : members)
      if (!s.test(g.mul(a, b))) return std::nullopt;
  Subgroup h(g, s);
  if (h.order() != p_prime_part(g.order(), p)) return std::nullopt;
  return h;
}

inline bool is_nilpotent(const Group& g) {
  for (auto p : prime_divisors(g.order()))
    if (!is_normal(g, sylow(g, p))) return false;
  return true;
}

}  // namespace fgt
