#pragma once

// Slow reference computations used to cross-check the fast paths. They share only
// the Group/Subgroup types with the code they check.

#include "fgt/autos.hpp"

namespace fgt::oracle {

/// R(G) by intersecting every non-normal subgroup of the full lattice.
inline RStatus r_of_lattice(const Group& g, const limits& lim = {}) {
  std::optional<element_set> acc;
  for (const auto& h : all_subgroups(g, lim)) {
    if (is_normal_by_definition(g, h)) continue;
    if (!acc)
      acc = h.mask();
    else
      *acc &= h.mask();
  }
  if (!acc) return {};
  Subgroup r(g, *acc);
  return {r.order() > 1 ? r_tag::nontrivial : r_tag::trivial, std::move(r)};
}

/// Every subgroup normal, by full enumeration.
inline bool is_dedekind_lattice(const Group& g, const limits& lim = {}) {
  for (const auto& h : all_subgroups(g, lim))
    if (!is_normal_by_definition(g, h)) return false;
  return true;
}

/// Class sizes from orbit walks agree with [G : C_G(x)], sum to |G| and divide |G|.
inline std::optional<std::string> class_equation_violation(const Group& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t total = 0;
  for (elem x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::size_t size = 0;
    for (elem c = 0; c < g.order(); ++c) {
      const elem y = g.conj(x, c);
      if (!seen[y]) {
        seen[y] = true;
        ++size;
      }
    }
    std::size_t cent = 0;
    for (elem c = 0; c < g.order(); ++c) cent += g.mul(x, c) == g.mul(c, x);
    if (size * cent != g.order())
      return "class of " + g.name(x) + " has size " + std::to_string(size) + " but centralizer order " + std::to_string(cent);
    if (g.order() % size) return "class size " + std::to_string(size) + " does not divide |G|";
    total += size;
  }
  if (total != g.order()) return "class sizes sum to " + std::to_string(total);
  std::size_t listed = 0;
  for (const auto& cls : conjugacy_classes(g)) listed += cls.size();
  if (listed != g.order()) return "conjugacy_classes covers " + std::to_string(listed) + " elements";
  return std::nullopt;
}

/// All automorphisms, by assigning generator images one at a time (only element orders
/// are matched) and rebuilding the partial map on the generated subgroup by breadth-first
/// words after every choice.
inline std::vector<std::vector<elem>> all_automorphisms(const Group& g) {
  const auto gens = generating_sequence(g);
  const std::size_t n = g.order();
  std::vector<std::vector<elem>> out;
  std::vector<elem> chosen;

  // Map on <gens[0..k)> determined by chosen images, or nullopt on a conflict.
  auto extend = [&]() -> std::optional<std::vector<elem>> {
    constexpr elem unset = ~elem{0};
    std::vector<elem> img(n, unset), used(n, 0);
    img[0] = 0;
    used[0] = 1;
    std::vector<elem> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const elem x = queue[i];
      for (std::size_t k = 0; k < chosen.size(); ++k) {
        const elem y = g.mul(x, gens[k]);
        const elem fy = g.mul(img[x], chosen[k]);
        if (img[y] == unset) {
          if (used[fy]) return std::nullopt;  // not injective
          img[y] = fy;
          used[fy] = 1;
          queue.push_back(y);
        } else if (img[y] != fy) {
          return std::nullopt;
        }
      }
    }
    return img;
  };

  auto rec = [&](auto&& self) -> void {
    auto partial = extend();
    if (!partial) return;
    if (chosen.size() == gens.size()) {
      out.push_back(std::move(*partial));
      return;
    }
    const elem s = gens[chosen.size()];
    for (elem c = 1; c < n; ++c) {
      if (g.element_order(c) != g.element_order(s)) continue;
      chosen.push_back(c);
      self(self);
      chosen.pop_back();
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  for (const auto& im : out)
    if (!GroupMap(g, g, im).is_automorphism()) throw error(errc::claim_failed, "oracle produced a non-automorphism");
  return out;
}

/// Aut(G) filtered by the class-preserving predicate, sorted by image list.
inline std::vector<std::vector<elem>> class_preserving_by_filter(const Group& g) {
  const auto classes = conjugacy_classes(g);
  std::vector<std::uint32_t> cid(g.order());
  for (std::uint32_t i = 0; i < classes.size(); ++i)
    for (elem x : classes[i]) cid[x] = i;
  std::vector<std::vector<elem>> out;
  for (auto& im : all_automorphisms(g)) {
    bool ok = true;
    for (elem x = 0; x < g.order() && ok; ++x) ok = cid[im[x]] == cid[x];
    if (ok) out.push_back(std::move(im));
  }
  return out;
}

/// Whether some normal abelian A has G/A cyclic.
inline bool is_abelian_by_cyclic(const Group& g, const limits& lim = {}) {
  for (const auto& a : normal_subgroups(g, lim)) {
    if (!is_abelian(a)) continue;
    const auto q = quotient(g, a).group;
    if (is_cyclic(Subgroup::whole(q))) return true;
  }
  return false;
}

/// Primes p for which some normal abelian A has G/A with a normal cyclic Sylow p-subgroup.
inline std::vector<std::uint64_t> cyclic_sylow_primes(const Group& g, const limits& lim = {}) {
  std::vector<std::uint64_t> out;
  for (auto p : prime_divisors(g.order())) {
    for (const auto& a : normal_subgroups(g, lim)) {
      if (!is_abelian(a)) continue;
      const auto q = quotient(g, a).group;
      const auto s = sylow(q, p);
      if (is_normal(q, s) && is_cyclic(s)) {
        out.push_back(p);
        break;
      }
    }
  }
  return out;
}

inline bool has_abelian_index_two(const Group& g) {
  for (const auto& a : index_two_subgroups(g))
    if (is_abelian(a)) return true;
  return false;
}

}  // namespace fgt::oracle
