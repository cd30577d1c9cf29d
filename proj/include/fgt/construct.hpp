#pragma once

#include <map>
#include <unordered_map>

#include "fgt/structure.hpp"

namespace fgt {

namespace detail {

inline std::string power_name(const char* sym, long long k) {
  if (k == 0) return "1";
  if (k == 1) return sym;
  return std::string(sym) + "^" + std::to_string(k);
}

inline std::string perm_name(const std::vector<elem>& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace detail

inline Group cyclic(std::size_t n, const limits& lim = {}) {
  if (n == 0) throw error(errc::bad_params, "cyclic: n must be positive");
  check_order_cap(n, lim, "cyclic");
  std::vector<elem> t(n * n);
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[a] = detail::power_name("a", static_cast<long long>(a));
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = static_cast<elem>((a + b) % n);
  }
  return Group::from_trusted_table(n, std::move(t), std::move(names));
}

/// Component-wise product; element (g, h) has index g + |G| * h.
inline Group direct_product(const Group& g, const Group& h, const limits& lim = {}) {
  const std::size_t m = g.order(), k = h.order(), n = m * k;
  check_order_cap(n, lim, "direct product");
  std::vector<elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const elem ag = static_cast<elem>(a % m), ah = static_cast<elem>(a / m);
    for (std::size_t b = 0; b < n; ++b) {
      const elem bg = static_cast<elem>(b % m), bh = static_cast<elem>(b / m);
      t[a * n + b] = g.mul(ag, bg) + static_cast<elem>(m) * h.mul(ah, bh);
    }
  }
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a)
    names[a] = "(" + g.name(static_cast<elem>(a % m)) + "," + h.name(static_cast<elem>(a / m)) + ")";
  return Group::from_trusted_table(n, std::move(t), std::move(names));
}

inline Group abelian(const std::vector<std::size_t>& cyclic_orders, const limits& lim = {}) {
  Group g;
  for (auto o : cyclic_orders) g = (g.order() == 1 && o != 1) ? cyclic(o, lim) : direct_product(g, cyclic(o, lim), lim);
  return g;
}

inline Group elementary_abelian(std::size_t p, std::size_t k, const limits& lim = {}) {
  if (!is_prime(p)) throw error(errc::bad_params, "elementary_abelian: p must be prime");
  return abelian(std::vector<std::size_t>(k, p), lim);
}

/// Dihedral group of the given (even) order: r^i s^j at index i + n j with n = order / 2,
/// s r s = r^-1.
inline Group dihedral(std::size_t order, const limits& lim = {}) {
  if (order < 2 || order % 2) throw error(errc::bad_params, "dihedral: order must be even and positive");
  const std::size_t n = order / 2;
  check_order_cap(order, lim, "dihedral");
  std::vector<elem> t(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    const std::size_t i = a % n, j = a / n;
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t k = b % n, l = b / n;
      // s^j r^k = r^{(-1)^j k} s^j
      const std::size_t e = j ? (i + n - k) % n : (i + k) % n;
      t[a * order + b] = static_cast<elem>(e + n * ((j + l) % 2));
    }
  }
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    const auto i = static_cast<long long>(a % n);
    names[a] = a / n ? (i ? detail::power_name("r", i) + "s" : "s") : detail::power_name("r", i);
  }
  return Group::from_trusted_table(order, std::move(t), std::move(names));
}

/// Generalized quaternion group of order 2^m (m >= 3): a^i b^j at index i + N j with
/// N = 2^{m-1}, b^2 = a^{N/2}, b^-1 a b = a^-1.
inline Group generalized_quaternion(std::size_t order, const limits& lim = {}) {
  if (order < 8 || (order & (order - 1)) != 0)
    throw error(errc::bad_params, "generalized_quaternion: order must be 2^m with m >= 3");
  check_order_cap(order, lim, "generalized quaternion");
  const std::size_t n = order / 2;
  std::vector<elem> t(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    const std::size_t i = a % n, j = a / n;
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t k = b % n, l = b / n;
      std::size_t e = j ? (i + n - k) % n : (i + k) % n;
      if (j + l == 2) e = (e + n / 2) % n;
      t[a * order + b] = static_cast<elem>(e + n * ((j + l) % 2));
    }
  }
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a) {
    const auto i = static_cast<long long>(a % n);
    names[a] = a / n ? (i ? detail::power_name("a", i) + "b" : "b") : detail::power_name("a", i);
  }
  return Group::from_trusted_table(order, std::move(t), std::move(names));
}

/// Group of permutations under composition "x then y" (x -> y[x[.]]).
/// Elements are sorted lexicographically by image list, so the identity is index 0.
inline Group permutation_group(std::size_t degree, const std::vector<std::vector<elem>>& gens,
                               const limits& lim = {}) {
  using perm = std::vector<elem>;
  for (const auto& g : gens) {
    if (g.size() != degree) throw error(errc::not_permutation, "generator has wrong length");
    std::vector<bool> hit(degree, false);
    for (elem v : g) {
      if (v >= degree || hit[v]) throw error(errc::not_permutation, "generator " + detail::perm_name(g) + " is not a bijection");
      hit[v] = true;
    }
  }
  perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<perm, elem> index;
  std::vector<perm> elems{id};
  index.emplace(id, 0);
  auto compose = [](const perm& x, const perm& y) {
    perm r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
    return r;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      perm y = compose(elems[i], s);
      if (!index.count(y)) {
        if (elems.size() >= lim.max_order) throw error(errc::order_cap, "permutation closure exceeds cap " + std::to_string(lim.max_order));
        index.emplace(y, static_cast<elem>(elems.size()));
        elems.push_back(std::move(y));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<elem>(i);
  const std::size_t n = elems.size();
  std::vector<elem> t(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a * n + b] = index.at(compose(elems[a], elems[b]));
  std::vector<std::string> names(n);
  for (std::size_t a = 0; a < n; ++a) names[a] = detail::perm_name(elems[a]);
  return Group::from_trusted_table(n, std::move(t), std::move(names));
}

/// Full symmetric group on n <= 5 points.
inline Group symmetric(std::size_t n, const limits& lim = {}) {
  if (n < 1 || n > 5) throw error(errc::bad_params, "symmetric: n must be in 1..5");
  std::vector<std::vector<elem>> gens;
  if (n >= 2) {
    std::vector<elem> cyc(n), tr(n);
    for (std::size_t i = 0; i < n; ++i) {
      cyc[i] = static_cast<elem>((i + 1) % n);
      tr[i] = static_cast<elem>(i);
    }
    std::swap(tr[0], tr[1]);
    gens = {cyc, tr};
  }
  return permutation_group(n, gens, lim);
}

/// <A, b> with [G:A] = 2, b^2 = t and x^b = x^-1 on A. Element x b^j has index x + |A| j.
inline Group q_group(const Group& a, elem t, const limits& lim = {}) {
  if (!a.is_abelian()) throw error(errc::bad_params, "q_group: A must be abelian");
  if (t >= a.order() || a.element_order(t) != 2) throw error(errc::bad_params, "q_group: t must be an involution of A");
  const std::size_t m = a.order(), n = 2 * m;
  check_order_cap(n, lim, "q_group");
  std::vector<elem> tab(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const elem x = static_cast<elem>(u % m);
    const std::size_t j = u / m;
    for (std::size_t v = 0; v < n; ++v) {
      const elem y = static_cast<elem>(v % m);
      const std::size_t l = v / m;
      elem prod = a.mul(x, j ? a.inv(y) : y);
      if (j + l == 2) prod = a.mul(prod, t);
      tab[u * n + v] = prod + static_cast<elem>(m * ((j + l) % 2));
    }
  }
  std::vector<std::string> names(n);
  for (std::size_t u = 0; u < n; ++u) {
    const std::string base = a.name(static_cast<elem>(u % m));
    names[u] = u / m ? (u % m ? base + "*b" : "b") : base;
  }
  return Group::from_trusted_table(n, std::move(tab), std::move(names));
}

/// N x| H with (n1,h1)(n2,h2) = (n1 act(h1)(n2), h1 h2); (n, h) has index n + |N| h.
inline Group semidirect_product(const Group& n, const Group& h, const Action& act, const limits& lim = {}) {
  if (!(act.actor() == h) || !(act.acted() == n)) throw error(errc::bad_params, "semidirect_product: action does not match factors");
  const std::size_t m = n.order(), k = h.order(), order = m * k;
  check_order_cap(order, lim, "semidirect product");
  std::vector<elem> t(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    const elem an = static_cast<elem>(a % m), ah = static_cast<elem>(a / m);
    const auto& phi = act.map_of(ah);
    for (std::size_t b = 0; b < order; ++b) {
      const elem bn = static_cast<elem>(b % m), bh = static_cast<elem>(b / m);
      t[a * order + b] = n.mul(an, phi[bn]) + static_cast<elem>(m) * h.mul(ah, bh);
    }
  }
  std::vector<std::string> names(order);
  for (std::size_t a = 0; a < order; ++a)
    names[a] = "(" + n.name(static_cast<elem>(a % m)) + "," + h.name(static_cast<elem>(a / m)) + ")";
  return Group::from_trusted_table(order, std::move(t), std::move(names));
}

struct QuotientResult {
  Group group;
  GroupMap projection;
  std::vector<elem> representatives;  // smallest member of each coset
};

/// G/N with cosets ordered by smallest representative.
inline QuotientResult quotient(const Group& g, const Subgroup& nsub) {
  if (!is_normal(g, nsub)) throw error(errc::not_normal, "quotient: subgroup is not normal");
  const std::size_t n = g.order();
  std::vector<elem> coset(n, static_cast<elem>(n));
  std::vector<elem> reps;
  for (elem x = 0; x < n; ++x) {
    if (coset[x] != n) continue;
    const elem id = static_cast<elem>(reps.size());
    reps.push_back(x);
    for (elem y : nsub.members()) coset[g.mul(x, y)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<elem> t(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) t[a * q + b] = coset[g.mul(reps[a], reps[b])];
  std::vector<std::string> names(q);
  for (std::size_t a = 0; a < q; ++a) names[a] = "[" + g.name(reps[a]) + "]";
  auto qg = Group::from_trusted_table(q, std::move(t), std::move(names));
  GroupMap proj(g, qg, coset);
  return {std::move(qg), std::move(proj), std::move(reps)};
}

struct InducedGroup {
  Group group;
  std::vector<elem> embedding;  // group index -> parent index
  std::vector<elem> local;      // parent index -> group index (or order() when outside)
};

/// A subgroup materialized as a group in its own right, members in ascending order.
inline InducedGroup as_group(const Subgroup& h) {
  const Group& g = h.parent();
  const auto& mem = h.members();
  const std::size_t k = mem.size();
  std::vector<elem> local(g.order(), static_cast<elem>(k));
  for (std::size_t i = 0; i < k; ++i) local[mem[i]] = static_cast<elem>(i);
  std::vector<elem> t(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) t[a * k + b] = local[g.mul(mem[a], mem[b])];
  std::vector<std::string> names;
  if (g.has_names())
    for (elem x : mem) names.push_back(g.name(x));
  return {Group::from_trusted_table(k, std::move(t), std::move(names)), mem, std::move(local)};
}

/// Image of a subgroup of an induced group back in the parent.
inline Subgroup lift(const InducedGroup& ig, const Group& parent, const Subgroup& local_sub) {
  element_set s(parent.order());
  for (elem x : local_sub.members()) s.set(ig.embedding[x]);
  return Subgroup(parent, s);
}

}  // namespace fgt
