#pragma once

// Named groups built from short text specs, and the pinned catalog manifest.
//
// Spec grammar (factors of a direct product joined by '*'):
//   cyclic:n   elementary_abelian:p,k   abelian:n1,n2,..   dihedral:order
//   generalized_quaternion:order (alias quaternion:order)   symmetric:n   alternating:n
//   dicyclic:order              q_group(C_{order/2}, unique involution)
//   q_group:n1,n2,..;t1,t2,..   q_group(abelian(n..), t) with t given by coordinates
//   metacyclic:m,n,r            C_m x| C_n, generator acting by a -> a^r
//   aq:n1,n2,..;order           abelian(n..) x| Q_order, a acting trivially, b inverting

#include <charconv>

#include "fgt/construct.hpp"

namespace fgt::catalog {

namespace detail {

inline std::vector<std::size_t> parse_list(std::string_view s, std::string_view spec) {
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const auto comma = s.find(',', pos);
    const auto tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
      throw error(errc::bad_params, "bad number '" + std::string(tok) + "' in spec '" + std::string(spec) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::size_t one(const std::vector<std::size_t>& v, std::string_view spec) {
  if (v.size() != 1) throw error(errc::bad_params, "spec '" + std::string(spec) + "' takes one parameter");
  return v[0];
}

/// Index of the element with the given coordinates in abelian(orders).
inline elem abelian_index(const std::vector<std::size_t>& orders, const std::vector<std::size_t>& coords) {
  if (coords.size() != orders.size()) throw error(errc::bad_params, "coordinate count differs from factor count");
  std::size_t idx = 0, scale = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (coords[i] >= orders[i]) throw error(errc::bad_params, "coordinate out of range");
    idx += scale * coords[i];
    scale *= orders[i];
  }
  return static_cast<elem>(idx);
}

inline Group metacyclic(std::size_t m, std::size_t n, std::size_t r, const limits& lim) {
  std::size_t rn = 1;
  for (std::size_t i = 0; i < n; ++i) rn = rn * r % m;
  if (std::gcd(r, m) != 1 || rn != 1 % m) throw error(errc::bad_params, "metacyclic: need gcd(r,m) = 1 and r^n = 1 mod m");
  const Group cm = cyclic(m, lim), cn = cyclic(n, lim);
  std::vector<elem> gen(m);
  for (std::size_t a = 0; a < m; ++a) gen[a] = static_cast<elem>(a * r % m);
  return semidirect_product(cm, cn, Action::from_generator(cn, 1, cm, gen), lim);
}

/// abelian(orders) x| Q with Q = <a, b>: a (index 1) acts trivially, b inverts.
inline Group abelian_by_quaternion(const std::vector<std::size_t>& orders, std::size_t qorder, const limits& lim) {
  const Group a = abelian(orders, lim);
  const Group q = generalized_quaternion(qorder, lim);
  std::vector<std::vector<elem>> maps(q.order());
  for (elem y = 0; y < q.order(); ++y) {
    const bool inverting = y >= qorder / 2;  // elements a^i b
    std::vector<elem> m(a.order());
    for (elem x = 0; x < a.order(); ++x) m[x] = inverting ? a.inv(x) : x;
    maps[y] = std::move(m);
  }
  return semidirect_product(a, q, Action(q, a, std::move(maps)), lim);
}

inline Group alternating(std::size_t n, const limits& lim) {
  if (n < 1 || n > 5) throw error(errc::bad_params, "alternating: n must be in 1..5");
  std::vector<std::vector<elem>> gens;
  auto cycle = [&](std::vector<elem> pts) {
    std::vector<elem> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
    return p;
  };
  if (n >= 3) gens.push_back(cycle({0, 1, 2}));
  if (n == 4) gens.push_back(cycle({1, 2, 3}));
  if (n == 5) gens.push_back(cycle({0, 1, 2, 3, 4}));
  return permutation_group(n, gens, lim);
}

inline Group build_factor(std::string_view spec, const limits& lim) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw error(errc::bad_params, "spec '" + std::string(spec) + "' lacks ':'");
  const auto fam = spec.substr(0, colon);
  const auto rest = spec.substr(colon + 1);
  const auto semi = rest.find(';');
  if (fam == "q_group" || fam == "aq") {
    if (semi == std::string_view::npos) throw error(errc::bad_params, "spec '" + std::string(spec) + "' needs ';'");
    const auto orders = parse_list(rest.substr(0, semi), spec);
    const auto second = parse_list(rest.substr(semi + 1), spec);
    if (fam == "aq") return abelian_by_quaternion(orders, one(second, spec), lim);
    return q_group(abelian(orders, lim), abelian_index(orders, second), lim);
  }
  const auto params = parse_list(rest, spec);
  if (fam == "cyclic") return cyclic(one(params, spec), lim);
  if (fam == "abelian") return abelian(params, lim);
  if (fam == "elementary_abelian") {
    if (params.size() != 2) throw error(errc::bad_params, "elementary_abelian takes p,k");
    return elementary_abelian(params[0], params[1], lim);
  }
  if (fam == "dihedral") return dihedral(one(params, spec), lim);
  if (fam == "generalized_quaternion" || fam == "quaternion") return generalized_quaternion(one(params, spec), lim);
  if (fam == "symmetric") return symmetric(one(params, spec), lim);
  if (fam == "alternating") return alternating(one(params, spec), lim);
  if (fam == "dicyclic") {
    const auto order = one(params, spec);
    if (order < 8 || order % 4) throw error(errc::bad_params, "dicyclic: order must be a multiple of 4, at least 8");
    const auto half = order / 2;
    return q_group(cyclic(half, lim), static_cast<elem>(half / 2), lim);
  }
  if (fam == "metacyclic") {
    if (params.size() != 3) throw error(errc::bad_params, "metacyclic takes m,n,r");
    return metacyclic(params[0], params[1], params[2], lim);
  }
  throw error(errc::bad_params, "unknown family '" + std::string(fam) + "'");
}

}  // namespace detail

/// Builds a group from a spec such as "quaternion:8*cyclic:4".
inline Group build(std::string_view spec, const limits& lim = {}) {
  Group g;
  bool first = true;
  std::size_t pos = 0;
  while (true) {
    const auto star = spec.find('*', pos);
    const auto part = spec.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos);
    Group f = detail::build_factor(part, lim);
    g = first ? f : direct_product(g, f, lim);
    first = false;
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return g;
}

struct Entry {
  std::string spec;
  std::size_t order = 0;
};

inline constexpr int manifest_version = 1;

/// The pinned catalog (all orders <= 128).
inline const std::vector<Entry>& manifest() {
  static const std::vector<Entry> entries = [] {
    const std::vector<std::string> specs = {
        // abelian
        "cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4", "cyclic:5", "cyclic:6", "cyclic:7", "cyclic:8",
        "cyclic:9", "cyclic:12", "cyclic:16", "cyclic:27", "abelian:2,2", "abelian:4,2", "abelian:2,2,2",
        "abelian:3,3", "abelian:6,2", "abelian:4,4", "abelian:8,2", "abelian:4,2,2", "abelian:2,2,2,2",
        "abelian:9,3", "abelian:3,3,3",
        // dihedral, quaternion, symmetric, alternating
        "dihedral:6", "dihedral:8", "dihedral:10", "dihedral:12", "dihedral:16", "dihedral:18", "dihedral:20",
        "dihedral:32", "quaternion:8", "quaternion:16", "quaternion:32", "quaternion:64", "symmetric:3",
        "symmetric:4", "symmetric:5", "alternating:4", "alternating:5",
        // Q-groups
        "dicyclic:12", "dicyclic:20", "dicyclic:24", "dicyclic:28", "dicyclic:36", "dicyclic:48",
        "q_group:4,2;0,1", "q_group:4,2;2,0", "q_group:4,4;2,0", "q_group:8,2;0,1", "q_group:4,2,2;0,1,0",
        // metacyclic
        "metacyclic:3,4,2", "metacyclic:5,4,2", "metacyclic:7,3,2", "metacyclic:7,6,3", "metacyclic:7,9,2",
        "metacyclic:3,8,2", "metacyclic:5,8,2", "metacyclic:9,3,4", "metacyclic:13,4,5", "metacyclic:9,6,2",
        // abelian by quaternion
        "aq:3;8", "aq:5;8", "aq:7;8", "aq:9;8", "aq:3,3;8", "aq:3;16",
        // direct products
        "quaternion:8*cyclic:2", "quaternion:8*cyclic:3", "quaternion:8*cyclic:4", "quaternion:8*abelian:2,2",
        "quaternion:8*cyclic:4*cyclic:2", "quaternion:8*quaternion:8", "quaternion:8*quaternion:8*cyclic:2",
        "quaternion:16*cyclic:3", "dihedral:8*cyclic:2", "symmetric:3*cyclic:3", "metacyclic:7,3,2*cyclic:2",
        "dicyclic:12*cyclic:2",
    };
    std::vector<Entry> out;
    for (const auto& s : specs) out.push_back({s, build(s).order()});
    return out;
  }();
  return entries;
}

}  // namespace fgt::catalog
