#pragma once

// Dedekind / Q-group / R(G) / Blackburn classification and the structure checks for
// normal subgroups of Blackburn groups.

#include "fgt/construct.hpp"
#include "fgt/morphism.hpp"

namespace fgt {

/// True iff every subgroup is normal. A join of normal subgroups is normal, so
/// checking cyclic subgroups suffices.
inline bool is_dedekind(const Group& g) {
  for (const auto& c : cyclic_subgroups(g))
    if (!is_normal(g, c)) return false;
  return true;
}

/// Subgroups of index 2: preimages of hyperplanes of G / <squares>.
inline std::vector<Subgroup> index_two_subgroups(const Group& g) {
  std::vector<elem> squares;
  for (elem x = 0; x < g.order(); ++x) squares.push_back(g.mul(x, x));
  const auto sq = subgroup_closure(g, squares);
  if (sq.order() == g.order()) return {};
  auto q = quotient(g, sq);
  const auto basis = generating_sequence(q.group);
  // coordinates of each quotient element over the basis (elementary abelian 2-group)
  std::vector<std::uint64_t> coord(q.group.order(), 0);
  std::vector<bool> seen(q.group.order(), false);
  std::vector<elem> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const elem y = q.group.mul(queue[i], basis[b]);
      if (!seen[y]) {
        seen[y] = true;
        coord[y] = coord[queue[i]] ^ (std::uint64_t{1} << b);
        queue.push_back(y);
      }
    }
  std::vector<Subgroup> out;
  const std::uint64_t d = basis.size();
  for (std::uint64_t f = 1; f < (std::uint64_t{1} << d); ++f) {
    element_set s(g.order());
    for (elem x = 0; x < g.order(); ++x)
      if (__builtin_popcountll(coord[q.projection(x)] & f) % 2 == 0) s.set(x);
    out.emplace_back(g, s);
  }
  return out;
}

struct QGroupWitness {
  Subgroup a;
  elem b = 0;
};

/// Q-group test: abelian A of index 2, not elementary abelian, and b of order 4 outside A
/// inverting every element of A. Returns the first witness found.
inline std::optional<QGroupWitness> q_group_witness(const Group& g) {
  for (const auto& a : index_two_subgroups(g)) {
    if (!is_abelian(a) || exponent(a) <= 2) continue;
    const auto agens = generating_sequence_of(a);
    for (elem b = 0; b < g.order(); ++b) {
      if (a.contains(b) || g.element_order(b) != 4) continue;
      bool inverts = true;
      for (elem x : agens)
        if (g.conj(x, b) != g.inv(x)) {
          inverts = false;
          break;
        }
      if (inverts) return QGroupWitness{a, b};
    }
  }
  return std::nullopt;
}

inline bool is_q_group(const Group& g) { return q_group_witness(g).has_value(); }

enum class r_tag { undefined, trivial, nontrivial };

inline std::string_view to_string(r_tag t) {
  switch (t) {
    case r_tag::undefined: return "Undefined";
    case r_tag::trivial: return "Trivial";
    case r_tag::nontrivial: return "Nontrivial";
  }
  return "?";
}

struct RStatus {
  r_tag tag = r_tag::undefined;
  std::optional<Subgroup> subgroup;  // present iff tag != undefined
};

/// R(G): intersection of all non-normal subgroups. Every non-normal subgroup contains a
/// non-normal cyclic subgroup, so intersecting the non-normal cyclic ones gives R(G).
inline RStatus r_of(const Group& g, const limits& lim = {}) {
  check_order_cap(g.order(), lim, "r_of input");
  std::optional<element_set> acc;
  for (const auto& c : cyclic_subgroups(g)) {
    if (is_normal(g, c)) continue;
    if (!acc)
      acc = c.mask();
    else
      *acc &= c.mask();
  }
  if (!acc) return {};
  Subgroup r(g, *acc);
  return {r.order() > 1 ? r_tag::nontrivial : r_tag::trivial, std::move(r)};
}

/// Blackburn: R(G) defined and nontrivial. A nontrivial R(G) is checked to be a cyclic p-group.
inline bool is_blackburn(const Group& g, const limits& lim = {}) {
  const auto r = r_of(g, lim);
  if (r.tag != r_tag::nontrivial) return false;
  if (!is_cyclic(*r.subgroup) || !prime_power_base(r.subgroup->order()))
    throw error(errc::claim_failed, "R(G) of a Blackburn group is not a cyclic p-group");
  return true;
}

enum class two_group_form { q_group, q8_c4_e2, q8_q8_e2 };

inline std::string_view to_string(two_group_form f) {
  switch (f) {
    case two_group_form::q_group: return "QGroup";
    case two_group_form::q8_c4_e2: return "Q8xC4xE2";
    case two_group_form::q8_q8_e2: return "Q8xQ8xE2";
  }
  return "?";
}

/// Q8 x base x C2^r, with r chosen so the order is `order` (nullopt when impossible).
inline std::optional<Group> q8_shape(const Group& base, std::size_t order, const limits& lim) {
  const std::size_t core = 8 * base.order();
  if (order < core || order % core) return std::nullopt;
  std::size_t rest = order / core;
  if (rest & (rest - 1)) return std::nullopt;
  Group g = direct_product(generalized_quaternion(8, lim), base, lim);
  for (; rest > 1; rest /= 2) g = direct_product(g, cyclic(2, lim), lim);
  return g;
}

/// Which of the three Blackburn 2-group shapes G has (E2 possibly trivial).
inline two_group_form blackburn_2group_form(const Group& g, const limits& lim = {}) {
  if (prime_power_base(g.order()) != std::optional<std::uint64_t>(2) || !is_blackburn(g, lim))
    throw error(errc::not_blackburn_2group, "input is not a Blackburn 2-group");
  if (is_q_group(g)) return two_group_form::q_group;
  if (g.order() > lim.max_iso_order)
    throw error(errc::order_cap, "blackburn_2group_form: order " + std::to_string(g.order()) + " > iso cap");
  if (auto s = q8_shape(cyclic(4, lim), g.order(), lim); s && are_isomorphic(g, *s, lim))
    return two_group_form::q8_c4_e2;
  if (auto s = q8_shape(generalized_quaternion(8, lim), g.order(), lim); s && are_isomorphic(g, *s, lim))
    return two_group_form::q8_q8_e2;
  throw error(errc::no_form_matched, "Blackburn 2-group of order " + std::to_string(g.order()) + " matches no form");
}

/// Prime of R(G) for a group with a nontrivial cyclic p-group R(G), else PreconditionFailed.
inline std::uint64_t r_prime(const Group& g, const limits& lim = {}) {
  const auto r = r_of(g, lim);
  if (r.tag != r_tag::nontrivial) throw error(errc::precondition_failed, "R(G) is not defined and nontrivial");
  auto p = prime_power_base(r.subgroup->order());
  if (!p || !is_cyclic(*r.subgroup)) throw error(errc::precondition_failed, "R(G) is not a cyclic p-group");
  return *p;
}

struct QdifpReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  std::size_t t_order = 0;
  bool closed = false;             // q-elements form a subgroup
  bool q_group = false;            // of q-power order
  bool normal = false;             // normal in G
  bool all_subgroups_normal = false;
  std::optional<bool> abelian;     // checked for odd q
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks that the q-elements of G form a normal q-subgroup all of whose subgroups are
/// normal in G (and, for odd q, an abelian one). Closure is tested, not assumed.
inline QdifpReport verify_qdifp(const Group& g, std::uint64_t q, const limits& lim = {}) {
  if (!is_prime(q)) throw error(errc::precondition_failed, "q must be prime");
  QdifpReport rep;
  rep.p = r_prime(g, lim);
  rep.q = q;
  if (q == rep.p) throw error(errc::precondition_failed, "q must differ from the prime of R(G)");

  element_set t(g.order());
  std::vector<elem> members;
  for (elem x = 0; x < g.order(); ++x)
    if (is_power_of(g.element_order(x), q)) {
      t.set(x);
      members.push_back(x);
    }
  rep.t_order = members.size();
  rep.closed = true;
  for (elem a : members) {
    for (elem b : members)
      if (!t.test(g.mul(a, b))) {
        rep.closed = false;
        rep.violations.push_back("q-elements not closed: " + g.name(a) + " * " + g.name(b));
        break;
      }
    if (!rep.closed) break;
  }
  if (!rep.closed) return rep;
  Subgroup tq(g, t);
  rep.q_group = is_power_of(tq.order(), q);
  if (!rep.q_group) rep.violations.push_back("T_q has order " + std::to_string(tq.order()));
  rep.normal = is_normal(g, tq);
  if (!rep.normal) rep.violations.push_back("T_q is not normal");
  rep.all_subgroups_normal = true;
  for (elem x : members) {
    if (!is_normal(g, cyclic_subgroup(g, x))) {
      rep.all_subgroups_normal = false;
      rep.violations.push_back("<" + g.name(x) + "> is not normal in G");
      break;
    }
  }
  if (q % 2 == 1) {
    rep.abelian = is_abelian(tq);
    if (!*rep.abelian) rep.violations.push_back("T_q is not abelian");
  }
  return rep;
}

enum class fnsgp_case { a, b, c };

inline std::string_view to_string(fnsgp_case c) {
  switch (c) {
    case fnsgp_case::a: return "a";
    case fnsgp_case::b: return "b";
    case fnsgp_case::c: return "c";
  }
  return "?";
}

struct CaseCData {
  elem x = 0;
  Subgroup t;
  std::uint64_t centralized_order = 0;  // |C_<x>(H)|
  std::uint64_t op_exponent = 0;        // exponent of O_p(N)
  bool exponent_ok = false;
  bool centralizing_ok = false;
  std::size_t decompositions_checked = 0;
};

struct FnsgpVerdict {
  std::uint64_t p = 0;
  Subgroup p_complement;
  bool dedekind_complement = false;
  Subgroup sylow;
  Subgroup op;
  fnsgp_case which = fnsgp_case::a;
  std::optional<CaseCData> case_c_data;  // present iff which == c
};

namespace detail {

inline bool commutes_with_all(const Group& g, elem x, const Subgroup& h) {
  for (elem y : generating_sequence_of(h))
    if (g.mul(x, y) != g.mul(y, x)) return false;
  return true;
}

/// Runs the case (c) checks on every decomposition S = <x> x T with [x,H] != 1, T <= C.
inline std::optional<CaseCData> check_case_c(const Group& g, const Subgroup& s, const Subgroup& c,
                                             const Subgroup& h, const limits& lim) {
  if (!is_abelian(s)) return std::nullopt;
  const auto cgroup = as_group(c);
  std::vector<Subgroup> c_subs;
  for (const auto& sub : all_subgroups(cgroup.group, lim)) c_subs.push_back(lift(cgroup, g, sub));
  const auto op_exp = exponent(c);
  std::optional<CaseCData> first;
  std::size_t checked = 0;
  for (elem x : s.members()) {
    if (commutes_with_all(g, x, h)) continue;
    const auto cx = cyclic_subgroup(g, x);
    for (const auto& t : c_subs) {
      if (t.order() * cx.order() != s.order() || !intersect(t, cx).is_trivial()) continue;
      ++checked;
      CaseCData d;
      d.x = x;
      d.t = t;
      element_set cent(g.order());
      for (elem y : cx.members())
        if (commutes_with_all(g, y, h)) cent.set(y);
      const Subgroup cxh(g, cent);
      d.centralized_order = cxh.order();
      d.op_exponent = op_exp;
      d.exponent_ok = d.centralized_order == op_exp;
      const auto cg = centralizer(g, cxh);
      d.centralizing_ok = true;
      for (elem y : cg.members())
        if (!commutes_with_all(g, y, t)) {
          d.centralizing_ok = false;
          break;
        }
      if (!d.exponent_ok || !d.centralizing_ok) {
        d.decompositions_checked = checked;
        return d;  // a failing decomposition is reported as-is
      }
      if (!first) first = d;
    }
  }
  if (first) first->decompositions_checked = checked;
  return first;
}

}  // namespace detail

/// Structure of a normal subgroup N of a Blackburn group G: N has a Dedekind normal
/// p-complement H, and one of (a) N nilpotent, (b) Z(S) <= O_p(N), (c) S abelian with
/// S = <x> x T, [x,H] != 1, T <= O_p(N), |C_<x>(H)| = exp O_p(N), and every g centralizing
/// C_<x>(H) centralizes T. The first case that holds, in that order, is reported.
inline FnsgpVerdict verify_fnsgp(const Group& g, const Subgroup& n, const limits& lim = {}) {
  if (!is_blackburn(g, lim)) throw error(errc::precondition_failed, "G is not a Blackburn group");
  if (!is_normal(g, n)) throw error(errc::precondition_failed, "N is not normal in G");
  FnsgpVerdict v;
  v.p = r_prime(g, lim);
  const auto ng = as_group(n);

  auto h_local = normal_p_complement(ng.group, v.p);
  if (!h_local) throw error(errc::trichotomy_violated, "N has no normal p-complement");
  v.p_complement = lift(ng, g, *h_local);
  v.dedekind_complement = true;
  for (elem x : v.p_complement.members())
    if (!is_normal(g, cyclic_subgroup(g, x))) {
      v.dedekind_complement = false;
      break;
    }
  if (!v.dedekind_complement)
    throw error(errc::trichotomy_violated, "p-complement has a subgroup that is not normal in G");

  v.sylow = lift(ng, g, sylow(ng.group, v.p));
  v.op = lift(ng, g, o_p(ng.group, v.p));

  if (is_nilpotent(ng.group)) {
    v.which = fnsgp_case::a;
    return v;
  }
  const auto zs_local = center(as_group(v.sylow).group);
  bool zs_in_op = true;
  {
    const auto sg = as_group(v.sylow);
    for (elem z : zs_local.members())
      if (!v.op.contains(sg.embedding[z])) {
        zs_in_op = false;
        break;
      }
  }
  if (zs_in_op) {
    v.which = fnsgp_case::b;
    return v;
  }
  auto c = detail::check_case_c(g, v.sylow, v.op, v.p_complement, lim);
  if (!c) throw error(errc::trichotomy_violated, "none of the cases (a), (b), (c) holds");
  if (!c->exponent_ok)
    throw error(errc::trichotomy_violated, "|C_<x>(H)| = " + std::to_string(c->centralized_order) +
                                               " but exponent of O_p(N) is " + std::to_string(c->op_exponent));
  if (!c->centralizing_ok)
    throw error(errc::trichotomy_violated, "an element centralizing C_<x>(H) does not centralize T");
  v.which = fnsgp_case::c;
  v.case_c_data = std::move(c);
  return v;
}

}  // namespace fgt
