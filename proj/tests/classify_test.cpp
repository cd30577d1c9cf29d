#include <gtest/gtest.h>

#include "fgt/catalog.hpp"
#include "fgt/classify.hpp"
#include "fgt/oracles.hpp"

using namespace fgt;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no fgt::error thrown";
  return errc::claim_failed;
}

elem unique_involution(const Group& g) {
  for (elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) return x;
  return 0;
}

}  // namespace

TEST(Dedekind, Examples) {
  EXPECT_TRUE(is_dedekind(abelian({4, 2})));
  EXPECT_TRUE(is_dedekind(generalized_quaternion(8)));
  EXPECT_TRUE(is_dedekind(catalog::build("quaternion:8*abelian:2,2")));
  EXPECT_TRUE(is_dedekind(catalog::build("quaternion:8*cyclic:3")));
  EXPECT_FALSE(is_dedekind(symmetric(3)));
  EXPECT_FALSE(is_dedekind(catalog::build("quaternion:8*cyclic:4")));
}

TEST(Dedekind, AgreesWithLatticeOnCatalog) {
  for (const auto& e : catalog::manifest()) {
    const auto g = catalog::build(e.spec);
    EXPECT_EQ(is_dedekind(g), oracle::is_dedekind_lattice(g)) << e.spec;
  }
}

TEST(QGroup, Q8) {
  const auto w = q_group_witness(generalized_quaternion(8));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->a.order(), 4u);
  EXPECT_TRUE(is_cyclic(w->a));
}

TEST(QGroup, Q16) {
  const auto g = generalized_quaternion(16);
  const auto w = q_group_witness(g);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->a.order(), 8u);
  EXPECT_TRUE(is_cyclic(w->a));
  EXPECT_EQ(g.element_order(w->b), 4u);
  for (elem x : w->a.members()) EXPECT_EQ(g.conj(x, w->b), g.inv(x));
}

TEST(QGroup, Negatives) {
  EXPECT_FALSE(is_q_group(dihedral(8)));
  EXPECT_FALSE(is_q_group(abelian({4, 2})));
  EXPECT_FALSE(is_q_group(catalog::build("quaternion:8*cyclic:4")));
}

TEST(QGroup, CatalogQGroups) {
  for (const auto& spec : {"dicyclic:12", "dicyclic:20", "q_group:4,2;0,1", "q_group:8,2;0,1", "quaternion:32"})
    EXPECT_TRUE(is_q_group(catalog::build(spec))) << spec;
}

TEST(IndexTwo, Counts) {
  EXPECT_EQ(index_two_subgroups(cyclic(7)).size(), 0u);
  EXPECT_EQ(index_two_subgroups(cyclic(8)).size(), 1u);
  EXPECT_EQ(index_two_subgroups(generalized_quaternion(8)).size(), 3u);
  EXPECT_EQ(index_two_subgroups(elementary_abelian(2, 3)).size(), 7u);
  EXPECT_EQ(index_two_subgroups(symmetric(4)).size(), 1u);
}

TEST(R, Examples) {
  EXPECT_EQ(r_of(generalized_quaternion(8)).tag, r_tag::undefined);
  EXPECT_FALSE(r_of(generalized_quaternion(8)).subgroup);
  const auto s3 = r_of(symmetric(3));
  EXPECT_EQ(s3.tag, r_tag::trivial);
  ASSERT_TRUE(s3.subgroup);
  EXPECT_TRUE(s3.subgroup->is_trivial());
  const auto q16 = generalized_quaternion(16);
  const auto r = r_of(q16);
  EXPECT_EQ(r.tag, r_tag::nontrivial);
  ASSERT_TRUE(r.subgroup);
  EXPECT_EQ(r.subgroup->order(), 2u);
  EXPECT_TRUE(r.subgroup->contains(unique_involution(q16)));
}

TEST(R, MatchesLatticeOnCatalog) {
  for (const auto& e : catalog::manifest()) {
    const auto g = catalog::build(e.spec);
    const auto a = r_of(g), b = oracle::r_of_lattice(g);
    EXPECT_EQ(a.tag, b.tag) << e.spec;
    if (a.subgroup && b.subgroup) { EXPECT_TRUE(*a.subgroup == *b.subgroup) << e.spec; }
  }
}

TEST(Blackburn, Examples) {
  EXPECT_TRUE(is_blackburn(generalized_quaternion(16)));
  EXPECT_FALSE(is_blackburn(symmetric(3)));
  EXPECT_FALSE(is_blackburn(generalized_quaternion(8)));
}

TEST(Blackburn, C7ByQ8) {
  // aq:7;8: i (index 1 of Q8) centralizes C7, j inverts it; (a, y) has index a + 7 y
  const auto g = catalog::build("aq:7;8");
  EXPECT_TRUE(is_blackburn(g));
  const auto r = r_of(g);
  ASSERT_TRUE(r.subgroup);
  EXPECT_EQ(r.subgroup->members(), (std::vector<elem>{0, 14}));
  EXPECT_TRUE(center(g) == *r.subgroup);
}

TEST(Blackburn, RIsCyclicPrimePowerOnCatalog) {
  for (const auto& e : catalog::manifest()) {
    const auto g = catalog::build(e.spec);
    if (!is_blackburn(g)) continue;
    const auto r = r_of(g);
    EXPECT_TRUE(is_cyclic(*r.subgroup)) << e.spec;
    EXPECT_TRUE(prime_power_base(r.subgroup->order())) << e.spec;
  }
}

TEST(Forms, Examples) {
  EXPECT_EQ(blackburn_2group_form(generalized_quaternion(16)), two_group_form::q_group);
  EXPECT_EQ(blackburn_2group_form(catalog::build("quaternion:8*cyclic:4")), two_group_form::q8_c4_e2);
  EXPECT_EQ(blackburn_2group_form(catalog::build("quaternion:8*cyclic:4*cyclic:2")), two_group_form::q8_c4_e2);
  EXPECT_EQ(blackburn_2group_form(catalog::build("quaternion:8*quaternion:8")), two_group_form::q8_q8_e2);
  EXPECT_EQ(blackburn_2group_form(catalog::build("quaternion:8*quaternion:8*cyclic:2")), two_group_form::q8_q8_e2);
}

TEST(Forms, Preconditions) {
  EXPECT_EQ(code_of([] { blackburn_2group_form(dihedral(8)); }), errc::not_blackburn_2group);
  EXPECT_EQ(code_of([] { blackburn_2group_form(catalog::build("aq:7;8")); }), errc::not_blackburn_2group);
}

TEST(Forms, EveryBlackburnTwoGroupGetsOneLabel) {
  std::size_t seen = 0;
  for (const auto& e : catalog::manifest()) {
    const auto g = catalog::build(e.spec);
    if (prime_power_base(g.order()) != std::optional<std::uint64_t>(2) || !is_blackburn(g)) continue;
    ++seen;
    const auto f = blackburn_2group_form(g);
    // the label is consistent with the Q-group test
    EXPECT_EQ(f == two_group_form::q_group, is_q_group(g)) << e.spec;
  }
  EXPECT_GE(seen, 10u);
}

TEST(Qdifp, C7ByQ8) {
  const auto rep = verify_qdifp(catalog::build("aq:7;8"), 7);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.t_order, 7u);
  EXPECT_TRUE(rep.normal);
  EXPECT_TRUE(rep.all_subgroups_normal);
  EXPECT_EQ(rep.p, 2u);
}

TEST(Qdifp, Q16Vacuous) {
  const auto rep = verify_qdifp(generalized_quaternion(16), 3);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.t_order, 1u);
}

TEST(Qdifp, C7ByC9) {
  const auto g = catalog::build("metacyclic:7,9,2");
  const auto rep = verify_qdifp(g, 7);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.p, 3u);
  EXPECT_EQ(rep.t_order, 7u);
  ASSERT_TRUE(rep.abelian);
  EXPECT_TRUE(*rep.abelian);
}

TEST(Qdifp, Preconditions) {
  EXPECT_EQ(code_of([] { verify_qdifp(generalized_quaternion(16), 2); }), errc::precondition_failed);
  EXPECT_EQ(code_of([] { verify_qdifp(symmetric(3), 3); }), errc::precondition_failed);
  EXPECT_EQ(code_of([] { verify_qdifp(generalized_quaternion(16), 4); }), errc::precondition_failed);
}

TEST(Fnsgp, Q16IsCaseA) {
  const auto g = generalized_quaternion(16);
  const auto v = verify_fnsgp(g, Subgroup::whole(g));
  EXPECT_EQ(v.which, fnsgp_case::a);
  EXPECT_TRUE(v.p_complement.is_trivial());
  EXPECT_FALSE(v.case_c_data);
}

TEST(Fnsgp, C7ByQ8IsCaseB) {
  const auto g = catalog::build("aq:7;8");
  const auto v = verify_fnsgp(g, Subgroup::whole(g));
  EXPECT_EQ(v.which, fnsgp_case::b);
  EXPECT_EQ(v.p_complement.order(), 7u);
  EXPECT_TRUE(v.dedekind_complement);
  EXPECT_EQ(v.op.order(), 4u);
}

TEST(Fnsgp, C7ByC9IsCaseC) {
  const auto g = catalog::build("metacyclic:7,9,2");
  const auto v = verify_fnsgp(g, Subgroup::whole(g));
  ASSERT_EQ(v.which, fnsgp_case::c);
  ASSERT_TRUE(v.case_c_data);
  EXPECT_TRUE(v.case_c_data->t.is_trivial());
  EXPECT_EQ(v.case_c_data->centralized_order, 3u);
  EXPECT_EQ(v.case_c_data->op_exponent, 3u);
  EXPECT_TRUE(v.case_c_data->exponent_ok);
  EXPECT_TRUE(v.case_c_data->centralizing_ok);
  EXPECT_EQ(g.element_order(v.case_c_data->x), 9u);
}

TEST(Fnsgp, Preconditions) {
  const auto s3 = symmetric(3);
  EXPECT_EQ(code_of([&] { verify_fnsgp(s3, Subgroup::whole(s3)); }), errc::precondition_failed);
  const auto q16 = generalized_quaternion(16);
  EXPECT_EQ(code_of([&] { verify_fnsgp(q16, cyclic_subgroup(q16, 8)); }), errc::precondition_failed);
}

TEST(Fnsgp, AllNormalSubgroupsOfBlackburnCatalog) {
  for (const auto& e : catalog::manifest()) {
    const auto g = catalog::build(e.spec);
    if (!is_blackburn(g)) continue;
    for (const auto& n : normal_subgroups(g)) {
      const auto v = verify_fnsgp(g, n);
      EXPECT_EQ(v.case_c_data.has_value(), v.which == fnsgp_case::c) << e.spec;
      EXPECT_TRUE(v.dedekind_complement);
    }
  }
}
