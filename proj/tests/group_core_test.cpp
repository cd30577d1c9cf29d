#include <gtest/gtest.h>

#include <algorithm>

#include "fgt/catalog.hpp"
#include "fgt/kappa_example.hpp"

using namespace fgt;

namespace {

std::vector<std::vector<elem>> rows_of(std::initializer_list<std::initializer_list<elem>> rs) {
  std::vector<std::vector<elem>> out;
  for (auto r : rs) out.emplace_back(r);
  return out;
}

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no fgt::error thrown";
  return errc::claim_failed;
}

std::size_t count_order(const Group& g, std::uint32_t k) {
  std::size_t c = 0;
  for (elem x = 0; x < g.order(); ++x) c += g.element_order(x) == k;
  return c;
}

std::vector<std::size_t> class_sizes(const Group& g) {
  std::vector<std::size_t> s;
  for (const auto& c : conjugacy_classes(g)) s.push_back(c.size());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(Validate, TrivialTable) {
  auto g = validate_group(1, rows_of({{0}}));
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.identity(), 0u);
}

TEST(Validate, OrderTwo) {
  auto g = validate_group(2, rows_of({{0, 1}, {1, 0}}));
  EXPECT_EQ(g.order(), 2u);
  EXPECT_TRUE(are_isomorphic(g, cyclic(2)));
}

TEST(Validate, ShiftedLatinSquareHasNoIdentity) {
  // x*y = y - x mod 3: 0 is a left identity only
  std::vector<std::vector<elem>> t(3, std::vector<elem>(3));
  for (elem i = 0; i < 3; ++i)
    for (elem j = 0; j < 3; ++j) t[i][j] = (j + 3 - i) % 3;
  EXPECT_EQ(code_of([&] { validate_group(3, t); }), errc::no_identity);
}

TEST(Validate, RepeatedEntry) {
  EXPECT_EQ(code_of([] { validate_group(2, rows_of({{0, 1}, {1, 1}})); }), errc::not_latin_square);
}

TEST(Validate, LoopWithoutInverses) {
  const auto t = rows_of({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 3, 4, 0, 1}, {3, 4, 1, 2, 0}, {4, 2, 0, 1, 3}});
  EXPECT_EQ(code_of([&] { validate_group(5, t); }), errc::no_inverse);
}

TEST(Validate, NonAssociativeLoop) {
  // every element squares to 1, impossible in a group of order 5
  const auto t = rows_of({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
  EXPECT_EQ(code_of([&] { validate_group(5, t); }), errc::not_associative);
}

TEST(Validate, IdentityRelabeledToZero) {
  // C3 with identity stored as element 2
  const auto t = rows_of({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
  auto g = validate_group(3, t, {"a", "b", "e"});
  EXPECT_EQ(g.name(0), "e");
  for (elem x = 0; x < 3; ++x) EXPECT_EQ(g.mul(0, x), x);
  EXPECT_TRUE(are_isomorphic(g, cyclic(3)));
}

TEST(Validate, LargeTableUsesGeneratorTest) {
  const auto g = cyclic(600);
  std::vector<std::vector<elem>> rows(600, std::vector<elem>(600));
  for (elem a = 0; a < 600; ++a)
    for (elem b = 0; b < 600; ++b) rows[a][b] = g.mul(a, b);
  EXPECT_EQ(validate_group(600, rows).order(), 600u);
  // flip the intercalate on rows 5, 305 and columns 7, 307: still a Latin square with
  // identity and inverses, no longer associative
  std::swap(rows[5][7], rows[5][307]);
  std::swap(rows[305][7], rows[305][307]);
  EXPECT_EQ(code_of([&] { validate_group(600, rows); }), errc::not_associative);
}

TEST(Catalog, QGroupOfC4IsQuaternion) {
  const auto c4 = cyclic(4);
  EXPECT_TRUE(are_isomorphic(q_group(c4, 2), generalized_quaternion(8)));
}

TEST(Catalog, CyclicOneIsTrivial) { EXPECT_EQ(cyclic(1).order(), 1u); }

TEST(Catalog, Q16HasOneInvolution) {
  const auto q = generalized_quaternion(16);
  EXPECT_EQ(q.order(), 16u);
  EXPECT_EQ(count_order(q, 2), 1u);
}

TEST(Catalog, BadParams) {
  EXPECT_EQ(code_of([] { symmetric(6); }), errc::bad_params);
  EXPECT_EQ(code_of([] { q_group(cyclic(4), 1); }), errc::bad_params);
  EXPECT_EQ(code_of([] { generalized_quaternion(12); }), errc::bad_params);
  EXPECT_EQ(code_of([] { catalog::build("nosuch:3"); }), errc::bad_params);
  EXPECT_EQ(code_of([] { catalog::build("metacyclic:7,3,3"); }), errc::bad_params);
}

TEST(Catalog, FamilyOrders) {
  EXPECT_EQ(dihedral(8).order(), 8u);
  EXPECT_EQ(symmetric(5).order(), 120u);
  EXPECT_EQ(catalog::build("alternating:5").order(), 60u);
  EXPECT_EQ(elementary_abelian(3, 3).order(), 27u);
  EXPECT_EQ(catalog::build("dicyclic:12").order(), 12u);
  EXPECT_EQ(catalog::build("aq:7;8").order(), 56u);
  EXPECT_EQ(catalog::build("quaternion:8*cyclic:4*cyclic:2").order(), 64u);
}

TEST(Catalog, ManifestOrdersMatchBuilds) {
  std::set<std::string> seen;
  for (const auto& e : catalog::manifest()) {
    EXPECT_TRUE(seen.insert(e.spec).second) << e.spec;
    EXPECT_LE(e.order, 128u);
    EXPECT_EQ(catalog::build(e.spec).order(), e.order);
  }
}

TEST(DirectProduct, KleinFour) {
  const auto v = direct_product(cyclic(2), cyclic(2));
  EXPECT_EQ(v.order(), 4u);
  EXPECT_EQ(exponent(v), 2u);
}

TEST(DirectProduct, Q8TimesC4Center) {
  const auto g = direct_product(generalized_quaternion(8), cyclic(4));
  EXPECT_EQ(g.order(), 32u);
  EXPECT_EQ(center(g).order(), 8u);
}

TEST(DirectProduct, TrivialFactor) {
  const auto s3 = symmetric(3);
  EXPECT_TRUE(are_isomorphic(direct_product(s3, cyclic(1)), s3));
}

TEST(DirectProduct, OrderCap) {
  limits lim;
  lim.max_order = 100;
  EXPECT_EQ(code_of([&] { direct_product(cyclic(20), cyclic(20), lim); }), errc::order_cap);
}

TEST(Semidirect, TrivialActionIsDirect) {
  const auto n = cyclic(3), h = cyclic(4);
  EXPECT_EQ(semidirect_product(n, h, Action::trivial(h, n)), direct_product(n, h));
}

TEST(Semidirect, InversionGivesS3) {
  const auto n = cyclic(3), h = cyclic(2);
  const auto g = semidirect_product(n, h, Action::from_generator(h, 1, n, {0, 2, 1}));
  EXPECT_TRUE(are_isomorphic(g, symmetric(3)));
}

TEST(Semidirect, KappaGroupOrder) {
  const auto b = kappa::build_bundle(3);
  EXPECT_EQ(b.k_group.order(), 81u);
}

TEST(Semidirect, NormalFactorAndComplement) {
  const auto n = cyclic(7), h = cyclic(3);
  const auto g = semidirect_product(n, h, Action::from_generator(h, 1, n, {0, 2, 4, 6, 1, 3, 5}));
  element_set nm(g.order()), hm(g.order());
  for (elem x = 0; x < 7; ++x) nm.set(x);
  for (elem y = 0; y < 3; ++y) hm.set(7 * y);
  EXPECT_TRUE(is_normal(g, Subgroup(g, nm)));
  EXPECT_EQ(subgroup_closure(g, hm.to_vector()).order(), 3u);
  EXPECT_FALSE(g.is_abelian());
}

TEST(Quotient, ByWholeAndTrivial) {
  const auto g = symmetric(3);
  EXPECT_EQ(quotient(g, Subgroup::whole(g)).group.order(), 1u);
  EXPECT_TRUE(are_isomorphic(quotient(g, Subgroup::trivial(g)).group, g));
}

TEST(Quotient, Q8ModCenterIsKlein) {
  const auto q8 = generalized_quaternion(8);
  const auto q = quotient(q8, center(q8));
  EXPECT_EQ(q.group.order(), 4u);
  EXPECT_EQ(exponent(q.group), 2u);
  EXPECT_TRUE(q.projection.is_homomorphism());
}

TEST(Quotient, NotNormal) {
  const auto g = symmetric(3);
  const auto t = subgroup_closure(g, {elem{1}});
  ASSERT_EQ(t.order(), 2u);
  EXPECT_EQ(code_of([&] { quotient(g, t); }), errc::not_normal);
}

TEST(Closure, EmptyAndIdentitySeeds) {
  const auto g = symmetric(3);
  EXPECT_TRUE(subgroup_closure(g, std::vector<elem>{}).is_trivial());
  EXPECT_TRUE(subgroup_closure(g, {elem{0}}).is_trivial());
}

TEST(Closure, Transposition) {
  const auto g = symmetric(3);
  for (elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) == 2) { EXPECT_EQ(subgroup_closure(g, {x}).order(), 2u); }
}

TEST(Closure, Q16Rotation) {
  const auto q = generalized_quaternion(16);  // a has index 1
  EXPECT_EQ(q.element_order(1), 8u);
  EXPECT_EQ(subgroup_closure(q, {elem{1}}).order(), 8u);
}

TEST(AllSubgroups, Counts) {
  EXPECT_EQ(all_subgroups(cyclic(7)).size(), 2u);
  EXPECT_EQ(all_subgroups(symmetric(3)).size(), 6u);
  const auto q8 = generalized_quaternion(8);
  const auto subs = all_subgroups(q8);
  EXPECT_EQ(subs.size(), 6u);
  for (const auto& h : subs) EXPECT_TRUE(is_normal_by_definition(q8, h));
  EXPECT_EQ(all_subgroups(symmetric(4)).size(), 30u);
  EXPECT_EQ(all_subgroups(elementary_abelian(2, 3)).size(), 16u);
}

TEST(AllSubgroups, OrderCap) {
  EXPECT_EQ(code_of([] { all_subgroups(cyclic(256)); }), errc::order_cap);
}

TEST(AllSubgroups, InvariantsOnCatalog) {
  for (const auto& e : catalog::manifest()) {
    const auto g = catalog::build(e.spec);
    std::set<element_set> seen;
    for (const auto& h : all_subgroups(g)) {
      EXPECT_TRUE(h.contains(0));
      EXPECT_EQ(g.order() % h.order(), 0u) << e.spec;
      for (elem a : h.members()) {
        EXPECT_TRUE(h.contains(g.inv(a)));
        for (elem b : h.members()) ASSERT_TRUE(h.contains(g.mul(a, b))) << e.spec;
      }
      EXPECT_TRUE(subgroup_closure(g, h.members()) == h);
      EXPECT_TRUE(seen.insert(h.mask()).second) << e.spec << " lists a subgroup twice";
    }
  }
}

TEST(Classes, AbelianSingletons) {
  const auto g = abelian({4, 2});
  EXPECT_EQ(conjugacy_classes(g).size(), 8u);
}

TEST(Classes, S3AndQ8) {
  EXPECT_EQ(class_sizes(symmetric(3)), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(class_sizes(generalized_quaternion(8)), (std::vector<std::size_t>{1, 1, 2, 2, 2}));
}

TEST(Classes, ClassEquationOnCatalog) {
  for (const auto& e : catalog::manifest()) {
    const auto g = catalog::build(e.spec);
    std::size_t total = 0;
    for (const auto& c : conjugacy_classes(g)) {
      EXPECT_EQ(g.order() % c.size(), 0u) << e.spec;
      total += c.size();
    }
    EXPECT_EQ(total, g.order()) << e.spec;
  }
}

TEST(Centralizers, Basics) {
  const auto q8 = generalized_quaternion(8);
  EXPECT_EQ(centralizer(q8, std::vector<elem>{0}).order(), 8u);
  EXPECT_EQ(center(q8).order(), 2u);
  const auto s3 = symmetric(3);
  EXPECT_TRUE(center(s3).is_trivial());
}

TEST(Centralizers, Q16CyclicBNotNormal) {
  const auto q = generalized_quaternion(16);  // b has index 8
  const auto b = cyclic_subgroup(q, 8);
  EXPECT_EQ(b.order(), 4u);
  EXPECT_FALSE(is_normal(q, b));
  EXPECT_FALSE(is_normal_by_definition(q, b));
  EXPECT_EQ(normalizer(q, b).order(), 8u);
}

TEST(Centralizers, NormalityTestsAgreeOnCatalog) {
  for (const auto& e : catalog::manifest()) {
    const auto g = catalog::build(e.spec);
    for (const auto& h : all_subgroups(g)) EXPECT_EQ(is_normal(g, h), is_normal_by_definition(g, h)) << e.spec;
  }
}

TEST(Orders, Exponents) {
  for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(exponent(elementary_abelian(2, k)), 2u);
  EXPECT_EQ(exponent(generalized_quaternion(16)), 8u);
  const auto b = kappa::build_bundle(3);
  EXPECT_EQ(b.k_group.element_order(b.k_group.mul(b.x, b.k)), 3u);
}

TEST(Sylow, Examples) {
  EXPECT_EQ(sylow(cyclic(12), 2).order(), 4u);
  const auto s3 = symmetric(3);
  EXPECT_EQ(o_p(s3, 3).order(), 3u);
  EXPECT_TRUE(o_p(s3, 2).is_trivial());
  const auto c = normal_p_complement(s3, 2);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->order(), 3u);
  EXPECT_FALSE(normal_p_complement(symmetric(4), 3));
  EXPECT_EQ(commutator_subgroup(symmetric(4)).order(), 12u);
  EXPECT_TRUE(is_nilpotent(generalized_quaternion(16)));
  EXPECT_FALSE(is_nilpotent(symmetric(3)));
}

TEST(Sylow, PropertiesOnCatalog) {
  for (const auto& e : catalog::manifest()) {
    const auto g = catalog::build(e.spec);
    for (auto p : prime_divisors(g.order())) {
      const auto s = sylow(g, p);
      EXPECT_EQ(s.order(), p_part(g.order(), p)) << e.spec << " p=" << p;
      const auto op = o_p(g, p);
      EXPECT_TRUE(is_normal_by_definition(g, op)) << e.spec;
      EXPECT_TRUE(op.mask().subset_of(s.mask())) << e.spec;
      // largest normal p-subgroup: every normal p-subgroup lies inside it
      for (const auto& n : normal_subgroups(g))
        if (is_power_of(n.order(), p)) { EXPECT_TRUE(n.mask().subset_of(op.mask())) << e.spec; }
    }
  }
}

TEST(Quotient, OrdersOnCatalog) {
  for (const auto& e : catalog::manifest()) {
    if (e.order > 64) continue;
    const auto g = catalog::build(e.spec);
    for (const auto& n : normal_subgroups(g)) {
      const auto q = quotient(g, n);
      EXPECT_EQ(q.group.order() * n.order(), g.order());
      EXPECT_TRUE(q.projection.is_homomorphism());
    }
  }
}

TEST(Maps, CompositionAndInverse) {
  const auto g = cyclic(5);
  GroupMap dbl(g, g, {0, 2, 4, 1, 3});
  EXPECT_TRUE(dbl.is_automorphism());
  EXPECT_TRUE(dbl.then(dbl.inverse()).is_identity());
  EXPECT_EQ(map_order(dbl), 4u);
  EXPECT_EQ(power(dbl, 2)(1), 4u);
  GroupMap bad(g, g, {0, 2, 2, 1, 3});
  EXPECT_FALSE(bad.is_bijective());
  EXPECT_EQ(code_of([&] { GroupMap(g, g, {0, 1}); }), errc::bad_params);
}

TEST(Actions, Validity) {
  const auto n = cyclic(3), h = cyclic(2);
  EXPECT_TRUE(Action::from_generator(h, 1, n, {0, 2, 1}).is_valid());
  // C3 cannot act on C3 by inversion
  const auto h3 = cyclic(3);
  EXPECT_FALSE(Action::from_generator(h3, 1, n, {0, 2, 1}).is_valid());
}

TEST(ElementSet, Operations) {
  element_set a(70), b(70);
  a.set(1);
  a.set(65);
  b.set(65);
  EXPECT_TRUE(b.subset_of(a));
  EXPECT_FALSE(a.subset_of(b));
  a &= b;
  EXPECT_EQ(a.count(), 1u);
  EXPECT_TRUE(a == b);
  b.fill();
  EXPECT_EQ(b.count(), 70u);
}

TEST(Names, StructuredAndUnique) {
  for (const auto& spec : {"quaternion:8*cyclic:4", "symmetric:4", "aq:3;8", "q_group:4,2;0,1"}) {
    const auto g = catalog::build(spec);
    std::set<std::string> names;
    for (elem x = 0; x < g.order(); ++x) {
      EXPECT_EQ(g.name(x).find(' '), std::string::npos);
      names.insert(g.name(x));
    }
    EXPECT_EQ(names.size(), g.order()) << spec;
  }
}
