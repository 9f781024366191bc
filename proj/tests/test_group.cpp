#include <gtest/gtest.h>

#include <map>
#include <thread>

#include <powerchord/catalog.hpp>
#include <powerchord/group_props.hpp>

using namespace powerchord;

namespace {

std::map<std::uint64_t, std::uint64_t> subgroup_order_multiset(const std::vector<ElementSet> &subs) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto &s : subs)
    ++out[s.size()];
  return out;
}

void expect_group_axioms(const FiniteGroup &g) {
  const std::size_t n = g.order();
  for (ElementId a = 0; a < n; ++a) {
    EXPECT_EQ(g.mul(a, g.identity()), a);
    EXPECT_EQ(g.mul(g.identity(), a), a);
    EXPECT_EQ(g.mul(a, g.inv(a)), g.identity());
    EXPECT_EQ(g.pow(a, static_cast<std::int64_t>(g.element_order(a))), g.identity());
  }
  for (ElementId a = 0; a < n; a += 3)
    for (ElementId b = 0; b < n; b += 2)
      for (ElementId c = 0; c < n; c += 5)
        EXPECT_EQ(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
}

} // namespace

TEST(Permutation, ParseAndCompose) {
  const auto a = Permutation::parse("(0 1 2)", 4);
  const auto b = Permutation::parse("(1,2,3)", 4, 1);
  EXPECT_EQ(a, b);
  EXPECT_TRUE((a * a * a).is_identity());
  EXPECT_TRUE(a.is_even());
  EXPECT_FALSE(Permutation::parse("(0 1)", 3).is_even());
  EXPECT_EQ(a.to_cycle_string(), "(0 1 2)");
  EXPECT_THROW(Permutation::parse("(0 1", 3), InvalidInput);
  EXPECT_THROW(Permutation::parse("(0 0)", 3), InvalidInput);
}

TEST(FiniteField, TablesAndPrimitiveElement) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const FiniteField f(q);
    EXPECT_TRUE(f.modulus_irreducible()) << q;
    EXPECT_EQ(f.multiplicative_order(f.primitive_element()), q - 1) << q;
    for (FiniteField::Element a = 1; a < q; ++a)
      EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  }
  EXPECT_THROW(FiniteField(6), InvalidInput);
}

TEST(Group, CyclicOrderClassesAndExponent) {
  EXPECT_EQ(cyclic(1).order(), 1u);
  EXPECT_EQ(order_class_counts(cyclic(6)), (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}, {3, 2}, {6, 2}}));
  EXPECT_EQ(exponent(cyclic(30)), 30u);
  EXPECT_THROW(cyclic(0), InvalidInput);
}

TEST(Group, DihedralAndDicyclic) {
  EXPECT_EQ(dihedral(5).order(), 10u);
  EXPECT_EQ(dicyclic(10).order(), 40u);
  const auto q8 = dicyclic(2);
  EXPECT_EQ(order_class_counts(q8), (std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}, {4, 6}}));
  EXPECT_EQ(order_class_counts(dicyclic(6)).at(2), 1u);
  EXPECT_THROW(dicyclic(1), InvalidInput);
}

TEST(Group, AxiomsAcrossBackends) {
  for (const char *spec : {"C12", "D7", "Dic5", "S4", "A5", "C2 x S3", "SL(2,3)", "PSL(2,8)", "G(24,14)"})
    expect_group_axioms(build(spec));
}

TEST(Group, SymmetricAndAlternatingOrders) {
  EXPECT_EQ(symmetric(5).order(), 120u);
  EXPECT_EQ(alternating(6).order(), 360u);
  EXPECT_EQ(build("PSL(2,7)").order(), 168u);
  EXPECT_EQ(build("PSL(3,2)").order(), 168u);
  EXPECT_EQ(build("SL(2,5)").order(), 120u);
}

TEST(GroupProps, MaximalCyclicSubgroups) {
  const auto s4 = maximal_cyclic_subgroups(symmetric(4));
  EXPECT_EQ(subgroup_order_multiset(s4), (std::map<std::uint64_t, std::uint64_t>{{2, 6}, {3, 4}, {4, 3}}));
  EXPECT_TRUE(pairwise_trivial_intersection(s4));
  const auto q8 = maximal_cyclic_subgroups(dicyclic(2));
  EXPECT_EQ(subgroup_order_multiset(q8), (std::map<std::uint64_t, std::uint64_t>{{4, 3}}));
  EXPECT_FALSE(pairwise_trivial_intersection(q8));
  EXPECT_EQ(maximal_cyclic_subgroups(cyclic(6)).size(), 1u);
}

TEST(GroupProps, MaximalCyclicSubgroupsAreMaximal) {
  for (const char *spec : {"S4", "D6", "C2 x C4", "A5", "Dic3"}) {
    const auto g = build(spec);
    for (const auto &m : maximal_cyclic_subgroups(g))
      for (ElementId x = 0; x < g.order(); ++x) {
        const auto c = cyclic_subgroup(g, x);
        if (c.size() > m.size())
          EXPECT_FALSE(std::includes(c.begin(), c.end(), m.begin(), m.end())) << spec;
      }
  }
}

TEST(GroupProps, NilpotencyMatchesSylowNormality) {
  for (const auto &e : catalog()) {
    const auto g = build(e);
    EXPECT_EQ(is_nilpotent(g), all_sylows_normal(g)) << e.name;
  }
}

TEST(GroupProps, EppoAndAbelian) {
  EXPECT_TRUE(is_eppo(symmetric(4)));
  EXPECT_TRUE(is_eppo(alternating(5)));
  EXPECT_FALSE(is_eppo(cyclic(6)));
  EXPECT_TRUE(is_abelian(build("C2 x C6")));
  EXPECT_FALSE(is_abelian(dihedral(3)));
  EXPECT_TRUE(is_cyclic(build("C2 x C3")));
  EXPECT_FALSE(is_cyclic(build("C2 x C2")));
}

TEST(Group, ConcurrentReadersSeeConsistentValues) {
  const auto g = build("S5");
  std::vector<std::thread> threads;
  std::vector<std::uint64_t> sums(4, 0);
  for (std::size_t t = 0; t < sums.size(); ++t)
    threads.emplace_back([&, t] {
      for (ElementId a = 0; a < g.order(); ++a)
        sums[t] += g.element_order(a) + g.mul(a, a);
    });
  for (auto &t : threads)
    t.join();
  for (auto s : sums)
    EXPECT_EQ(s, sums.front());
}

TEST(GroupSpec, ParseAndRender) {
  EXPECT_EQ(render(parse_spec("C3 x  S3")), "C3 x S3");
  EXPECT_EQ(parse_spec("PSL(2,7)").factors.front().params, (std::vector<std::uint64_t>{2, 7}));
  EXPECT_THROW(parse_spec("Cx"), ParseError);
  EXPECT_THROW(parse_spec("C3 x"), ParseError);
  EXPECT_THROW(build("G(48,1)"), ConstructionError);
}
