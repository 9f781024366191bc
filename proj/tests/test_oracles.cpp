#include <gtest/gtest.h>

#include <powerchord/census.hpp>
#include <powerchord/oracles.hpp>
#include <powerchord/witnesses.hpp>

using namespace powerchord;

namespace {

bool computed_chordal(const FiniteGroup &g) { return is_chordal(power_graph(g)).chordal(); }

} // namespace

TEST(Oracles, CyclicUpTo200) {
  for (std::uint64_t n = 1; n <= 200; ++n)
    EXPECT_EQ(oracle_cyclic(n).prediction, prediction_from(computed_chordal(cyclic(n)))) << n;
}

TEST(Oracles, DihedralUpTo60) {
  for (std::uint64_t n = 1; n <= 60; ++n)
    EXPECT_EQ(oracle_dihedral(n).prediction, prediction_from(computed_chordal(dihedral(n)))) << n;
}

TEST(Oracles, DicyclicUpTo30) {
  for (std::uint64_t n = 2; n <= 30; ++n)
    EXPECT_EQ(oracle_dicyclic(n).prediction, prediction_from(computed_chordal(dicyclic(n)))) << n;
}

TEST(Oracles, FamilyExamples) {
  EXPECT_EQ(oracle_dihedral(15).prediction, Prediction::chordal);
  EXPECT_EQ(oracle_dicyclic(6).prediction, Prediction::chordal);
  EXPECT_EQ(oracle_dicyclic(15).prediction, Prediction::non_chordal);
  EXPECT_FALSE(computed_chordal(dicyclic(15)));
  EXPECT_EQ(oracle_symmetric(5).prediction, Prediction::chordal);
  EXPECT_EQ(oracle_symmetric(6).prediction, Prediction::non_chordal);
}

TEST(Oracles, GroupLevelOraclesAbstainOutsideHypotheses) {
  EXPECT_EQ(oracle_p_group(symmetric(3)).prediction, Prediction::inapplicable);
  EXPECT_EQ(oracle_p_group(dihedral(4)).prediction, Prediction::chordal);
  EXPECT_EQ(oracle_eppo(cyclic(6)).prediction, Prediction::inapplicable);
  EXPECT_EQ(oracle_eppo(alternating(5)).prediction, Prediction::chordal);
  EXPECT_EQ(oracle_nilpotent(symmetric(3)).prediction, Prediction::inapplicable);
  EXPECT_EQ(oracle_nilpotent(cyclic(30)).prediction, Prediction::non_chordal);
  EXPECT_EQ(oracle_trivial_intersection(symmetric(4)).prediction, Prediction::chordal);
  EXPECT_EQ(oracle_trivial_intersection(symmetric(5)).prediction, Prediction::chordal);
  EXPECT_EQ(oracle_trivial_intersection(dicyclic(2)).prediction, Prediction::inapplicable);
}

TEST(Oracles, NilpotentCriterionOnTwoPrimeGroups) {
  EXPECT_EQ(oracle_nilpotent(build("C3 x Q8")).prediction, Prediction::non_chordal);
  EXPECT_EQ(oracle_nilpotent(build("C2 x C2 x C3")).prediction, Prediction::chordal);
  EXPECT_EQ(oracle_nilpotent(build("C2 x C12")).prediction, Prediction::non_chordal);
}

TEST(Oracles, ProductRulesReturnOneVerdictEach) {
  const auto vs = product_rule_verdicts(cyclic(3), build("C3 x D5"));
  ASSERT_EQ(vs.size(), 6u);
  for (std::size_t i = 0; i < vs.size(); ++i)
    EXPECT_EQ(vs[i].source, "product-rule-" + std::to_string(i + 1));
}

TEST(Oracles, ThreePrimesTwoNonCyclicFactors) {
  const auto v = oracle_product(build("C3 x C3"), dihedral(5));
  EXPECT_EQ(v.source, "product-rule-1");
  EXPECT_EQ(v.prediction, Prediction::non_chordal);
  EXPECT_FALSE(computed_chordal(build("C3 x C3 x D5")));
}

TEST(Oracles, CatalogCrossCheckOnlyLedgeredDisagreements) {
  for (std::uint64_t n = 2; n <= kCatalogMaxOrder; ++n) {
    if (!catalog_covers(n))
      continue;
    for (const auto &row : census(n).rows)
      EXPECT_TRUE(row.report.clean()) << row.report.group;
  }
}

TEST(Oracles, LedgerEntriesAreStillAccurate) {
  for (const auto &d : known_discrepancies()) {
    if (d.source != "census" && d.source != "witness") {
      const auto g = build(d.group);
      EXPECT_EQ(prediction_from(computed_chordal(g)), d.computed) << d.group;
    }
  }
}

TEST(Oracles, ContradictoryDetection) {
  const std::vector<OracleVerdict> agree{{"x", Prediction::chordal, ""}, {"y", Prediction::inapplicable, ""}};
  const std::vector<OracleVerdict> clash{{"x", Prediction::chordal, ""}, {"y", Prediction::non_chordal, ""}};
  EXPECT_FALSE(contradictory(agree));
  EXPECT_TRUE(contradictory(clash));
}

TEST(Witnesses, SymmetricTwelveCycleIsInduced) {
  const auto w = symmetric_12_cycle();
  EXPECT_TRUE(w.resolved);
  EXPECT_TRUE(w.induced) << w.problem;
}

TEST(Witnesses, ThreePrimeEightCycleIsInduced) {
  const auto w = three_prime_8_cycle();
  EXPECT_TRUE(w.induced) << w.problem;
}

TEST(Witnesses, ProductSixCycleFailsBecauseGroupIsChordal) {
  const auto w = product_6_cycle();
  EXPECT_FALSE(w.induced);
  EXPECT_TRUE(w.group_chordal);
  EXPECT_NE(w.problem.find("not adjacent"), std::string::npos);
}

TEST(Witnesses, AlternatingEightCycleLeavesA7) {
  const auto w = alternating_8_cycle();
  EXPECT_FALSE(w.resolved);
  EXPECT_TRUE(w.group_chordal);
  const auto s7 = alternating_8_cycle_in_s7();
  EXPECT_TRUE(s7.resolved);
  EXPECT_FALSE(s7.induced);
  EXPECT_TRUE(s7.substitute_verified);
}

TEST(Witnesses, DicyclicArrayIsPeoOnlyForPowersOfTwo) {
  for (std::uint64_t n = 2; n <= 16; ++n)
    EXPECT_EQ(dicyclic_array_is_peo(n), n == 2 || n == 4 || n == 8 || n == 16) << n;
}

TEST(Witnesses, PowerAdjacency) {
  const auto g = cyclic(6);
  EXPECT_TRUE(power_adjacent(g, 1, 2));
  EXPECT_FALSE(power_adjacent(g, 2, 3));
  EXPECT_FALSE(power_adjacent(g, 1, 1));
}
