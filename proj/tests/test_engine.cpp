#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

using namespace crnbinom;

namespace {

TEST(BuildMatrix, WaterGasCoefficients) {
  RationalMatrix m = build_binomial_matrix(testnets::water_gas());
  ASSERT_EQ(m.rows(), 5u);
  ASSERT_EQ(m.cols(), 2u);
  long expected[5][2] = {{1, -1}, {1, 0}, {-1, 2}, {-1, 0}, {0, -1}};
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      EXPECT_EQ(m.at(r, c), make_rational(expected[r][c])) << r << "," << c;
    }
  }
  EXPECT_EQ(m.row_labels()[0], "p(x1)");
  EXPECT_EQ(m.col_labels()[1], "b(r2)");
}

TEST(BuildMatrix, SharedSpeciesColumn) {
  RationalMatrix m = build_binomial_matrix(testnets::four_a_ab());
  ASSERT_EQ(m.rows(), 2u);
  ASSERT_EQ(m.cols(), 1u);
  EXPECT_EQ(m.at(0, 0), make_rational(3));
  EXPECT_EQ(m.at(1, 0), make_rational(-1));
}

TEST(BuildMatrix, TriangleCoefficients) {
  RationalMatrix m = build_binomial_matrix(testnets::triangle());
  ASSERT_EQ(m.rows(), 2u);
  ASSERT_EQ(m.cols(), 3u);
  long expected[2][3] = {{2, 1, 1}, {-2, -1, -1}};
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 3; ++c) {
      EXPECT_EQ(m.at(r, c), make_rational(expected[r][c]));
    }
  }
}

TEST(BuildMatrix, IrreversibleBlock) {
  RationalMatrix none = build_irreversible_matrix(testnets::water_gas());
  EXPECT_EQ(none.cols(), 0u);
  EXPECT_EQ(none.rows(), 5u);

  ParseResult inflow = parse_network("r: 0 -> 1 A [k]\n");
  ASSERT_TRUE(inflow.ok());
  RationalMatrix in_m = build_irreversible_matrix(*inflow.network);
  ASSERT_EQ(in_m.cols(), 1u);
  EXPECT_EQ(in_m.at(0, 0), make_rational(1));
  EXPECT_EQ(in_m.col_labels()[0], "t(r)");

  ParseResult decay = parse_network("r: 1 A -> 1 B [k]\n");
  ASSERT_TRUE(decay.ok());
  RationalMatrix d_m = build_irreversible_matrix(*decay.network);
  EXPECT_EQ(d_m.at(0, 0), make_rational(-1));
  EXPECT_EQ(d_m.at(1, 0), make_rational(1));
}

TEST(TestReversible, WaterGasIsBinomial) {
  ReactionNetwork wg = testnets::water_gas();
  BinomialityReport rep = test_reversible(wg);
  EXPECT_EQ(rep.verdict.kind, VerdictKind::Binomial);
  ASSERT_EQ(rep.verdict.generators.size(), 2u);
  VariableNames names = names_for(wg);
  EXPECT_EQ(render(rep.verdict.generators[0], names), "-k12*x1*x2 + k21*x3*x4");
  EXPECT_EQ(render(rep.verdict.generators[1], names), "-k34*x3^2 + k43*x1*x5");
  EXPECT_TRUE(rep.verdict.witness_rows.empty());
  EXPECT_EQ(rep.rref.rank, 2u);
  EXPECT_EQ(rep.reversible_count, 2u);
  EXPECT_EQ(rep.irreversible_count, 0u);
  EXPECT_FALSE(rep.monomial_generators_present);
  for (const Polynomial& g : rep.verdict.generators) EXPECT_TRUE(g.is_binomial());
}

TEST(TestReversible, SingleReactionIsBinomial) {
  ReactionNetwork fa = testnets::four_a_ab();
  BinomialityReport rep = test_reversible(fa);
  EXPECT_EQ(rep.verdict.kind, VerdictKind::Binomial);
  ASSERT_EQ(rep.verdict.generators.size(), 1u);
  EXPECT_EQ(rep.verdict.generators[0], reaction_binomial(fa, 0));
}

TEST(TestReversible, TriangleIsNotBinomial) {
  BinomialityReport rep = test_reversible(testnets::triangle());
  EXPECT_EQ(rep.verdict.kind, VerdictKind::NotBinomial);
  EXPECT_TRUE(rep.verdict.generators.empty());
  ASSERT_EQ(rep.verdict.witness_rows.size(), 1u);
  EXPECT_EQ(rep.verdict.witness_rows[0].row, 0u);
  EXPECT_EQ(rep.verdict.witness_rows[0].support, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(rep.rref.matrix.at(0, 1), make_rational(1, 2));
}

TEST(TestReversible, RejectsMixedAndInvalidNetworks) {
  EXPECT_THROW(test_reversible(testnets::water_gas_with_decay()), std::invalid_argument);

  ReactionNetwork bad;
  bad.add_species("A");
  bad.add_reaction("r", Complex({{0, 1}}), Complex({{0, 1}}), "k1", "k2");
  EXPECT_THROW(test_reversible(bad), std::invalid_argument);
}

TEST(TestReversible, ReportsPhaseTimings) {
  BinomialityReport rep = test_reversible(testnets::water_gas());
  EXPECT_TRUE(rep.timings_us.count("build"));
  EXPECT_TRUE(rep.timings_us.count("rref"));
  EXPECT_TRUE(rep.timings_us.count("combine"));
  for (const auto& [phase, us] : rep.timings_us) EXPECT_GE(us, 0) << phase;
}

TEST(TestGeneral, AgreesWithReversiblePathOnAllReversibleInput) {
  for (const ReactionNetwork& net :
       {testnets::water_gas(), testnets::four_a_ab(), testnets::triangle()}) {
    BinomialityReport general = test_general(net);
    BinomialityReport reversible = test_reversible(net);
    EXPECT_EQ(general.verdict.kind, reversible.verdict.kind);
    EXPECT_EQ(general.verdict.generators, reversible.verdict.generators);
    EXPECT_EQ(general.irreversible_count, 0u);
    EXPECT_FALSE(general.monomial_generators_present);
  }
}

TEST(TestGeneral, MixedNetworkWithMonomialGenerators) {
  ReactionNetwork net = testnets::water_gas_with_decay();
  BinomialityReport rep = test_general(net);
  EXPECT_EQ(rep.verdict.kind, VerdictKind::Binomial);
  ASSERT_EQ(rep.verdict.generators.size(), 2u);
  ASSERT_EQ(rep.monomial_generators.size(), 1u);
  EXPECT_TRUE(rep.monomial_generators_present);
  EXPECT_EQ(render(rep.monomial_generators[0], names_for(net)), "k5*x5");
  EXPECT_EQ(rep.reversible_count, 2u);
  EXPECT_EQ(rep.irreversible_count, 1u);
  EXPECT_EQ(rep.rref.rank, 3u);
  EXPECT_EQ(rep.coefficient_matrix.cols(), 3u);
  EXPECT_EQ(rep.coefficient_matrix.col_labels()[2], "t(r3)");

  // The stacked matrix pins down: reversible block as before, decay column
  // (+1, 0, 0, 0, -1).
  EXPECT_EQ(rep.coefficient_matrix.at(0, 2), make_rational(1));
  EXPECT_EQ(rep.coefficient_matrix.at(4, 2), make_rational(-1));
}

TEST(TestGeneral, OppositeIrreversibleArrowIsInconclusive) {
  ReactionNetwork net = testnets::back_and_forth();
  BinomialityReport rep = test_general(net);
  EXPECT_EQ(rep.verdict.kind, VerdictKind::Inconclusive);
  EXPECT_TRUE(rep.verdict.generators.empty());
  ASSERT_EQ(rep.verdict.witness_rows.size(), 1u);
  EXPECT_EQ(rep.verdict.witness_rows[0].support, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(rep.coefficient_matrix.at(0, 0), make_rational(1));
  EXPECT_EQ(rep.coefficient_matrix.at(0, 1), make_rational(1));
}

TEST(TestGeneral, NeverReturnsNotBinomialOnMixedNetworks) {
  testnets::FuzzShape shape;
  shape.max_species = 5;
  shape.max_reactions = 5;
  shape.reversible_fraction = 0.6;
  int inconclusive_seen = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    ReactionNetwork net = testnets::fuzz_network(seed, shape);
    if (partition(net).irreversible.empty()) continue;
    BinomialityReport rep = test_general(net);
    EXPECT_NE(rep.verdict.kind, VerdictKind::NotBinomial) << format_network(net);
    if (rep.verdict.kind == VerdictKind::Inconclusive) ++inconclusive_seen;
  }
  // The witness path must be exercised, not vacuously skipped.
  EXPECT_GT(inconclusive_seen, 0);
}

TEST(TestGeneral, ReversiblePathNeverReturnsInconclusive) {
  testnets::FuzzShape shape;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    ReactionNetwork net = testnets::fuzz_network(seed, shape);
    BinomialityReport rep = test_reversible(net);
    EXPECT_NE(rep.verdict.kind, VerdictKind::Inconclusive);
    BinomialityReport gen = test_general(net);
    EXPECT_EQ(gen.verdict.kind, rep.verdict.kind) << format_network(net);
  }
}

TEST(TestGeneral, BinomialGeneratorsSpanTheOriginalIdeal) {
  for (const ReactionNetwork& net :
       {testnets::water_gas(), testnets::four_a_ab(), testnets::water_gas_with_decay()}) {
    BinomialityReport rep = test_general(net);
    ASSERT_EQ(rep.verdict.kind, VerdictKind::Binomial);
    std::vector<Polynomial> found = rep.verdict.generators;
    found.insert(found.end(), rep.monomial_generators.begin(), rep.monomial_generators.end());
    EXPECT_TRUE(ideal_equal(ode_generators(net), found)) << format_network(net);
  }
}

TEST(Invariance, VerdictUnderSpeciesPermutation) {
  for (const ReactionNetwork& net :
       {testnets::water_gas(), testnets::triangle(), testnets::four_a_ab()}) {
    std::vector<int> perm(net.species_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::reverse(perm.begin(), perm.end());
    ReactionNetwork permuted = testnets::permute_species(net, perm);
    EXPECT_EQ(test_reversible(permuted).verdict.kind, test_reversible(net).verdict.kind);
  }
}

TEST(Invariance, VerdictUnderReactionPermutationRateRenamingAndSideSwap) {
  for (const ReactionNetwork& net :
       {testnets::water_gas(), testnets::triangle(), testnets::water_gas_with_decay()}) {
    VerdictKind base = test_general(net).verdict.kind;

    std::vector<int> order(net.reaction_count());
    std::iota(order.begin(), order.end(), 0);
    std::reverse(order.begin(), order.end());
    EXPECT_EQ(test_general(testnets::permute_reactions(net, order)).verdict.kind, base);
    EXPECT_EQ(test_general(testnets::rename_rates(net, "_q")).verdict.kind, base);
    EXPECT_EQ(test_general(testnets::swap_reaction_sides(net)).verdict.kind, base);
  }
}

TEST(AssembleReport, FlagTracksTheMonomialList) {
  Verdict v;
  v.kind = VerdictKind::Binomial;
  RationalMatrix m(1, 1);
  BinomialityReport without = assemble_report(v, m, rref(m), 1, 0, {}, {});
  EXPECT_FALSE(without.monomial_generators_present);
  BinomialityReport with =
      assemble_report(v, m, rref(m), 1, 0, {Polynomial::variable(rate_var(0))}, {});
  EXPECT_TRUE(with.monomial_generators_present);
}

TEST(VerdictKindNames, RenderAsStrings) {
  EXPECT_STREQ(to_string(VerdictKind::Binomial), "Binomial");
  EXPECT_STREQ(to_string(VerdictKind::NotBinomial), "NotBinomial");
  EXPECT_STREQ(to_string(VerdictKind::Inconclusive), "Inconclusive");
}

}  // namespace
