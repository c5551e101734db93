#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace polysym;

namespace {

InvariantPoly image(const char* text, int m) { return phi_eval(parse_fpoly(text, m, 4), 3); }

}  // namespace

TEST(IdealLab, FComponentSizesAgreeWithSeries) {
  for (int m = 2; m <= 3; ++m)
    for (int d = 0; d <= 6; ++d)
      for (const auto& w : oracle::weights(m, d))
        EXPECT_EQ(static_cast<long>(FComponent(m, 3, ExpVec::from(w)).size()), oracle::brute_dim_F(3, m, w));
}

TEST(IdealLab, KernelComponentsOfLowDegree) {
  EXPECT_EQ(kernel_component_basis(3, 2, ExpVec{2, 2}).size(), 0u);
  EXPECT_EQ(kernel_component_basis(3, 2, ExpVec{3, 2}).size(), 1u);
  EXPECT_EQ(kernel_component_basis(3, 2, ExpVec{4, 2}).size(), 2u);
}

TEST(IdealLab, KernelLineInWeightThreeTwoIsSpannedByJ32) {
  const auto basis = kernel_component_basis(3, 2, ExpVec{3, 2});
  ASSERT_EQ(basis.size(), 1u);
  const FPoly j = with_cap(j32(2).element, 3);
  PolyEchelon<FPoly> e;
  e.insert(basis[0]);
  EXPECT_TRUE(e.contains(j));
}

TEST(IdealLab, KernelBasisIsKilledAndIndependent) {
  for (const auto& w : oracle::weights(3, 6)) {
    const auto k = kernel_component(3, 3, ExpVec::from(w));
    EXPECT_EQ(k.phi_rank + k.basis.size(), k.dim_f);
    EXPECT_EQ(static_cast<long>(k.basis.size()), oracle::brute_dim_F(3, 3, w) - oracle::brute_dim_R(3, 3, w));
    PolyEchelon<FPoly> e;
    for (const auto& b : k.basis) {
      EXPECT_TRUE(phi_eval(b, 3).is_zero());
      EXPECT_TRUE(e.insert(b));
    }
  }
}

TEST(IdealLab, KernelDimensionsInDegreeFive) {
  const std::map<int, long> expected = {{2, 2}, {3, 15}, {4, 60}};
  for (const auto& [m, dim] : expected) {
    long total = 0;
    for (const auto& w : oracle::weights(m, 5)) total += static_cast<long>(kernel_dimension(3, m, ExpVec::from(w)));
    EXPECT_EQ(total, dim);
    EXPECT_EQ(Integer(total), oracle::hook_content_dim({3, 2}, m));
  }
}

TEST(IdealLab, ReduceModPExamples) {
  EXPECT_TRUE(reduce_mod_P(image("[x^2y^2] - 1/3[xy]^2", 2)).member);
  EXPECT_TRUE(reduce_mod_P(image("[x^2y][xy]", 2)).member);
  EXPECT_FALSE(reduce_mod_P(image("[xy]", 2)).member);
  EXPECT_TRUE(reduce_mod_P(image("6[xyzw] - [xy][zw] - [xz][yw] - [xw][yz]", 4)).member);
  EXPECT_FALSE(reduce_mod_P(image("[xy][zw]", 4)).member);
}

TEST(IdealLab, CertificateReproducesInput) {
  const InvariantPoly p = image("[x^2y^2] - 1/3[xy]^2", 2);
  const PMembership mem = reduce_mod_P(p);
  ASSERT_TRUE(mem.member);
  const XSpace s{3, 2};
  XPoly rebuilt(s);
  for (const auto& t : mem.certificate) {
    const ExpVec w = ExpVec::unit(2, static_cast<std::size_t>(t.generator.symbol), t.generator.power);
    rebuilt += t.coeff * (polarized_power_sum(w, 3).body() * orbit_sum(s, t.generator.rep).body());
  }
  EXPECT_EQ(rebuilt, p.body());
}

TEST(IdealLab, CongruenceTableForThreeSymbols) {
  const TableReport r = verify_congruence_table(2);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.count(EntryStatus::failed), 0u);
  std::vector<std::string> counts;
  for (const auto& e : r.entries)
    if (e.label.find("S_3 translates") != std::string::npos) counts.push_back(e.claim);
  EXPECT_EQ(counts, (std::vector<std::string>{"6", "3", "3", "3", "6", "3", "3", "6", "6", "1", "3"}));
  for (const auto& e : r.entries) {
    if (e.claim.find("mod (P)") != std::string::npos) {
      EXPECT_FALSE(e.witness.empty()) << e.label;
    }
  }
}

TEST(IdealLab, CongruenceTableForFourSymbols) {
  const TableReport r = verify_congruence_table(4);
  EXPECT_TRUE(r.passed());
  std::vector<std::string> counts;
  for (const auto& e : r.entries)
    if (e.label.find("S_4 translates") != std::string::npos) counts.push_back(e.claim);
  EXPECT_EQ(counts, (std::vector<std::string>{"12", "12", "6", "12", "12"}));
}

TEST(IdealLab, TranslateCountOfSymmetricRelation) {
  EXPECT_EQ(translate_count(parse_fpoly("[xyz]^2 - [xy^2][xz^2]", 3, 3)), 3u);
  EXPECT_EQ(translate_count(parse_fpoly("[xy][zw] + [xz][yw] + [xw][yz]", 4, 3)), 1u);
}

TEST(IdealLab, MonomialTables) {
  for (int id : {1, 6}) {
    const TableReport r = verify_monomial_table(id);
    EXPECT_TRUE(r.passed()) << "table " << id;
    EXPECT_GT(r.count(EntryStatus::verified), 0u);
  }
}

TEST(IdealLab, ChainConstantIsRecovered) {
  const TableReport r = verify_monomial_table(1);
  bool found = false;
  for (const auto& e : r.entries)
    for (const auto& w : e.witness)
      if (w == "[x^2z][xy] == -1 * [x^2y][xz]") found = true;
  EXPECT_TRUE(found);
}

TEST(IdealLab, UnknownTablesRejected) {
  EXPECT_THROW(verify_congruence_table(3), DomainError);
  EXPECT_THROW(verify_monomial_table(2), DomainError);
}

TEST(IdealLab, SecondaryGeneratorCounts) {
  const SecondaryBuild two = build_secondary_generators(2, 8);
  EXPECT_TRUE(two.passed());
  std::vector<std::size_t> by_degree(7, 0);
  for (const auto& [alpha, v] : two.chosen)
    if (alpha.degree() <= 6) by_degree[static_cast<std::size_t>(alpha.degree())] += v.size();
  EXPECT_EQ(by_degree, (std::vector<std::size_t>{1, 0, 1, 2, 1, 0, 1}));
  const SecondaryBuild three = build_secondary_generators(3, 8);
  EXPECT_TRUE(three.passed());
  EXPECT_EQ(three.chosen.at(ExpVec{3, 2, 1}).size(), 1u);
  const SecondaryBuild four = build_secondary_generators(4, 8);
  EXPECT_TRUE(four.passed());
  EXPECT_EQ(four.chosen.at(ExpVec{1, 1, 1, 1}).size(), 3u);
}

TEST(IdealLab, GeneratorSetSizes) {
  EXPECT_EQ(polarization_generators(2).members.size(), 5u);
  EXPECT_EQ(polarization_generators(3).members.size(), 43u);
}

TEST(IdealLab, GenerationAndMinimalityForTwoSymbols) {
  const GeneratorSet g = polarization_generators(2);
  const GenerationReport gen = check_generation(g, 3, generation_degree_bound(3));
  EXPECT_TRUE(gen.passed());
  EXPECT_EQ(gen.by_degree.size(), 8u);
  const MinimalityReport min = check_minimality(g, 3);
  EXPECT_TRUE(min.passed());
  EXPECT_EQ(min.beta, 6);
  EXPECT_EQ(min.members_by_degree.at(5), 2u);
  EXPECT_EQ(min.members_by_degree.at(6), 3u);
}

TEST(IdealLab, IncompleteSetFailsGeneration) {
  GeneratorSet g = polarization_generators(2);
  g.members.pop_back();
  const GenerationReport gen = check_generation(g, 3, 6);
  EXPECT_FALSE(gen.passed());
  EXPECT_TRUE(gen.by_degree.at(5));
  EXPECT_FALSE(gen.by_degree.at(6));
}

TEST(IdealLab, RedundantSetFailsMinimality) {
  GeneratorSet g = polarization_generators(2);
  Generator extra = g.members.back();
  extra.name = "redundant";
  extra.element = g.members.front().element.shifted(TMonomial::variable(ExpVec{1, 0}));
  extra.weight = *extra.element.multidegree();
  g.members.push_back(extra);
  EXPECT_FALSE(check_minimality(g, 3).passed());
}

TEST(IdealLab, NonKernelGeneratorRejected) {
  GeneratorSet g = polarization_generators(2);
  g.members.push_back({"bad", parse_fpoly("[x^2y][xy]", 2, 3), ExpVec{3, 2}, "bad"});
  EXPECT_THROW(check_generation(g, 3, 5), DomainError);
}

TEST(IdealLab, ThreeRowGramIsIndecomposable) { EXPECT_TRUE(outside_decomposable(j222(3).element, 3)); }

TEST(IdealLab, LowerBoundInstances) {
  for (int n = 2; n <= 3; ++n) {
    const auto lb = lowerbound_check(n);
    EXPECT_TRUE(lb.passed()) << "n=" << n;
  }
  const auto big = lowerbound_check(5);
  EXPECT_FALSE(big.supported);
  EXPECT_FALSE(big.passed());
}
