#include <gtest/gtest.h>

#include <fstream>

#include "oracles.hpp"

using namespace polysym;

TEST(Relations, DistributionCountsAreBellNumbers) {
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(static_cast<long>(distributions(k).size()), oracle::bell(k)) << "k=" << k;
  EXPECT_EQ(distributions(1).size(), 1u);
  EXPECT_THROW(distributions(0), DomainError);
}

TEST(Relations, DistributionsArePartitionsWithoutRepeats) {
  std::set<std::set<std::set<int>>> seen;
  for (const auto& d : distributions(5)) {
    std::set<std::set<int>> blocks;
    std::vector<int> hit(5, 0);
    for (const auto& b : d) {
      ASSERT_FALSE(b.empty());
      for (int i : b) ++hit[static_cast<std::size_t>(i)];
      blocks.insert(std::set<int>(b.begin(), b.end()));
    }
    for (int h : hit) EXPECT_EQ(h, 1);
    EXPECT_TRUE(seen.insert(blocks).second);
  }
}

TEST(Relations, PsiCoefficientPatternForFourWords) {
  const std::vector<ExpVec> w = {ExpVec{1, 0, 0, 0}, ExpVec{0, 1, 0, 0}, ExpVec{0, 0, 1, 0}, ExpVec{0, 0, 0, 1}};
  const FPoly f = psi(3, w);
  const TSpace s = f.space();
  auto coeff = [&](const char* text) { return f.coefficient(parse_fpoly(text, 4, s.cap).terms().begin()->first); };
  EXPECT_EQ(coeff("[xyzw]"), -6);
  EXPECT_EQ(coeff("[xyz][w]"), 2);
  EXPECT_EQ(coeff("[xy][zw]"), 1);
  EXPECT_EQ(coeff("[xy][z][w]"), -1);
  EXPECT_EQ(coeff("[x][y][z][w]"), 1);
  EXPECT_EQ(f.size(), static_cast<std::size_t>(oracle::bell(4)));
}

TEST(Relations, PsiOfRepeatedWordsVanishesUnderPhi) {
  const FPoly f = psi(3, {ExpVec{1, 0}, ExpVec{1, 0}, ExpVec{0, 1}, ExpVec{0, 1}});
  EXPECT_TRUE(phi_eval(f, 3).is_zero());
  EXPECT_TRUE(oracle::vanishes_at_points(f, 3, 10, 5));
  EXPECT_FALSE(phi_eval(f, 4).is_zero());
}

TEST(Relations, PsiVanishesForRandomWords) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 2);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<ExpVec> words;
      while (static_cast<int>(words.size()) < n + 1) {
        ExpVec w{e(rng), e(rng)};
        if (!w.is_zero()) words.push_back(w);
      }
      const FPoly f = psi(n, words);
      EXPECT_TRUE(phi_eval(f, n).is_zero());
      EXPECT_TRUE(oracle::vanishes_at_points(f, n, 5, 17 + trial));
    }
}

TEST(Relations, GramMatchesLaplaceExpansion) {
  for (int n = 1; n <= 4; ++n) EXPECT_EQ(gram_relation(n, n).element, oracle::gram_by_laplace(n, n)) << "n=" << n;
  EXPECT_EQ(gram_relation(2, 3).element, oracle::gram_by_laplace(2, 3));
}

TEST(Relations, GramForOneRow) {
  const FPoly j = gram_relation(1, 1).element;
  EXPECT_EQ(j, parse_fpoly("[x^2] - [x]^2", 1, 2));
  EXPECT_TRUE(phi_eval(j, 1).is_zero());
  EXPECT_FALSE(phi_eval(j, 2).is_zero());
}

TEST(Relations, GramIsHighestWeightKernelElement) {
  for (int n = 2; n <= 4; ++n) {
    const auto rec = gram_relation(n, n);
    EXPECT_TRUE(phi_eval(rec.element, n).is_zero());
    EXPECT_TRUE(oracle::vanishes_at_points(rec.element, n, 5, 100 + n));
    const auto hw = is_highest_weight(rec.element);
    EXPECT_TRUE(hw.highest);
    EXPECT_EQ(*hw.weight, ExpVec::from(std::vector<int>(static_cast<std::size_t>(n), 2)));
  }
  EXPECT_THROW(gram_relation(3, 2), DomainError);
}

TEST(Relations, GramRaisingCommutesWithEntrywiseAction) {
  // Derivative of a determinant: sum over rows of the determinant with that row differentiated.
  for (int n = 2; n <= 3; ++n) {
    const auto a = oracle::gram_matrix(n, n);
    const FPoly j = oracle::laplace_det(a);
    for (int i = 0; i + 1 < n; ++i) {
      FPoly entrywise(j.space());
      for (std::size_t r = 0; r < a.size(); ++r) {
        auto b = a;
        for (auto& entry : b[r]) entry = raising_action(i, i + 1, entry);
        entrywise = entrywise + oracle::laplace_det(b);
      }
      EXPECT_EQ(entrywise, raising_action(i, i + 1, j));
      EXPECT_TRUE(entrywise.is_zero());
    }
  }
}

TEST(Relations, ThreeRowGramCoefficientMatchesGolden) {
  std::ifstream in(std::string(POLYSYM_GOLDEN_DIR) + "/j222.json");
  ASSERT_TRUE(in);
  const auto golden = nlohmann::json::parse(in);
  const FPoly j = j222(3).element;
  const FPoly mono = parse_fpoly(golden.at("monomial").get<std::string>(), 3, 3);
  EXPECT_EQ(j.coefficient(mono.terms().begin()->first).get_str(), golden.at("coefficient").get<std::string>());
  EXPECT_EQ(j.size(), golden.at("terms").get<std::size_t>());
  EXPECT_EQ(oracle::gram_by_laplace(3, 3).coefficient(mono.terms().begin()->first).get_str(), golden.at("coefficient").get<std::string>());
}

TEST(Relations, ExplicitRelationFormsAgree) {
  EXPECT_EQ(j32_form_a().terms(), j32_form_b().terms());
  EXPECT_EQ(j42_form_a().terms(), j42_form_b().terms());
  EXPECT_EQ(j32_form_b().size(), 11u);
  EXPECT_EQ(j42_form_b().size(), 15u);
}

TEST(Relations, ExplicitRelationsAreKernelHighestWeightVectors) {
  for (int m = 2; m <= 4; ++m) {
    for (const auto& rec : {j32(m), j42(m)}) {
      EXPECT_TRUE(phi_eval(rec.element, 3).is_zero()) << rec.name << " m=" << m;
      EXPECT_TRUE(oracle::vanishes_at_points(rec.element, 3, 5, 7));
      const auto hw = is_highest_weight(rec.element);
      EXPECT_TRUE(hw.highest);
      EXPECT_EQ(*hw.weight, *rec.weight);
    }
  }
  EXPECT_EQ(*j32(2).weight, (ExpVec{3, 2}));
  EXPECT_EQ(*j42(2).weight, (ExpVec{4, 2}));
}

TEST(Relations, CatalogSchema) {
  const auto cat = relation_catalog_json(standard_relations());
  EXPECT_EQ(cat.at("schema"), "polysym-relations/1");
  EXPECT_EQ(cat.at("relations").size(), standard_relations().size());
  const auto& first = cat.at("relations").at(0);
  EXPECT_TRUE(first.contains("name"));
  EXPECT_TRUE(first.contains("terms"));
}
