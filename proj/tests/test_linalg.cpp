#include <gtest/gtest.h>

#include "polysym/polysym.hpp"

using namespace polysym;

namespace {

RatVec row(std::initializer_list<long> dense) {
  std::vector<Rational> v;
  for (long x : dense) v.emplace_back(x);
  return dense_to_sparse(v);
}

}  // namespace

TEST(Linalg, RankOfDependentRows) {
  const std::vector<RatVec> rows = {row({1, 2, 3}), row({2, 4, 6}), row({0, 1, 1})};
  EXPECT_EQ(rank_of(rows, 3), 2u);
}

TEST(Linalg, InsertReportsIndependence) {
  Echelon e(3);
  EXPECT_TRUE(e.insert(row({1, 1, 0})));
  EXPECT_TRUE(e.insert(row({0, 1, 1})));
  EXPECT_FALSE(e.insert(row({1, 2, 1})));
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_FALSE(e.full());
}

TEST(Linalg, SolveReturnsLabelledCombination) {
  Echelon e(3, true);
  e.insert(row({1, 1, 0}), 7);
  e.insert(row({0, 1, 1}), 9);
  auto sol = e.solve(row({2, 5, 3}));
  ASSERT_TRUE(sol);
  Rational c7 = 0, c9 = 0;
  for (const auto& [label, c] : *sol) (label == 7 ? c7 : c9) = c;
  EXPECT_EQ(c7, 2);
  EXPECT_EQ(c9, 3);
  EXPECT_FALSE(e.solve(row({0, 0, 1})));
}

TEST(Linalg, RemainderIsLinear) {
  Echelon e(4);
  e.insert(row({1, 2, 0, 1}));
  e.insert(row({0, 0, 3, 1}));
  const RatVec a = e.remainder(row({1, 0, 0, 0}));
  const RatVec b = e.remainder(row({5, 0, 0, 0}));
  RatVec scaled = a;
  for (auto& [i, c] : scaled) c *= 5;
  EXPECT_EQ(scaled, b);
}

TEST(Linalg, NullspaceAnnihilatesRows) {
  const std::vector<RatVec> rows = {row({1, 2, 3, 4}), row({2, 3, 4, 5})};
  Echelon e(4);
  for (const auto& r : rows) e.insert(r);
  const auto ns = e.nullspace();
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns)
    for (const auto& r : rows) {
      Rational dot = 0;
      for (const auto& [i, x] : r)
        for (const auto& [j, y] : v)
          if (i == j) dot += x * y;
      EXPECT_EQ(dot, 0);
    }
}

TEST(Linalg, FractionalEntries) {
  Echelon e(2);
  e.insert({{0, make_rational(1, 3)}, {1, make_rational(2, 7)}});
  EXPECT_TRUE(e.in_span({{0, make_rational(7, 1)}, {1, make_rational(6, 1)}}));
}
