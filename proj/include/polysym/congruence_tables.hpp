#pragma once

// Tabulated congruences modulo the primary ideal for three rows, in bracket
// notation. Monomial rows use a small list syntax: items are separated by ','
// and members of a proportionality chain by '~'; a trailing '*' marks an item
// congruent to zero.

#include <string>
#include <vector>

namespace polysym {

struct CongruenceRow {
  std::vector<int> multidegree;
  std::string expression;  ///< claimed to lie in (P)
  std::string relation;
  int translates_s3 = 0;  ///< 0 when the row has no S_3 column
  int translates_s4 = 0;
};

struct MonomialRow {
  std::vector<int> multidegree;
  bool all_zero = false;  ///< the row itself is starred
  std::string items;
};

struct SecondaryRow {
  std::vector<int> multidegree;
  std::vector<std::string> generators;
};

/// Three-symbol relations with their S_3 and S_4 translate counts.
inline const std::vector<CongruenceRow>& congruence_table_m3() {
  static const std::vector<CongruenceRow> rows = {
      {{3, 2, 0}, "[xy][x^2y]", "r_{3,2}", 6, 12},
      {{3, 1, 1}, "[x^2y][xz] + [x^2z][xy]", "r_{3,1,1}", 3, 12},
      {{2, 2, 1}, "[x^2y][yz] - [xy^2][xz]", "r_{2,2,1}^{(1)}", 3, 12},
      {{2, 2, 1}, "[xy][xyz]", "r_{2,2,1}^{(2)}", 3, 12},
      {{4, 2, 0}, "[x^2y]^2", "r_{4,2}", 6, 12},
      {{4, 1, 1}, "[x^2y][x^2z]", "r_{4,1,1}", 3, 12},
      {{3, 3, 0}, "[xy]^3 + 3[x^2y][xy^2]", "r_{3,3}", 3, 6},
      {{3, 2, 1}, "[x^2y][xyz] - [x^2z][xy^2]", "r_{3,2,1}^{(1)}", 6, 24},
      {{3, 2, 1}, "[xy]^2[xz] + 3[x^2z][xy^2]", "r_{3,2,1}^{(2)}", 6, 24},
      {{2, 2, 2}, "[xy][yz][zx]", "r_{2,2,2}^{(1)}", 1, 4},
      {{2, 2, 2}, "[xyz]^2 - [xy^2][xz^2]", "r_{2,2,2}^{(2)}", 3, 12},
  };
  return rows;
}

/// Four-symbol relations (all four symbols present).
inline const std::vector<CongruenceRow>& congruence_table_m4() {
  static const std::vector<CongruenceRow> rows = {
      {{2, 1, 1, 1}, "[x^2y][zw] - [xyz][xw] - [xyw][xz]", "r_{2,1,1,1}", 0, 12},
      {{3, 1, 1, 1}, "[xy][xz][xw] + 3[x^2y][xzw]", "r_{3,1,1,1}", 0, 12},
      {{2, 2, 1, 1}, "[xy]^2[zw] - 3[x^2z][y^2w] - 3[x^2w][y^2z] + 6[xyz][xyw]", "r_{2,2,1,1}^{(1)}", 0, 6},
      {{2, 2, 1, 1}, "[xy][xz][yw] - 3[x^2w][y^2z] + 3[xyz][xyw]", "r_{2,2,1,1}^{(2)}", 0, 12},
      {{2, 2, 1, 1}, "[x^2y][yzw] - [xyz][xyw]", "r_{2,2,1,1}^{(3)}", 0, 12},
  };
  return rows;
}

/// Products of non-primary generators in three symbols, descending multidegrees.
inline const std::vector<MonomialRow>& monomial_table_m3() {
  static const std::vector<MonomialRow> rows = {
      {{1, 1, 1}, false, "[xyz]"},
      {{2, 1, 1}, false, "[xy][xz]"},
      {{3, 1, 1}, false, "[x^2y][xz] ~ [x^2z][xy]"},
      {{2, 2, 1}, false, "[x^2y][yz] ~ [xy^2][xz], [xyz][xy]*"},
      {{4, 1, 1}, true, "[x^2y][x^2z]*"},
      {{3, 2, 1}, false, "[x^2y][xyz] ~ [x^2z][xy^2] ~ [xy]^2[xz]"},
      {{2, 2, 2}, false, "[xyz]^2 ~ [x^2y][yz^2] ~ [x^2z][y^2z] ~ [xy^2][xz^2], [xy][xz][yz]*"},
      {{4, 2, 1}, true, "[xy]^2[x^2z]*, [x^2y][xy][xz]*"},
      {{3, 3, 1}, true, "[xyz][xy]^2*, [x^2y][xy][yz]*, [xy^2][xy][xz]*"},
      {{3, 2, 2}, false, "[x^2y][xz][yz] ~ [xy^2][xz]^2 ~ [x^2z][xy][yz] ~ [xy]^2[xz^2], [xyz][xy][xz]*"},
      {{5, 2, 1}, true, "[x^2y]^2[xz]*, [x^2y][x^2z][xy]*"},
      {{4, 3, 1}, true,
       "[x^2y][x^2y][yz]*, [x^2y][xyz][xy]*, [x^2y][xy^2][xz]*, [x^2z][xy^2][xy]*, [xy]^3[xz]*"},
      {{4, 2, 2}, true,
       "[x^2y][x^2z][yz]*, [x^2y][xyz][xz]*, [x^2y][xy][xz^2]*, [x^2z][xy^2][xz]*, [x^2z][xyz][xy]*, "
       "[xy]^2[xz]^2*"},
      {{3, 3, 2}, true,
       "[x^2y][xyz][yz]*, [x^2y][xy][yz^2]*, [x^2y][xz][y^2z]*, [x^2z][xy^2][yz]*, [x^2z][xy][y^2z]*, "
       "[xy^2][xyz][xz]*, [xy^2][xy][xz^2]*, [xyz]^2[xy]*, [xy]^2[xz][yz]*"},
  };
  return rows;
}

/// Products of non-primary generators in four symbols, all four present.
inline const std::vector<MonomialRow>& monomial_table_m4() {
  static const std::vector<MonomialRow> rows = {
      {{1, 1, 1, 1}, false, "[xy][zw], [xz][yw], [xw][yz]"},
      {{2, 1, 1, 1}, false, "[xy][xzw], [xz][xyw], [xw][xyz], [x^2y][zw], [x^2z][yw], [x^2w][yz]"},
      {{3, 1, 1, 1}, false, "[x^2y][xzw] ~ [x^2z][xyw] ~ [x^2w][xyz] ~ [xy][xz][xw]"},
      {{2, 2, 1, 1}, false,
       "[xyz][xyw] ~ [x^2y][yzw] ~ [xy^2][xzw], [x^2z][y^2w], [x^2w][y^2z], [xy]^2[zw], [xy][xz][yw], "
       "[xy][xw][yz]"},
      {{4, 1, 1, 1}, true, "[x^2y][xz][xw]*, [x^2z][xy][xw]*, [x^2w][xy][xz]*"},
      {{3, 2, 1, 1}, false,
       "[x^2y][xz][yw] ~ [x^2y][xw][yz] ~ [x^2z][xy][yw] ~ [x^2w][xy][yz] ~ [xy^2][xz][xw] ~ [xy]^2[xzw], "
       "[x^2y][xy][zw]*, [xyz][xy][xw]*, [xyw][xy][xz]*"},
      {{2, 2, 2, 1}, false,
       "[xy][yz][xzw] ~ [x^2z][yw][yz] ~ [xz^2][xy][yw], "
       "[xz][yz][xyw] ~ [x^2y][yz][zw] ~ [xy^2][xz][zw], "
       "[xz][xy][yzw] ~ [xz][xw][y^2z] ~ [xy][xw][yz^2], "
       "[x^2w][yz]^2, [xy]^2[z^2w], [xz]^2[y^2w], "
       "[xyz][xy][zw]*, [xyz][xz][yw]*, [xyz][xw][yz]*"},
      {{5, 1, 1, 1}, true, "[x^2y][x^2z][xw]*, [x^2y][x^2w][xz]*, [x^2z][x^2w][xy]*"},
      {{4, 2, 1, 1}, true,
       "[x^2y]^2[zw]*, [x^2y][x^2z][yw]*, [x^2y][x^2w][yz]*, [x^2y][xyz][xw]*, [x^2y][xyw][xz]*, "
       "[x^2y][xy][xzw]*, [x^2z][xy^2][xw]*, [x^2z][xyw][xy]*, [x^2w][xy^2][xz]*, [x^2w][xyz][xy]*, "
       "[xy]^2[xz][xw]*"},
      {{3, 3, 1, 1}, false,
       "[x^2y][xyz][yw] ~ [x^2y][y^2z][xw] ~ [y^2z][xy][x^2w] ~ [xy^2][yz][x^2w] ~ [x^2y][yz][xyw] ~ "
       "[xy^2][xz][xyw] ~ [x^2y][xz][y^2w] ~ [x^2z][xy][y^2w] ~ [x^2z][xy^2][yw] ~ [xy^2][xyz][xw] ~ "
       "[xy]^2[xz][yw] ~ [xy]^2[yz][xw] ~ [x^2y][xy^2][zw] ~ [xy]^3[zw], "
       "[xyz][xy][xyw]*, [x^2y][xy][yzw]*, [xy^2][xy][xzw]*"},
      {{3, 2, 2, 1}, false,
       "[xyz]^2[xw] ~ [x^2y][xyz][zw] ~ [x^2z][xyz][yw] ~ [x^2z][xy^2][zw] ~ [x^2y][xz^2][yw] ~ "
       "[x^2y][yz^2][xw] ~ [x^2z][y^2z][xw] ~ [xy^2][xz^2][xw] ~ [y^2z][xz][x^2w] ~ [yz^2][xy][x^2w] ~ "
       "[xy]^2[xz][zw] ~ [xz]^2[xy][yw], "
       "[xy][xz][yz][xw]*, [x^2y][xz][yzw]*, [x^2z][xy][yzw]*, [x^2y][yz][xzw]*, [x^2z][yz][xyw]*, "
       "[x^2y][xy][z^2w]*, [x^2z][xz][y^2w]*, [xy^2][xz][xzw]*, [xyz][xy][xzw]*, [xz^2][xy][xyw]*, "
       "[xyz][xz][xyw]*, [xyz][yz][x^2w]*"},
      {{2, 2, 2, 2}, false,
       "[xz][yz][xw][yw] ~ [x^2y][yz][zw^2] ~ [xy^2][xz][zw^2] ~ [x^2y][yw][z^2w] ~ [xy^2][xw][z^2w], "
       "[xy][yz][xw][zw] ~ [x^2z][y^2w][zw] ~ [x^2z][yz][yw^2] ~ [xz^2][xy][yw^2] ~ [xz^2][xw][y^2w], "
       "[xy][xz][yw][zw] ~ [x^2w][y^2z][zw] ~ [x^2w][yz^2][yw] ~ [xz][xw^2][y^2z] ~ [yz^2][xy][xw^2], "
       "[xyz][xy][zw^2]*, [xyz][xz][yw^2]*, [xyz][yz][xw^2]*, [x^2y][zw][yzw]*, "
       "[x^2z][yw][yzw]*, [xy][xzw][yzw]*, [xyw][xz][yzw]*, [xyz][xw][yzw]*, "
       "[xy^2][zw][xzw]*, [y^2z][xw][xzw]*, [xyw][yz][xzw]*, [xyz][yw][xzw]*, "
       "[xz^2][yw][xyw]*, [yz^2][xw][xyw]*, [xyz][zw][xyw]*, [xyw][xy][z^2w]*, "
       "[xzw][xz][y^2w]*, [yzw][yz][x^2w]*, "
       "[xy]^2[zw]^2, [xz]^2[yw]^2, [yz]^2[xw]^2"},
  };
  return rows;
}

/// Secondary generators in descending multidegrees with at most three symbols.
inline const std::vector<SecondaryRow>& secondary_table_m3() {
  static const std::vector<SecondaryRow> rows = {
      {{0, 0, 0}, {"1"}},
      {{1, 1, 0}, {"[xy]"}},
      {{2, 1, 0}, {"[x^2y]"}},
      {{1, 1, 1}, {"[xyz]"}},
      {{2, 2, 0}, {"[xy]^2"}},
      {{2, 1, 1}, {"[xy][xz]"}},
      {{3, 1, 1}, {"[x^2y][xz]"}},
      {{2, 2, 1}, {"[x^2y][yz]"}},
      {{3, 3, 0}, {"[x^2y][xy^2]"}},
      {{3, 2, 1}, {"[x^2y][xyz]"}},
      {{2, 2, 2}, {"[xyz]^2"}},
      {{3, 2, 2}, {"[x^2y][xz][yz]"}},
  };
  return rows;
}

/// Secondary generators in descending multidegrees with all four symbols present.
inline const std::vector<SecondaryRow>& secondary_table_m4() {
  static const std::vector<SecondaryRow> rows = {
      {{1, 1, 1, 1}, {"[xy][zw]", "[xz][yw]", "[xw][yz]"}},
      {{2, 1, 1, 1}, {"[xy][xzw]", "[xyw][xz]", "[xyz][xw]"}},
      {{3, 1, 1, 1}, {"[x^2y][xzw]"}},
      {{2, 2, 1, 1}, {"[x^2z][y^2w]", "[x^2w][y^2z]", "[xyz][xyw]"}},
      {{3, 2, 1, 1}, {"[x^2y][xz][yw]"}},
      {{2, 2, 2, 1}, {"[xy][xzw][yz]", "[xyw][xz][yz]", "[xy][xz][yzw]"}},
      {{3, 3, 1, 1}, {"[x^2y][xyz][yw]"}},
      {{3, 2, 2, 1}, {"[xyz]^2[xw]"}},
      {{2, 2, 2, 2}, {"[x^2y][yz][zw^2]", "[x^2z][y^2w][zw]", "[x^2w][y^2z][zw]"}},
  };
  return rows;
}

}  // namespace polysym
