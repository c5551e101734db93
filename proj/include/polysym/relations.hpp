#pragma once

// Named elements of the kernel of t(w) -> [w]: the set-partition relation Psi,
// the bordered Gram determinant J, and the degree 5 and 6 relations J_{3,2},
// J_{4,2} in their defining and expanded forms.

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "polysym/free_algebra.hpp"
#include "polysym/notation.hpp"

namespace polysym {

/// A set partition of {0, ..., k-1}; blocks sorted by their smallest element.
using Distribution = std::vector<std::vector<int>>;

/// All set partitions of a k-element set, generated from restricted growth
/// strings in lexicographic order.
inline std::vector<Distribution> distributions(int k) {
  if (k < 1) throw DomainError("distributions need a nonempty set");
  std::vector<Distribution> out;
  std::vector<int> rgs(static_cast<std::size_t>(k), 0);
  std::function<void(int, int)> rec = [&](int pos, int max_block) {
    if (pos == k) {
      Distribution d(static_cast<std::size_t>(max_block + 1));
      for (int i = 0; i < k; ++i) d[rgs[i]].push_back(i);
      out.push_back(std::move(d));
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[pos] = b;
      rec(pos + 1, std::max(max_block, b));
    }
  };
  rgs[0] = 0;
  rec(1, 0);
  return out;
}

/// Sum over set partitions of prod over blocks of -(|block|-1)! t(product of the block's words).
/// The index cap of the result is `cap`, or the total degree of the words when cap <= 0.
inline FPoly psi(const std::vector<ExpVec>& words, int cap = 0) {
  if (words.empty()) throw DomainError("psi needs at least one word");
  const std::size_t m = words.front().size();
  int total = 0;
  for (const auto& w : words) {
    if (w.size() != m) throw StructuralError("psi words have different lengths");
    if (w.is_zero()) throw DomainError("psi word must be a nonconstant monomial");
    total += w.degree();
  }
  if (cap <= 0) cap = total;
  const TSpace s = t_space(static_cast<int>(m), cap);
  FPoly out(s);
  for (const auto& d : distributions(static_cast<int>(words.size()))) {
    Rational coeff = 1;
    TMonomial mono;
    for (const auto& block : d) {
      ExpVec w(m);
      for (int idx : block) w = w + words[idx];
      if (w.degree() > cap) throw DomainError("psi block product exceeds the index cap");
      coeff *= -Rational(detail::factorial(static_cast<int>(block.size()) - 1));
      mono = mono * TMonomial::variable(w);
    }
    out.add_term(mono, coeff);
  }
  return out;
}

/// psi with the arity checked against n: n + 1 words.
inline FPoly psi(int n, const std::vector<ExpVec>& words, int cap = 0) {
  if (n < 1 || words.size() != static_cast<std::size_t>(n + 1)) throw DomainError("psi for n rows takes n + 1 words");
  return psi(words, cap);
}

struct RelationRecord {
  std::string name;
  FPoly element;
  std::optional<WeightVector> weight;
  bool kernel = true;
};

/// Determinant of the (n+1)x(n+1) matrix with entries t(x_i x_j), border t(x_i)
/// and corner n, in m >= n symbols with index cap 2.
inline RelationRecord gram_relation(int n, int m) {
  if (n < 1) throw DomainError("gram relation needs n >= 1");
  if (m < n) throw DomainError("gram relation needs m >= n");
  const TSpace s = t_space(m, 2);
  const int size = n + 1;
  auto entry = [&](int i, int j) -> FPoly {
    if (i == n && j == n) return FPoly::constant(s, n);
    if (i == n || j == n) return t_variable(s, ExpVec::unit(static_cast<std::size_t>(m), static_cast<std::size_t>(std::min(i, j))));
    ExpVec w(static_cast<std::size_t>(m));
    w.add(i, 1);
    w.add(j, 1);
    return t_variable(s, w);
  };
  std::vector<int> perm(static_cast<std::size_t>(size));
  std::iota(perm.begin(), perm.end(), 0);
  FPoly det(s);
  do {
    int inversions = 0;
    for (int a = 0; a < size; ++a)
      for (int b = a + 1; b < size; ++b)
        if (perm[a] > perm[b]) ++inversions;
    FPoly term = FPoly::constant(s, inversions % 2 == 0 ? 1 : -1);
    for (int i = 0; i < size; ++i) term = term * entry(i, perm[i]);
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  ExpVec weight(static_cast<std::size_t>(m));
  for (int j = 0; j < n; ++j) weight.set(j, 2);
  return {"J" + std::string(static_cast<std::size_t>(n), '2'), std::move(det), weight, true};
}

namespace detail {

inline ExpVec word2(const char* text) { return parse_word(text, 2); }

inline FPoly psi2(std::initializer_list<const char*> words, int cap) {
  std::vector<ExpVec> ws;
  for (const char* w : words) ws.push_back(word2(w));
  return psi(ws, cap);
}

inline FPoly tvar2(const char* word, int cap) { return t_variable(t_space(2, cap), word2(word)); }

inline constexpr const char* kJ32Expanded =
    "6t(x^2y)t(xy) - 3t(xy^2)t(x^2) - 2t(x^2y)t(x)t(y) + t(xy^2)t(x)^2 - 4t(xy)^2t(x) + 2t(xy)t(x)^2t(y)"
    " - 3t(x^3)t(y^2) + 4t(x^2)t(x)t(y^2) - t(x)^3t(y^2) + t(x^3)t(y)^2 - t(x^2)t(x)t(y)^2";

inline constexpr const char* kJ42Expanded =
    "6t(x^2y)^2 + t(xy)^2t(x^2) - 3t(xy)^2t(x)^2 - 6t(x^3)t(xy^2) + 2t(x^2)t(xy^2)t(x) + 4t(x^3)t(xy)t(y)"
    " - 2t(x^2)t(xy)t(x)t(y) + 2t(xy)t(x)^3t(y) - 4t(x^2y)t(x^2)t(y) - t(x^2)^2t(y^2) + t(x^2)^2t(y)^2"
    " + 4t(x^2)t(x)^2t(y^2) - t(x^2)t(x)^2t(y)^2 - t(x)^4t(y^2) - 2t(x^3)t(x)t(y^2)";

inline RelationRecord lift(std::string name, FPoly f, int m, std::initializer_list<int> weight) {
  if (m < 2) throw DomainError("relation needs m >= 2");
  FPoly lifted = embed(f, m);
  ExpVec w(static_cast<std::size_t>(m));
  std::size_t j = 0;
  for (int v : weight) w.set(j++, v);
  return {std::move(name), std::move(lifted), w, true};
}

}  // namespace detail

/// The weight-(3,2) relation as a combination of Psi's; index cap 5.
inline FPoly j32_form_a() {
  constexpr int cap = 5;
  using detail::psi2;
  using detail::tvar2;
  FPoly f = Rational(3) * psi2({"xy", "x", "x", "y"}, cap) - Rational(3) * psi2({"x", "x", "x", "y^2"}, cap) +
            psi2({"x", "x", "x", "y"}, cap) * tvar2("y", cap) - psi2({"x", "x", "y", "y"}, cap) * tvar2("x", cap);
  return make_rational(1, 2) * f;
}

/// The weight-(4,2) relation as a combination of Psi's; index cap 6.
inline FPoly j42_form_a() {
  constexpr int cap = 6;
  using detail::psi2;
  using detail::tvar2;
  return Rational(3) * psi2({"xy", "xy", "x", "x"}, cap) - Rational(3) * psi2({"x", "x", "x", "xy^2"}, cap) +
         Rational(2) * psi2({"x", "x", "x", "y"}, cap) * tvar2("xy", cap) -
         psi2({"x", "x", "y", "y"}, cap) * tvar2("x^2", cap) - psi2({"x", "x", "x", "y^2"}, cap) * tvar2("x", cap);
}

/// Expanded forms with index cap 3, in two symbols.
inline FPoly j32_form_b() { return parse_fpoly(detail::kJ32Expanded, 2, 3); }
inline FPoly j42_form_b() { return parse_fpoly(detail::kJ42Expanded, 2, 3); }

/// J_{3,2} and J_{4,2} in m >= 2 symbols with index cap 3.
inline RelationRecord j32(int m = 2) { return detail::lift("J32", j32_form_b(), m, {3, 2}); }
inline RelationRecord j42(int m = 2) { return detail::lift("J42", j42_form_b(), m, {4, 2}); }

/// J_{2,2,2}: the Gram relation for three rows, read in m >= 3 symbols with index cap 3.
inline RelationRecord j222(int m = 3) {
  RelationRecord r = gram_relation(3, m);
  r.name = "J222";
  r.element = with_cap(r.element, 3);
  return r;
}

// ---------------------------------------------------------------------------
// JSON catalog

inline nlohmann::json term_list_json(const FPoly& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, c] : f.terms())
    terms.push_back({{"coeff", c.get_str()}, {"monomial", monomial_text(f.space(), mono)}});
  return terms;
}

inline nlohmann::json relation_json(const RelationRecord& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["m"] = r.element.space().m;
  j["cap"] = r.element.space().cap;
  j["weight"] = r.weight ? nlohmann::json(r.weight->to_vector()) : nlohmann::json(nullptr);
  j["kernel"] = r.kernel;
  j["terms"] = term_list_json(r.element);
  return j;
}

inline nlohmann::json relation_catalog_json(const std::vector<RelationRecord>& records) {
  nlohmann::json out;
  out["schema"] = "polysym-relations/1";
  out["relations"] = nlohmann::json::array();
  for (const auto& r : records) out["relations"].push_back(relation_json(r));
  return out;
}

/// The default catalog: J22, J222, J2222 (m = n), J32 and J42 (m = 2).
inline std::vector<RelationRecord> standard_relations() {
  return {gram_relation(2, 2), j222(3), gram_relation(4, 4), j32(2), j42(2)};
}

}  // namespace polysym
