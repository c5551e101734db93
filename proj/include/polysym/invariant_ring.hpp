#pragma once

// The ring of multisymmetric polynomials R_{n,m}: invariants of S_n acting on
// the rows of an n x m matrix of variables.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "polysym/polycore.hpp"

namespace polysym {

/// Applies a row permutation: x[i][j] -> x[perm[i]][j].
inline XPoly permute_rows(const XPoly& p, std::span<const int> perm) {
  const XSpace s = p.space();
  XPoly out(s);
  for (const auto& [mono, c] : p.terms()) {
    ExpVec image(mono.size());
    for (int i = 0; i < s.n; ++i)
      for (int j = 0; j < s.m; ++j) image.set(perm[i] * s.m + j, mono[i * s.m + j]);
    out.add_term(image, c);
  }
  return out;
}

/// Invariance under the generators (1 2) and (1 2 ... n) of S_n.
inline bool is_row_symmetric(const XPoly& p) {
  const int n = p.space().n;
  if (n < 2) return true;
  std::vector<int> swap(n), cycle(n);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return permute_rows(p, swap) == p && permute_rows(p, cycle) == p;
}

/// An element of R_{n,m}. Construction through `checked` verifies invariance;
/// the arithmetic operators preserve it.
class InvariantPoly {
 public:
  InvariantPoly() = default;

  static InvariantPoly checked(XPoly body) {
    if (!is_row_symmetric(body)) throw DomainError("polynomial is not invariant under row permutations");
    return InvariantPoly(std::move(body));
  }
  static InvariantPoly one(XSpace s) { return InvariantPoly(XPoly::constant(s, 1)); }
  static InvariantPoly zero(XSpace s) { return InvariantPoly(XPoly(s)); }

  const XPoly& body() const { return body_; }
  int n() const { return body_.space().n; }
  int m() const { return body_.space().m; }
  bool is_zero() const { return body_.is_zero(); }
  std::optional<ExpVec> multidegree() const { return body_.multidegree(); }

  friend InvariantPoly operator+(const InvariantPoly& a, const InvariantPoly& b) { return InvariantPoly(a.body_ + b.body_); }
  friend InvariantPoly operator-(const InvariantPoly& a, const InvariantPoly& b) { return InvariantPoly(a.body_ - b.body_); }
  friend InvariantPoly operator*(const InvariantPoly& a, const InvariantPoly& b) { return InvariantPoly(a.body_ * b.body_); }
  friend InvariantPoly operator*(const Rational& c, const InvariantPoly& a) { return InvariantPoly(c * a.body_); }
  friend bool operator==(const InvariantPoly& a, const InvariantPoly& b) { return a.body_ == b.body_; }

 private:
  explicit InvariantPoly(XPoly body) : body_(std::move(body)) {}
  friend InvariantPoly trusted_invariant(XPoly);

  XPoly body_;
};

/// Wraps a polynomial known to be invariant by construction (sums and
/// products of power sums or orbit sums).
inline InvariantPoly trusted_invariant(XPoly body) { return InvariantPoly(std::move(body)); }

/// [w] = sum_i x_{i1}^{a_1} ... x_{im}^{a_m}.
inline InvariantPoly polarized_power_sum(const ExpVec& alpha, int n) {
  if (alpha.is_zero()) throw DomainError("polarized power sum of the empty monomial");
  const int m = static_cast<int>(alpha.size());
  const XSpace s{n, m};
  XPoly p(s);
  for (int i = 0; i < n; ++i) {
    ExpVec mono(static_cast<std::size_t>(n * m));
    for (int j = 0; j < m; ++j) mono.set(i * m + j, alpha[j]);
    p.add_term(mono, 1);
  }
  return trusted_invariant(std::move(p));
}

// ---------------------------------------------------------------------------
// Orbit-sum bases

namespace detail {

inline ExpVec row_of(const ExpVec& mono, int m, int i) {
  ExpVec r(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) r.set(j, mono[i * m + j]);
  return r;
}

/// Pure lexicographic comparison of two rows (all rows of an orbit
/// representative are compared this way, not by degree).
inline bool lex_greater(const ExpVec& a, const ExpVec& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != b[j]) return a[j] > b[j];
  return false;
}

inline void enumerate_rows(const ExpVec& remaining, int rows_left, std::optional<ExpVec> bound, std::vector<ExpVec>& current,
                           std::vector<std::vector<ExpVec>>& out) {
  const std::size_t m = remaining.size();
  if (rows_left == 1) {
    if (!bound || !lex_greater(remaining, *bound)) {
      current.push_back(remaining);
      out.push_back(current);
      current.pop_back();
    }
    return;
  }
  // Candidate rows r <= remaining componentwise, r <=lex bound; enumerated in decreasing lex order.
  ExpVec r(m);
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == m) {
      if (bound && lex_greater(r, *bound)) return;
      ExpVec rest = remaining - r;
      current.push_back(r);
      enumerate_rows(rest, rows_left - 1, r, current, out);
      current.pop_back();
      return;
    }
    for (int v = remaining[j]; v >= 0; --v) {
      r.set(j, v);
      rec(j + 1);
    }
    r.set(j, 0);
  };
  rec(0);
}

}  // namespace detail

/// Canonical orbit representative: rows sorted in decreasing lexicographic order.
inline ExpVec orbit_representative(const XSpace& s, const ExpVec& mono) {
  std::vector<ExpVec> rows;
  for (int i = 0; i < s.n; ++i) rows.push_back(detail::row_of(mono, s.m, i));
  std::sort(rows.begin(), rows.end(), detail::lex_greater);
  ExpVec out(mono.size());
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.m; ++j) out.set(i * s.m + j, rows[i][j]);
  return out;
}

inline bool is_orbit_representative(const XSpace& s, const ExpVec& mono) {
  for (int i = 0; i + 1 < s.n; ++i) {
    for (int j = 0; j < s.m; ++j) {
      const int a = mono[i * s.m + j];
      const int b = mono[(i + 1) * s.m + j];
      if (a != b) {
        if (a < b) return false;
        break;
      }
    }
  }
  return true;
}

/// Sum of the distinct row permutations of a monomial.
inline InvariantPoly orbit_sum(const XSpace& s, const ExpVec& mono) {
  std::vector<ExpVec> rows;
  for (int i = 0; i < s.n; ++i) rows.push_back(detail::row_of(mono, s.m, i));
  std::sort(rows.begin(), rows.end());
  XPoly p(s);
  do {
    ExpVec term(mono.size());
    for (int i = 0; i < s.n; ++i)
      for (int j = 0; j < s.m; ++j) term.set(i * s.m + j, rows[i][j]);
    p.add_term(term, 1);
  } while (std::next_permutation(rows.begin(), rows.end()));
  return trusted_invariant(std::move(p));
}

/// Orbit sums of all x-monomials of a fixed column-degree vector, one per
/// S_n-orbit, ordered by decreasing representative.
class OrbitBasis {
 public:
  OrbitBasis(int n, int m, ExpVec alpha) : space_{n, m}, alpha_(alpha) {
    if (alpha_.size() != static_cast<std::size_t>(m)) throw StructuralError("multidegree length differs from m");
    validate_space(space_);
    if (alpha_.is_zero()) {
      reps_.push_back(ExpVec(static_cast<std::size_t>(n * m)));
    } else {
      std::vector<std::vector<ExpVec>> matrices;
      std::vector<ExpVec> current;
      detail::enumerate_rows(alpha_, n, std::nullopt, current, matrices);
      for (const auto& rows : matrices) {
        ExpVec mono(static_cast<std::size_t>(n * m));
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < m; ++j) mono.set(i * m + j, rows[i][j]);
        reps_.push_back(mono);
      }
      std::sort(reps_.begin(), reps_.end(), std::greater<>());
    }
    for (std::size_t i = 0; i < reps_.size(); ++i) index_.emplace(reps_[i], i);
  }

  const XSpace& space() const { return space_; }
  const ExpVec& multidegree() const { return alpha_; }
  std::size_t size() const { return reps_.size(); }
  const std::vector<ExpVec>& representatives() const { return reps_; }
  InvariantPoly element(std::size_t i) const { return orbit_sum(space_, reps_.at(i)); }

  std::optional<std::size_t> index_of(const ExpVec& rep) const {
    auto it = index_.find(rep);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  XSpace space_;
  ExpVec alpha_;
  std::vector<ExpVec> reps_;
  std::unordered_map<ExpVec, std::size_t, ExpVecHash> index_;
};

inline OrbitBasis orbit_basis(int n, int m, const ExpVec& alpha) { return OrbitBasis(n, m, alpha); }

// ---------------------------------------------------------------------------
// Dimension count by averaging fixed points over S_n (Burnside)

namespace detail {

/// Number of solutions of sum_k lens[k] * a_k = total with a_k >= 0.
inline Integer count_weighted_compositions(const std::vector<int>& lens, int total) {
  std::vector<Integer> ways(static_cast<std::size_t>(total + 1), 0);
  ways[0] = 1;
  for (int len : lens)
    for (int t = len; t <= total; ++t) ways[t] += ways[t - len];
  return ways[total];
}

inline void for_each_partition(int n, int max_part, std::vector<int>& current,
                               const std::function<void(const std::vector<int>&)>& fn) {
  if (n == 0) {
    fn(current);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    current.push_back(p);
    for_each_partition(n - p, p, current, fn);
    current.pop_back();
  }
}

inline Integer factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Size of the conjugacy class of S_n with the given cycle type.
inline Integer class_size(const std::vector<int>& cycle_type) {
  int n = 0;
  for (int c : cycle_type) n += c;
  Integer z = 1;
  std::map<int, int> counts;
  for (int c : cycle_type) ++counts[c];
  for (auto [len, k] : counts) {
    for (int i = 0; i < k; ++i) z *= len;
    z *= factorial(k);
  }
  return factorial(n) / z;
}

}  // namespace detail

/// dim of the multidegree-alpha component of R_{n,m}, as the average over S_n
/// of the number of x-monomials fixed by each permutation.
inline Integer dim_invariant_component_exact(int n, int m, const ExpVec& alpha) {
  if (alpha.size() != static_cast<std::size_t>(m)) throw StructuralError("multidegree length differs from m");
  Integer total = 0;
  std::vector<int> current;
  detail::for_each_partition(n, n, current, [&](const std::vector<int>& cycle_type) {
    Integer fixed = 1;
    for (int j = 0; j < m; ++j) fixed *= detail::count_weighted_compositions(cycle_type, alpha[j]);
    total += detail::class_size(cycle_type) * fixed;
  });
  Integer nfact = detail::factorial(n);
  if (total % nfact != 0) throw ConsistencyError("Burnside average is not an integer");
  return total / nfact;
}

inline std::size_t dim_invariant_component(int n, int m, const ExpVec& alpha) {
  return dim_invariant_component_exact(n, m, alpha).get_ui();
}

/// Coefficients at the orbit representatives; no check that p lies in the span.
inline std::vector<Rational> representative_coordinates(const XPoly& p, const OrbitBasis& basis) {
  std::vector<Rational> coords(basis.size());
  for (const auto& [mono, c] : p.terms()) {
    if (auto idx = basis.index_of(mono)) coords[*idx] = c;
  }
  return coords;
}

/// Exact coordinates of p in the orbit basis. Throws ConsistencyError if p is
/// not in the span (impossible for a genuine invariant of that multidegree).
inline std::vector<Rational> coordinates(const InvariantPoly& p, const OrbitBasis& basis) {
  if (!(p.body().space() == basis.space())) throw StructuralError("invariant and basis live in different spaces");
  if (!p.is_zero()) {
    auto alpha = p.multidegree();
    if (!alpha || !(*alpha == basis.multidegree())) throw DomainError("invariant is not of the basis multidegree");
  }
  std::vector<Rational> coords = representative_coordinates(p.body(), basis);
  XPoly rebuilt(basis.space());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) rebuilt += coords[i] * basis.element(i).body();
  if (!(rebuilt == p.body())) throw ConsistencyError("polynomial is not in the span of the orbit basis");
  return coords;
}

/// All weights of total degree d in m variables, in decreasing lex order.
inline std::vector<ExpVec> weights_of_degree(int m, int d) {
  std::vector<ExpVec> out;
  ExpVec cur(static_cast<std::size_t>(m));
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == m - 1) {
      cur.set(j, left);
      out.push_back(cur);
      return;
    }
    for (int v = left; v >= 0; --v) {
      cur.set(j, v);
      rec(j + 1, left - v);
    }
  };
  if (m == 0) return out;
  rec(0, d);
  return out;
}

}  // namespace polysym
