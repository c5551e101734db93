#pragma once

// The presentation algebra F = Q[t(w)] with its evaluation map t(w) -> [w]
// onto the multisymmetric polynomials, and the infinitesimal gl_m action by
// polarization operators.

#include <deque>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "polysym/invariant_ring.hpp"
#include "polysym/linalg.hpp"

namespace polysym {

using FPoly = TPoly;

inline TSpace t_space(int m, int cap) {
  TSpace s{m, cap};
  validate_space(s);
  return s;
}

inline void check_symbol(int i, int m) {
  if (i < 0 || i >= m) throw DomainError("symbol index out of range");
}

/// Memoized evaluation t(w) -> [w] for a fixed number of rows.
class PhiEvaluator {
 public:
  PhiEvaluator(int n, int m) : space_{n, m} { validate_space(space_); }

  const XSpace& space() const { return space_; }

  const XPoly& monomial(const TMonomial& t) {
    if (auto it = memo_.find(t); it != memo_.end()) return it->second;
    XPoly value(space_);
    if (t.is_one()) {
      value = XPoly::constant(space_, 1);
    } else {
      const ExpVec& w = t.factors().front().word;
      if (w.size() != static_cast<std::size_t>(space_.m)) throw StructuralError("t-variable index length differs from m");
      XPoly rest = monomial(t.without_one(w));  // copy: the reference may move on rehash
      value = rest * polarized_power_sum(w, space_.n).body();
    }
    return memo_.emplace(t, std::move(value)).first->second;
  }

  InvariantPoly operator()(const FPoly& f) {
    if (f.space().m != space_.m) throw StructuralError("t-space and x-space disagree on m");
    XPoly out(space_);
    for (const auto& [mono, c] : f.terms()) out += c * monomial(mono);
    return trusted_invariant(std::move(out));
  }

 private:
  XSpace space_;
  std::unordered_map<TMonomial, XPoly, TMonomialHash> memo_;
};

inline InvariantPoly phi_eval(const FPoly& f, int n) {
  PhiEvaluator eval(n, f.space().m);
  return eval(f);
}

/// Orbit-basis coordinates of the image of a t-monomial, computed by counting
/// the ways of distributing its factors over the rows. A representative M
/// receives the number of assignments factor -> row whose row sums equal M.
inline std::vector<Integer> phi_monomial_coordinates(const TMonomial& t, const OrbitBasis& basis) {
  const XSpace s = basis.space();
  std::vector<ExpVec> factors;
  for (const auto& f : t.factors())
    for (std::uint32_t k = 0; k < f.exp; ++k) factors.push_back(f.word);
  std::vector<Integer> coords(basis.size());
  std::vector<ExpVec> rows(static_cast<std::size_t>(s.n), ExpVec(static_cast<std::size_t>(s.m)));
  const ExpVec& alpha = basis.multidegree();
  if (!(t.weight(static_cast<std::size_t>(s.m)) == alpha)) throw DomainError("t-monomial weight differs from the basis multidegree");

  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == factors.size()) {
      for (int i = 0; i + 1 < s.n; ++i)
        if (detail::lex_greater(rows[i + 1], rows[i])) return;
      ExpVec mono(static_cast<std::size_t>(s.n * s.m));
      for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.m; ++j) mono.set(i * s.m + j, rows[i][j]);
      if (auto idx = basis.index_of(mono)) coords[*idx] += 1;
      return;
    }
    for (int i = 0; i < s.n; ++i) {
      rows[i] = rows[i] + factors[k];
      rec(k + 1);
      rows[i] = rows[i] - factors[k];
    }
  };
  rec(0);
  return coords;
}

// ---------------------------------------------------------------------------
// Polarization operators

/// e_{ij} t(w) = t(x_i dw/dx_j), extended to F as a derivation (0-based i, j).
inline FPoly raising_action(int i, int j, const FPoly& f) {
  const int m = f.space().m;
  check_symbol(i, m);
  check_symbol(j, m);
  if (i == j) throw DomainError("polarization operator needs distinct symbols");
  FPoly out(f.space());
  for (const auto& [mono, c] : f.terms()) {
    for (const auto& fac : mono.factors()) {
      const int dj = fac.word[j];
      if (dj == 0) continue;
      ExpVec image = fac.word;
      image.add(j, -1);
      image.add(i, 1);
      TMonomial next = mono.without_one(fac.word) * TMonomial::variable(image);
      out.add_term(next, c * static_cast<long>(fac.exp) * dj);
    }
  }
  return out;
}

/// The same operator on x-space: sum over rows k of x_{ki} d/dx_{kj}.
inline XPoly x_polarization(int i, int j, const XPoly& p) {
  const XSpace s = p.space();
  check_symbol(i, s.m);
  check_symbol(j, s.m);
  if (i == j) throw DomainError("polarization operator needs distinct symbols");
  XPoly out(s);
  for (const auto& [mono, c] : p.terms()) {
    for (int k = 0; k < s.n; ++k) {
      const int e = mono[k * s.m + j];
      if (e == 0) continue;
      ExpVec next = mono;
      next.add(k * s.m + j, -1);
      next.add(k * s.m + i, 1);
      out.add_term(next, c * e);
    }
  }
  return out;
}

struct HighestWeightTest {
  bool highest = false;
  std::optional<WeightVector> weight;  ///< absent when f is not multihomogeneous
};

/// f is a highest weight vector iff it is multihomogeneous and killed by every
/// e_{i,i+1}.
inline HighestWeightTest is_highest_weight(const FPoly& f) {
  if (f.is_zero()) throw DomainError("the zero element has no weight");
  HighestWeightTest out;
  out.weight = f.multidegree();
  if (!out.weight) return out;
  for (int i = 0; i + 1 < f.space().m; ++i)
    if (!raising_action(i, i + 1, f).is_zero()) return out;
  out.highest = true;
  return out;
}

/// Basis of the smallest subspace containing f and closed under all e_{ij}.
/// The first element is f; every element is a weight vector when f is.
inline std::vector<FPoly> gl_orbit_span(const FPoly& f, std::size_t max_dim = 4096) {
  if (f.is_zero()) return {};
  if (!f.multidegree()) throw DomainError("orbit span seed must be multihomogeneous");
  const int m = f.space().m;
  PolyEchelon<FPoly> echelon;
  std::vector<FPoly> basis{f};
  echelon.insert(f);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j) continue;
        FPoly image = raising_action(i, j, basis[k]);
        if (image.is_zero() || !echelon.insert(image)) continue;
        if (basis.size() >= max_dim) throw ResourceError("orbit span exceeds the dimension bound");
        basis.push_back(std::move(image));
        queue.push_back(basis.size() - 1);
      }
    }
  }
  return basis;
}

/// Reads f in m' >= m symbols by padding every index monomial with zeros.
inline FPoly embed(const FPoly& f, int m_new) {
  const TSpace s = f.space();
  if (m_new < s.m) throw DomainError("embedding needs at least as many symbols");
  FPoly out(t_space(m_new, s.cap));
  for (const auto& [mono, c] : f.terms()) {
    TMonomial image;
    for (const auto& fac : mono.factors()) {
      ExpVec w(static_cast<std::size_t>(m_new));
      for (int j = 0; j < s.m; ++j) w.set(j, fac.word[j]);
      image = image * TMonomial::variable(w, fac.exp);
    }
    out.add_term(image, c);
  }
  return out;
}

/// Same element in a space with a different degree cap (all indices must fit).
inline FPoly with_cap(const FPoly& f, int cap) {
  FPoly out(t_space(f.space().m, cap));
  for (const auto& [mono, c] : f.terms()) out.add_term(mono, c);
  return out;
}

/// Renames the symbols: x_j -> x_{perm[j]}.
inline ExpVec permute_word(const ExpVec& w, std::span<const int> perm) {
  ExpVec out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) out.set(static_cast<std::size_t>(perm[j]), w[j]);
  return out;
}

inline FPoly permute_symbols(const FPoly& f, std::span<const int> perm) {
  if (perm.size() != static_cast<std::size_t>(f.space().m)) throw StructuralError("permutation length differs from m");
  FPoly out(f.space());
  for (const auto& [mono, c] : f.terms()) {
    TMonomial image;
    for (const auto& fac : mono.factors()) image = image * TMonomial::variable(permute_word(fac.word, perm), fac.exp);
    out.add_term(image, c);
  }
  return out;
}

}  // namespace polysym
