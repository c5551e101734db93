#pragma once

// The character ring of S_3 with coefficients in truncated multivariate power
// series, and the Hilbert series built from it.

#include <json.hpp>

#include <map>
#include <string>

#include "polysym/invariant_ring.hpp"

namespace polysym {

/// Power series in m variables with integer coefficients, cut off above total degree D.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(int m, int truncation) : m_(m), truncation_(truncation) {
    if (m < 1 || truncation < 0) throw DomainError("series needs m >= 1 and truncation >= 0");
  }
  static TruncatedSeries constant(int m, int truncation, const Integer& c) {
    TruncatedSeries s(m, truncation);
    s.add(ExpVec(static_cast<std::size_t>(m)), c);
    return s;
  }
  static TruncatedSeries monomial(int m, int truncation, const ExpVec& alpha, const Integer& c = 1) {
    TruncatedSeries s(m, truncation);
    s.add(alpha, c);
    return s;
  }

  int m() const { return m_; }
  int truncation() const { return truncation_; }
  const std::map<ExpVec, Integer>& coefficients() const { return coeffs_; }

  Integer at(const ExpVec& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Integer(0) : it->second;
  }

  /// Adds c * t^alpha; terms above the truncation are dropped.
  void add(const ExpVec& alpha, const Integer& c) {
    if (alpha.size() != static_cast<std::size_t>(m_)) throw StructuralError("series weight length differs from m");
    if (alpha.degree() > truncation_ || c == 0) return;
    auto [it, inserted] = coeffs_.try_emplace(alpha, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_compatible(o);
    for (const auto& [a, c] : o.coeffs_) add(a, c);
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.require_compatible(b);
    TruncatedSeries out(a.m_, a.truncation_);
    for (const auto& [x, cx] : a.coeffs_) {
      for (const auto& [y, cy] : b.coeffs_) {
        if (x.degree() + y.degree() > a.truncation_) continue;
        out.add(x + y, cx * cy);
      }
    }
    return out;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.m_ == b.m_ && a.truncation_ == b.truncation_ && a.coeffs_ == b.coeffs_;
  }

  /// Sparse text form "1 + t1*t2 + 2*t1^2*t2", terms by increasing total degree.
  std::string text() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [alpha, c] : coeffs_) {
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      Integer mag = abs(c);
      std::string mono;
      for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "t" + std::to_string(j + 1);
        if (alpha[j] > 1) mono += "^" + std::to_string(alpha[j]);
      }
      if (mono.empty()) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += mono;
      }
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [alpha, c] : coeffs_) terms.push_back({{"exponent", alpha.to_vector()}, {"coeff", c.get_str()}});
    return {{"m", m_}, {"truncation", truncation_}, {"terms", terms}};
  }

 private:
  void require_compatible(const TruncatedSeries& o) const {
    if (m_ != o.m_ || truncation_ != o.truncation_) throw DomainError("series with different variables or truncation");
  }

  int m_ = 1;
  int truncation_ = 0;
  std::map<ExpVec, Integer> coeffs_;  // increasing graded order
};

/// c0*chi0 + c1*chi1 + c2*chi2 with chi0 trivial, chi1 two-dimensional, chi2 sign.
template <class Coeff>
struct CharElem {
  Coeff c0{};
  Coeff c1{};
  Coeff c2{};
  friend bool operator==(const CharElem&, const CharElem&) = default;
};

/// chi1^2 = chi0 + chi1 + chi2, chi2^2 = chi0, chi1 chi2 = chi1.
template <class Coeff>
CharElem<Coeff> char_mul(const CharElem<Coeff>& a, const CharElem<Coeff>& b) {
  CharElem<Coeff> out;
  out.c0 = a.c0 * b.c0 + a.c1 * b.c1 + a.c2 * b.c2;
  out.c1 = a.c0 * b.c1 + a.c1 * b.c0 + a.c1 * b.c1 + a.c1 * b.c2 + a.c2 * b.c1;
  out.c2 = a.c0 * b.c2 + a.c2 * b.c0 + a.c1 * b.c1;
  return out;
}

template <class Coeff>
CharElem<Coeff> char_add(const CharElem<Coeff>& a, const CharElem<Coeff>& b) {
  return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
}

using SeriesChar = CharElem<TruncatedSeries>;

namespace detail {

inline ExpVec power_of(int m, int j, int k) { return ExpVec::unit(static_cast<std::size_t>(m), static_cast<std::size_t>(j), k); }

/// chi0 + (t_j + t_j^2) chi1 + t_j^3 chi2.
inline SeriesChar secondary_factor(int m, int j, int truncation) {
  SeriesChar f{TruncatedSeries(m, truncation), TruncatedSeries(m, truncation), TruncatedSeries(m, truncation)};
  f.c0.add(ExpVec(static_cast<std::size_t>(m)), 1);
  f.c1.add(power_of(m, j, 1), 1);
  f.c1.add(power_of(m, j, 2), 1);
  f.c2.add(power_of(m, j, 3), 1);
  return f;
}

}  // namespace detail

/// Coefficient of chi0 in prod_j (chi0 + (t_j + t_j^2) chi1 + t_j^3 chi2).
inline TruncatedSeries secondary_hilbert(int m, int truncation) {
  SeriesChar acc{TruncatedSeries::constant(m, truncation, 1), TruncatedSeries(m, truncation), TruncatedSeries(m, truncation)};
  for (int j = 0; j < m; ++j) acc = char_mul(acc, detail::secondary_factor(m, j, truncation));
  return acc.c0;
}

/// sum over |alpha| <= D of dim R_{n,m}^alpha t^alpha.
inline TruncatedSeries molien_hilbert_R(int n, int m, int truncation) {
  TruncatedSeries s(m, truncation);
  for (int d = 0; d <= truncation; ++d)
    for (const auto& alpha : weights_of_degree(m, d)) s.add(alpha, dim_invariant_component_exact(n, m, alpha));
  return s;
}

/// prod_j 1 / ((1 - t_j)(1 - t_j^2)(1 - t_j^3)), expanded.
inline TruncatedSeries primary_denominator_inverse(int m, int truncation) {
  TruncatedSeries acc = TruncatedSeries::constant(m, truncation, 1);
  for (int j = 0; j < m; ++j) {
    TruncatedSeries factor(m, truncation);
    for (int k = 0; k <= truncation; ++k) {
      // partitions of k into parts 1, 2, 3
      Integer count = 0;
      for (int c = 0; 3 * c <= k; ++c) count += (k - 3 * c) / 2 + 1;
      factor.add(detail::power_of(m, j, k), count);
    }
    acc = acc * factor;
  }
  return acc;
}

struct HironakaCheck {
  bool holds = false;
  TruncatedSeries molien;
  TruncatedSeries predicted;
  std::optional<ExpVec> first_mismatch;
};

/// Compares the invariant count series of R_{3,m} with secondary / primary denominators.
inline HironakaCheck hironaka_check(int m, int truncation) {
  HironakaCheck out;
  out.molien = molien_hilbert_R(3, m, truncation);
  out.predicted = secondary_hilbert(m, truncation) * primary_denominator_inverse(m, truncation);
  for (int d = 0; d <= truncation && !out.first_mismatch; ++d)
    for (const auto& alpha : weights_of_degree(m, d))
      if (out.molien.at(alpha) != out.predicted.at(alpha)) {
        out.first_mismatch = alpha;
        break;
      }
  out.holds = !out.first_mismatch;
  return out;
}

/// Isotypic multiplicities of S_3 on polynomials in three permuted variables,
/// by character averaging over the classes {id, transpositions, 3-cycles}.
inline CharElem<TruncatedSeries> s3_single_column_series(int truncation) {
  CharElem<TruncatedSeries> out{TruncatedSeries(1, truncation), TruncatedSeries(1, truncation), TruncatedSeries(1, truncation)};
  const long chars[3][3] = {{1, 1, 1}, {2, 0, -1}, {1, -1, 1}};
  const long class_sizes[3] = {1, 3, 2};
  for (int k = 0; k <= truncation; ++k) {
    const long fixed[3] = {(k + 2) * (k + 1) / 2, k / 2 + 1, k % 3 == 0 ? 1 : 0};
    long mult[3] = {0, 0, 0};
    for (int chi = 0; chi < 3; ++chi) {
      long sum = 0;
      for (int c = 0; c < 3; ++c) sum += class_sizes[c] * chars[chi][c] * fixed[c];
      if (sum % 6 != 0) throw ConsistencyError("character average is not an integer");
      mult[chi] = sum / 6;
    }
    const ExpVec t{k};
    out.c0.add(t, mult[0]);
    out.c1.add(t, mult[1]);
    out.c2.add(t, mult[2]);
  }
  return out;
}

/// (chi0 + (t + t^2) chi1 + t^3 chi2) / ((1 - t)(1 - t^2)(1 - t^3)) in one variable.
inline CharElem<TruncatedSeries> s3_single_column_closed_form(int truncation) {
  const TruncatedSeries inv = primary_denominator_inverse(1, truncation);
  const SeriesChar num = detail::secondary_factor(1, 0, truncation);
  return {num.c0 * inv, num.c1 * inv, num.c2 * inv};
}

}  // namespace polysym
