#pragma once

// Exact linear algebra over Q for per-component computations.
//
// `Echelon` keeps an incremental row-echelon basis of integer rows and reduces
// new rows fraction-free: r <- (p/g) r - (a/g) s with g = gcd(p, a), followed
// by removal of the row content. Columns are eliminated left to right, so the
// pivot chosen for a row is always its smallest column index; callers order
// columns by decreasing monomial.

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polysym/polycore.hpp"

namespace polysym {

using IntVec = std::vector<std::pair<std::uint32_t, Integer>>;  ///< sorted by column, no zeros
using RatVec = std::vector<std::pair<std::uint32_t, Rational>>;  ///< sorted by column, no zeros

namespace detail {

inline IntVec combine(const IntVec& x, const Integer& a, const IntVec& y, const Integer& b) {
  IntVec out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, b * j->second);
      ++j;
    } else {
      Integer v = a * i->second + b * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline RatVec combine(const RatVec& x, const Rational& a, const RatVec& y, const Rational& b) {
  RatVec out;
  out.reserve(x.size() + y.size());
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() || j != y.end()) {
    if (j == y.end() || (i != x.end() && i->first < j->first)) {
      out.emplace_back(i->first, a * i->second);
      ++i;
    } else if (i == x.end() || j->first < i->first) {
      out.emplace_back(j->first, b * j->second);
      ++j;
    } else {
      Rational v = a * i->second + b * j->second;
      if (v != 0) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline Integer content(const IntVec& v) {
  Integer g = 0;
  for (const auto& [c, x] : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

}  // namespace detail

/// Scales a rational vector to a primitive integer vector; returns the factor s
/// with result = s * v.
inline std::pair<IntVec, Rational> to_primitive(const RatVec& v) {
  Integer den = 1;
  for (const auto& [c, x] : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntVec out;
  out.reserve(v.size());
  for (const auto& [c, x] : v) {
    Integer num = x.get_num() * (den / x.get_den());
    out.emplace_back(c, std::move(num));
  }
  Integer g = detail::content(out);
  Rational scale(den);
  if (g > 1) {
    for (auto& [c, x] : out) x /= g;
    scale /= g;
  }
  return {std::move(out), scale};
}

inline RatVec to_rational(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& [c, x] : v) out.emplace_back(c, Rational(x));
  return out;
}

inline RatVec dense_to_sparse(const std::vector<Rational>& dense) {
  RatVec out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) out.emplace_back(static_cast<std::uint32_t>(i), dense[i]);
  return out;
}

class Echelon {
 public:
  static constexpr std::size_t kNoLabel = std::numeric_limits<std::size_t>::max();

  explicit Echelon(std::size_t ncols, bool track = false) : by_pivot_(ncols), track_(track) {}

  std::size_t cols() const { return by_pivot_.size(); }
  std::size_t rank() const { return rank_; }
  bool full() const { return rank_ == by_pivot_.size(); }

  /// Adds a row; returns true iff it was independent of the rows already present.
  /// With tracking enabled the row is remembered under `label`.
  bool insert(const RatVec& row, std::size_t label = kNoLabel) {
    auto [ints, scale] = to_primitive(row);
    RatVec combo;
    if (track_) {
      if (label == kNoLabel) throw StructuralError("tracked echelon requires row labels");
      combo.emplace_back(static_cast<std::uint32_t>(label), scale);
    }
    return insert_reduced(std::move(ints), std::move(combo));
  }

  /// Canonical representative of v modulo the row span: zero at every pivot column.
  RatVec remainder(RatVec v) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      const std::uint32_t col = v[pos].first;
      check_col(col);
      const auto& piv = by_pivot_[col];
      if (!piv) {
        ++pos;
        continue;
      }
      Rational f = v[pos].second / Rational(piv->entries.front().second);
      v = detail::combine(v, Rational(1), to_rational(piv->entries), -f);
    }
    return v;
  }

  bool in_span(const RatVec& v) const { return remainder(v).empty(); }

  /// Coefficients c (indexed by label) with v = sum_l c_l * row_l, or nullopt
  /// if v is outside the span. Requires tracking.
  std::optional<RatVec> solve(RatVec v) const {
    if (!track_) throw StructuralError("solve requires a tracked echelon");
    RatVec acc;
    std::size_t pos = 0;
    while (pos < v.size()) {
      const std::uint32_t col = v[pos].first;
      check_col(col);
      const auto& piv = by_pivot_[col];
      if (!piv) return std::nullopt;  // leading entry cannot be cancelled
      Rational f = v[pos].second / Rational(piv->entries.front().second);
      v = detail::combine(v, Rational(1), to_rational(piv->entries), -f);
      acc = detail::combine(acc, Rational(1), piv->combo, f);
    }
    return acc;
  }

  std::vector<std::uint32_t> pivot_columns() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < by_pivot_.size(); ++c)
      if (by_pivot_[c]) out.push_back(c);
    return out;
  }

  /// Rows of the echelon basis (integer, primitive, positive leading entry).
  std::vector<IntVec> rows() const {
    std::vector<IntVec> out;
    for (const auto& r : by_pivot_)
      if (r) out.push_back(r->entries);
    return out;
  }

  /// Basis of { x : r . x = 0 for every row r }, one vector per non-pivot
  /// column f with x_f = 1, in increasing order of f.
  std::vector<RatVec> nullspace() const {
    // Back-substitution to reduced echelon form.
    std::vector<std::optional<IntVec>> rows(by_pivot_.size());
    for (std::uint32_t c = 0; c < by_pivot_.size(); ++c)
      if (by_pivot_[c]) rows[c] = by_pivot_[c]->entries;
    for (std::uint32_t c = 0; c < rows.size(); ++c) {
      if (!rows[c]) continue;
      const IntVec& piv = *rows[c];
      const Integer& p = piv.front().second;
      for (std::uint32_t other = 0; other < c; ++other) {
        if (!rows[other]) continue;
        IntVec& r = *rows[other];
        auto it = std::lower_bound(r.begin(), r.end(), c, [](const auto& e, std::uint32_t col) { return e.first < col; });
        if (it == r.end() || it->first != c) continue;
        Integer a = it->second;
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        r = detail::combine(r, p / g, piv, -(a / g));
        make_primitive(r);
      }
    }
    std::map<std::uint32_t, RatVec> by_free;
    for (std::uint32_t c = 0; c < rows.size(); ++c) {
      if (!rows[c]) by_free[c].emplace_back(c, Rational(1));
    }
    for (std::uint32_t c = 0; c < rows.size(); ++c) {
      if (!rows[c]) continue;
      const IntVec& r = *rows[c];
      const Integer& p = r.front().second;
      for (std::size_t k = 1; k < r.size(); ++k) {
        Rational v(-r[k].second, p);
        v.canonicalize();
        by_free.at(r[k].first).emplace_back(c, std::move(v));
      }
    }
    std::vector<RatVec> out;
    out.reserve(by_free.size());
    for (auto& [f, v] : by_free) {
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      out.push_back(std::move(v));
    }
    return out;
  }

 private:
  struct Row {
    IntVec entries;
    RatVec combo;
  };

  void check_col(std::uint32_t col) const {
    if (col >= by_pivot_.size()) throw StructuralError("column index outside the echelon");
  }

  static void make_primitive(IntVec& r) {
    Integer g = detail::content(r);
    if (g > 1)
      for (auto& [c, x] : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }

  bool insert_reduced(IntVec cur, RatVec combo) {
    std::size_t pos = 0;
    while (pos < cur.size()) {
      const std::uint32_t col = cur[pos].first;
      check_col(col);
      const auto& piv = by_pivot_[col];
      if (!piv) {
        ++pos;
        continue;
      }
      const Integer& p = piv->entries.front().second;
      Integer a = cur[pos].second;
      Integer g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
      Integer fp = p / g;
      Integer fa = -(a / g);
      cur = detail::combine(cur, fp, piv->entries, fa);
      if (track_) combo = detail::combine(combo, Rational(fp), piv->combo, Rational(fa));
      Integer cont = detail::content(cur);
      if (cont > 1) {
        for (auto& [c, x] : cur) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), cont.get_mpz_t());
        if (track_)
          for (auto& [c, x] : combo) x /= cont;
      }
    }
    if (cur.empty()) return false;
    // cur has no entries at pivot columns; its first entry becomes a new pivot.
    if (cur.front().second < 0) {
      for (auto& [c, x] : cur) x = -x;
      if (track_)
        for (auto& [c, x] : combo) x = -x;
    }
    const std::uint32_t col = cur.front().first;
    by_pivot_[col] = Row{std::move(cur), std::move(combo)};
    ++rank_;
    return true;
  }

  std::vector<std::optional<Row>> by_pivot_;
  std::size_t rank_ = 0;
  bool track_ = false;
};

inline std::size_t rank_of(const std::vector<RatVec>& rows, std::size_t ncols) {
  Echelon e(ncols);
  for (const auto& r : rows) e.insert(r);
  return e.rank();
}

/// Echelon basis of polynomials reduced by leading terms, with monic rows.
template <class Poly>
class PolyEchelon {
 public:
  using Mono = typename Poly::monomial_type;

  std::size_t size() const { return rows_.size(); }

  /// Fully reduced remainder: no term of the result is a leading monomial.
  Poly reduce(Poly v) const {
    auto it = v.terms().begin();
    while (it != v.terms().end()) {
      auto piv = rows_.find(it->first);
      if (piv == rows_.end()) {
        ++it;
        continue;
      }
      const Mono key = it->first;
      const Rational c = it->second;
      v -= c * piv->second;
      it = v.terms().upper_bound(key);
    }
    return v;
  }

  bool insert(const Poly& v) {
    Poly r = reduce(v);
    if (r.is_zero()) return false;
    Rational lead = r.terms().begin()->second;
    r *= Rational(1) / lead;
    const Mono key = r.terms().begin()->first;
    rows_.emplace(key, std::move(r));
    return true;
  }

  bool contains(const Poly& v) const { return reduce(v).is_zero(); }

 private:
  std::map<Mono, Poly, std::greater<>> rows_;
};

}  // namespace polysym
