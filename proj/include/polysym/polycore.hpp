#pragma once

// Exact rational coefficients and sparse multivariate polynomials over two
// kinds of variables: the coordinates x[i][j] of V^m (rows i = 1..n, columns
// j = 1..m), and abstract variables t(w) indexed by monomials w in m symbols.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polysym/errors.hpp"

namespace polysym {

using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Fixed-capacity vector of small nonnegative exponents. Used for x-monomials
/// (length n*m, row-major), for the index monomials w of t-variables (length m),
/// and for multidegrees.
class ExpVec {
 public:
  static constexpr std::size_t kCapacity = 36;

  ExpVec() = default;
  explicit ExpVec(std::size_t size) : size_(check_size(size)) {}
  ExpVec(std::initializer_list<int> values) : size_(check_size(values.size())) {
    std::size_t i = 0;
    for (int v : values) set(i++, v);
  }
  static ExpVec from(std::span<const int> values) {
    ExpVec out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out.set(i, values[i]);
    return out;
  }
  static ExpVec unit(std::size_t size, std::size_t index, int value = 1) {
    ExpVec out(size);
    out.set(index, value);
    return out;
  }

  std::size_t size() const { return size_; }
  int operator[](std::size_t i) const { return e_[i]; }
  void set(std::size_t i, int value) {
    if (i >= size_) throw StructuralError("exponent index out of range");
    if (value < 0 || value > 255) throw DomainError("exponent out of range [0, 255]");
    e_[i] = static_cast<std::uint8_t>(value);
  }
  void add(std::size_t i, int delta) { set(i, e_[i] + delta); }

  int degree() const {
    int d = 0;
    for (std::size_t i = 0; i < size_; ++i) d += e_[i];
    return d;
  }
  bool is_zero() const { return degree() == 0; }
  std::vector<int> to_vector() const { return {e_.begin(), e_.begin() + size_}; }

  /// Componentwise a <= b.
  bool divides(const ExpVec& other) const {
    if (size_ != other.size_) return false;
    for (std::size_t i = 0; i < size_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  friend ExpVec operator+(const ExpVec& a, const ExpVec& b) {
    if (a.size_ != b.size_) throw StructuralError("exponent vectors of different length");
    ExpVec out(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) out.set(i, a.e_[i] + b.e_[i]);
    return out;
  }
  friend ExpVec operator-(const ExpVec& a, const ExpVec& b) {
    if (a.size_ != b.size_) throw StructuralError("exponent vectors of different length");
    ExpVec out(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) out.set(i, a.e_[i] - b.e_[i]);
    return out;
  }

  friend bool operator==(const ExpVec& a, const ExpVec& b) {
    return a.size_ == b.size_ && std::equal(a.e_.begin(), a.e_.begin() + a.size_, b.e_.begin());
  }
  /// Graded lexicographic: total degree first, then the first differing entry.
  friend std::strong_ordering operator<=>(const ExpVec& a, const ExpVec& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    const std::size_t common = std::min(a.size_, b.size_);
    for (std::size_t i = 0; i < common; ++i)
      if (auto c = a.e_[i] <=> b.e_[i]; c != 0) return c;
    return a.size_ <=> b.size_;
  }

  std::size_t hash() const {
    std::size_t h = size_;
    for (std::size_t i = 0; i < size_; ++i) h = h * 131 + e_[i];
    return h;
  }

 private:
  static std::uint8_t check_size(std::size_t size) {
    if (size > kCapacity) throw ResourceError("exponent vector longer than capacity");
    return static_cast<std::uint8_t>(size);
  }

  std::array<std::uint8_t, kCapacity> e_{};
  std::uint8_t size_ = 0;
};

using WeightVector = ExpVec;

struct ExpVecHash {
  std::size_t operator()(const ExpVec& v) const { return v.hash(); }
};

/// Index monomial w printed in the symbols x,y,z,w (m <= 4) or x1..xm.
inline std::string word_text(const ExpVec& w) {
  static constexpr char kAliases[] = {'x', 'y', 'z', 'w'};
  if (w.is_zero()) return "1";
  std::string out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (w[j] == 0) continue;
    if (w.size() <= 4) {
      out += kAliases[j];
    } else {
      out += 'x';
      out += std::to_string(j + 1);
    }
    if (w[j] > 1) out += "^" + std::to_string(w[j]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Variable spaces

struct XSpace {
  int n = 0;
  int m = 0;
  friend bool operator==(const XSpace&, const XSpace&) = default;
};

struct TSpace {
  int m = 0;
  int cap = 0;  ///< admitted index monomials satisfy 1 <= deg w <= cap
  friend bool operator==(const TSpace&, const TSpace&) = default;
};

inline void validate_space(const XSpace& s) {
  if (s.n < 1 || s.m < 1 || static_cast<std::size_t>(s.n * s.m) > ExpVec::kCapacity)
    throw DomainError("x-space dimensions out of range");
}
inline void validate_space(const TSpace& s) {
  if (s.m < 1 || static_cast<std::size_t>(s.m) > 6 || s.cap < 1)
    throw DomainError("t-space parameters out of range");
}

// ---------------------------------------------------------------------------
// t-monomials: products of t(w) with w a nonzero monomial in m symbols

struct TFactor {
  ExpVec word;
  std::uint32_t exp = 0;
  friend bool operator==(const TFactor&, const TFactor&) = default;
};

class TMonomial {
 public:
  TMonomial() = default;

  static TMonomial variable(const ExpVec& word, std::uint32_t exp = 1) {
    if (word.is_zero()) throw DomainError("t(1) is not a variable");
    TMonomial t;
    if (exp > 0) t.factors_.push_back({word, exp});
    return t;
  }

  const std::vector<TFactor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& f : factors_) d += static_cast<int>(f.exp) * f.word.degree();
    return d;
  }
  /// Number of t-variables counted with multiplicity.
  int length() const {
    int l = 0;
    for (const auto& f : factors_) l += static_cast<int>(f.exp);
    return l;
  }
  ExpVec weight(std::size_t m) const {
    ExpVec out(m);
    for (const auto& f : factors_)
      for (std::size_t j = 0; j < m; ++j) out.add(j, static_cast<int>(f.exp) * f.word[j]);
    return out;
  }
  std::uint32_t exponent_of(const ExpVec& word) const {
    for (const auto& f : factors_)
      if (f.word == word) return f.exp;
    return 0;
  }

  friend TMonomial operator*(const TMonomial& a, const TMonomial& b) {
    TMonomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->word > j->word)) {
        out.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->word > i->word) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.push_back({i->word, i->exp + j->exp});
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// This monomial with the exponent of t(word) lowered by one (it must be present).
  TMonomial without_one(const ExpVec& word) const {
    TMonomial out = *this;
    for (auto it = out.factors_.begin(); it != out.factors_.end(); ++it) {
      if (it->word == word) {
        if (--it->exp == 0) out.factors_.erase(it);
        return out;
      }
    }
    throw ConsistencyError("t-variable not present in monomial");
  }

  friend bool operator==(const TMonomial&, const TMonomial&) = default;
  friend std::strong_ordering operator<=>(const TMonomial& a, const TMonomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    const std::size_t common = std::min(a.factors_.size(), b.factors_.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (auto c = a.factors_[i].word <=> b.factors_[i].word; c != 0) return c;
      if (auto c = a.factors_[i].exp <=> b.factors_[i].exp; c != 0) return c;
    }
    return a.factors_.size() <=> b.factors_.size();
  }

  std::size_t hash() const {
    std::size_t h = factors_.size();
    for (const auto& f : factors_) h = h * 1000003u ^ (f.word.hash() * 31 + f.exp);
    return h;
  }

 private:
  std::vector<TFactor> factors_;  // sorted by word, descending
};

struct TMonomialHash {
  std::size_t operator()(const TMonomial& t) const { return t.hash(); }
};

// Per-space monomial rules.

inline void validate_monomial(const XSpace& s, const ExpVec& x) {
  if (x.size() != static_cast<std::size_t>(s.n * s.m))
    throw StructuralError("x-monomial length does not match n*m");
}
inline void validate_monomial(const TSpace& s, const TMonomial& t) {
  for (const auto& f : t.factors()) {
    if (f.word.size() != static_cast<std::size_t>(s.m))
      throw StructuralError("t-variable index has wrong number of symbols");
    const int d = f.word.degree();
    if (d < 1 || d > s.cap) throw DomainError("t-variable index degree outside [1, cap]");
  }
}

inline ExpVec monomial_one(const XSpace& s) { return ExpVec(static_cast<std::size_t>(s.n * s.m)); }
inline TMonomial monomial_one(const TSpace&) { return TMonomial{}; }

inline ExpVec monomial_mul(const ExpVec& a, const ExpVec& b) { return a + b; }
inline TMonomial monomial_mul(const TMonomial& a, const TMonomial& b) { return a * b; }

/// Column-degree vector of an x-monomial.
inline ExpVec weight_of(const XSpace& s, const ExpVec& x) {
  ExpVec out(static_cast<std::size_t>(s.m));
  for (int i = 0; i < s.n; ++i)
    for (int j = 0; j < s.m; ++j) out.add(j, x[i * s.m + j]);
  return out;
}
inline ExpVec weight_of(const TSpace& s, const TMonomial& t) { return t.weight(static_cast<std::size_t>(s.m)); }

inline std::string monomial_text(const XSpace& s, const ExpVec& x) {
  std::string out;
  for (int i = 0; i < s.n; ++i) {
    for (int j = 0; j < s.m; ++j) {
      const int e = x[i * s.m + j];
      if (e == 0) continue;
      if (!out.empty()) out += '*';
      out += "x[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]";
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}
inline std::string monomial_text(const TSpace&, const TMonomial& t) {
  std::string out;
  for (const auto& f : t.factors()) {
    if (!out.empty()) out += '*';
    out += "t(" + word_text(f.word) + ")";
    if (f.exp > 1) out += "^" + std::to_string(f.exp);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------

/// Sparse polynomial with exact rational coefficients; terms are kept in
/// decreasing graded-lex order and zero coefficients are never stored.
template <class Mono, class Space>
class SparsePoly {
 public:
  using monomial_type = Mono;
  using space_type = Space;
  using Terms = std::map<Mono, Rational, std::greater<>>;

  SparsePoly() = default;
  explicit SparsePoly(Space space) : space_(space) { validate_space(space_); }

  static SparsePoly constant(Space space, const Rational& c) {
    SparsePoly p(space);
    p.add_term(monomial_one(space), c);
    return p;
  }
  static SparsePoly monomial(Space space, const Mono& mono, const Rational& c = 1) {
    SparsePoly p(space);
    p.add_term(mono, c);
    return p;
  }

  const Space& space() const { return space_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Mono& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Mono& mono, const Rational& c) {
    if (c == 0) return;
    validate_monomial(space_, mono);
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SparsePoly& operator+=(const SparsePoly& o) {
    require_same_space(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    require_same_space(o);
    for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
  }
  SparsePoly& operator*=(const Rational& c) {
    if (c == 0) {
      terms_.clear();
    } else {
      for (auto& [mono, coeff] : terms_) coeff *= c;
    }
    return *this;
  }

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator-(SparsePoly a) { return a *= Rational(-1); }
  friend SparsePoly operator*(SparsePoly a, const Rational& c) { return a *= c; }
  friend SparsePoly operator*(const Rational& c, SparsePoly a) { return a *= c; }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.require_same_space(b);
    SparsePoly out(a.space_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Rational c = ca * cb;
        out.add_term(monomial_mul(ma, mb), c);
      }
    }
    return out;
  }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  /// Multiplies every term by a single monomial.
  SparsePoly shifted(const Mono& mono) const {
    SparsePoly out(space_);
    for (const auto& [m, c] : terms_) out.add_term(monomial_mul(m, mono), c);
    return out;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.space_ == b.space_ && a.terms_ == b.terms_;
  }

  /// Weight shared by all terms, or nullopt if the polynomial is zero or
  /// inhomogeneous.
  std::optional<ExpVec> multidegree() const {
    std::optional<ExpVec> alpha;
    for (const auto& [mono, c] : terms_) {
      ExpVec w = weight_of(space_, mono);
      if (!alpha) {
        alpha = w;
      } else if (!(*alpha == w)) {
        return std::nullopt;
      }
    }
    return alpha;
  }

  std::string text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
      Rational mag = abs(c);
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      const std::string body = monomial_text(space_, mono);
      if (body == "1") {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += body;
      }
      first = false;
    }
    return out;
  }

 private:
  void require_same_space(const SparsePoly& o) const {
    if (!(space_ == o.space_)) throw StructuralError("polynomials live in different variable spaces");
  }

  Space space_{};
  Terms terms_;
};

using XPoly = SparsePoly<ExpVec, XSpace>;
using TPoly = SparsePoly<TMonomial, TSpace>;

inline XPoly poly_mul(const XPoly& a, const XPoly& b) { return a * b; }
inline TPoly poly_mul(const TPoly& a, const TPoly& b) { return a * b; }

/// The coordinate function x[row][col] (0-based indices).
inline XPoly x_variable(const XSpace& s, int row, int col) {
  if (row < 0 || row >= s.n || col < 0 || col >= s.m) throw DomainError("x-variable index out of range");
  return XPoly::monomial(s, ExpVec::unit(static_cast<std::size_t>(s.n * s.m), static_cast<std::size_t>(row * s.m + col)));
}

/// The t-variable t(word); the word must have degree in [1, cap].
inline TPoly t_variable(const TSpace& s, const ExpVec& word, std::uint32_t exp = 1) {
  return TPoly::monomial(s, TMonomial::variable(word, exp));
}

}  // namespace polysym
