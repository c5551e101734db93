#pragma once

// Text notation for elements of F. Accepted forms:
//   6t(x^2y)t(xy) - 3t(xy^2)t(x^2)        t-variables
//   [x^2y^2] - 1/3[xy]^2                   bracketed power sums, read as t(w)
// Symbols are x, y, z, w (first four) or x1, x2, ... (1-based).

#include <cctype>
#include <string>
#include <string_view>

#include "polysym/free_algebra.hpp"

namespace polysym {

namespace detail {

class NotationParser {
 public:
  NotationParser(std::string_view text, TSpace space) : text_(text), space_(space) { validate_space(space_); }

  FPoly parse() {
    FPoly out(space_);
    skip();
    if (eof()) throw ParseError("empty expression");
    bool first = true;
    while (!eof()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      out += parse_term() * Rational(sign);
      first = false;
      skip();
    }
    return out;
  }

  ExpVec parse_word_only() {
    skip();
    ExpVec w = parse_word();
    skip();
    if (!eof()) fail("trailing characters after monomial");
    return w;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  void skip() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  long parse_integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000000L) fail("number too large");
      ++pos_;
    }
    return v;
  }

  Rational parse_coefficient() {
    long num = parse_integer();
    skip();
    long den = 1;
    if (peek() == '/') {
      ++pos_;
      skip();
      den = parse_integer();
      if (den == 0) fail("zero denominator");
    }
    return make_rational(num, den);
  }

  bool at_factor() const { return peek() == 't' || peek() == '['; }

  FPoly parse_term() {
    Rational coeff = 1;
    bool seen = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
      seen = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (!at_factor()) fail("expected a factor after '*'");
      }
    }
    TMonomial mono;
    while (at_factor()) {
      mono = mono * parse_factor();
      seen = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        skip();
        if (!at_factor()) fail("expected a factor after '*'");
      }
    }
    if (!seen) fail("expected a term");
    return FPoly::monomial(space_, mono, coeff);
  }

  TMonomial parse_factor() {
    ExpVec w;
    if (peek() == 't') {
      ++pos_;
      skip();
      if (peek() != '(') fail("expected '(' after t");
      ++pos_;
      skip();
      w = parse_word();
      skip();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    } else {
      ++pos_;  // '['
      skip();
      w = parse_word();
      skip();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
    }
    skip();
    std::uint32_t exp = 1;
    if (peek() == '^') {
      ++pos_;
      skip();
      exp = static_cast<std::uint32_t>(parse_integer());
      if (exp == 0) fail("zero exponent");
    }
    if (w.degree() > space_.cap) fail("monomial degree exceeds the cap");
    return TMonomial::variable(w, exp);
  }

  int parse_symbol() {
    static constexpr std::string_view kAliases = "xyzw";
    const char c = peek();
    if (c == 'x' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      long k = parse_integer();
      if (k < 1 || k > space_.m) fail("symbol index out of range");
      return static_cast<int>(k - 1);
    }
    const auto idx = kAliases.find(c);
    if (idx == std::string_view::npos) fail("expected a symbol");
    if (static_cast<int>(idx) >= space_.m) fail("symbol outside the first m symbols");
    ++pos_;
    return static_cast<int>(idx);
  }

  ExpVec parse_word() {
    ExpVec w(static_cast<std::size_t>(space_.m));
    bool any = false;
    while (!eof() && (peek() == 'x' || peek() == 'y' || peek() == 'z' || peek() == 'w')) {
      const int j = parse_symbol();
      int e = 1;
      if (peek() == '^') {
        ++pos_;
        e = static_cast<int>(parse_integer());
      }
      w.add(j, e);
      any = true;
    }
    if (!any || w.is_zero()) fail("expected a nonempty monomial");
    return w;
  }

  std::string_view text_;
  TSpace space_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression in t(w) or [w] notation into F with the given cap.
inline FPoly parse_fpoly(std::string_view text, int m, int cap) {
  return detail::NotationParser(text, TSpace{m, cap}).parse();
}

/// Parses a single index monomial such as "x^2y".
inline ExpVec parse_word(std::string_view text, int m) {
  return detail::NotationParser(text, TSpace{m, 255}).parse_word_only();
}

/// An element of F printed in bracket notation, e.g. "[x^2y][xz] + [x^2z][xy]".
inline std::string bracket_text(const FPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mono, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || mono.is_one()) out += mag.get_str();
    for (const auto& fac : mono.factors()) {
      out += "[" + word_text(fac.word) + "]";
      if (fac.exp > 1) out += "^" + std::to_string(fac.exp);
    }
    first = false;
  }
  return out;
}

}  // namespace polysym
