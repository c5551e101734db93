#pragma once

// Reference computations that do not share code paths with the library.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "polysym/polysym.hpp"

namespace oracle {

using polysym::ExpVec;
using polysym::Integer;
using polysym::Rational;

/// Bell numbers from the Bell triangle.
inline long bell(int k) {
  std::vector<long> row{1};
  for (int i = 1; i < k; ++i) {
    std::vector<long> next{row.back()};
    for (long v : row) next.push_back(next.back() + v);
    row = next;
  }
  return row.back();
}

/// dim V_lambda(GL_m) by the hook-content formula.
inline Integer hook_content_dim(const std::vector<int>& lambda, int m) {
  std::vector<int> conj;
  for (int i = 0; i < (lambda.empty() ? 0 : lambda[0]); ++i) {
    int c = 0;
    for (int p : lambda)
      if (p > i) ++c;
    conj.push_back(c);
  }
  Rational d = 1;
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      const int hook = lambda[i] - j + conj[j] - i - 1;
      d *= polysym::make_rational(m + j - i, hook);
    }
  return d.get_num();
}

/// Semistandard tableaux of shape lambda with content mu, by filling cells row by row.
inline long brute_kostka(const std::vector<int>& lambda, const std::vector<int>& mu) {
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < static_cast<int>(lambda.size()); ++i)
    for (int j = 0; j < lambda[i]; ++j) cells.emplace_back(i, j);
  std::map<std::pair<int, int>, int> fill;
  std::vector<int> left = mu;
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [i, j] = cells[k];
    for (int v = 0; v < static_cast<int>(mu.size()); ++v) {
      if (left[v] == 0) continue;
      if (j > 0 && fill[{i, j - 1}] > v) continue;
      if (i > 0 && fill[{i - 1, j}] >= v) continue;
      fill[{i, j}] = v;
      --left[v];
      rec(k + 1);
      ++left[v];
    }
  };
  rec(0);
  return count;
}

/// Number of S_n-orbits on monomials in an n x m matrix of variables with column sums alpha.
inline long brute_dim_R(int n, int m, const std::vector<int>& alpha) {
  std::set<std::vector<std::vector<int>>> orbits;
  std::vector<std::vector<int>> mat(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(m), 0));
  std::function<void(int, int, int)> rec = [&](int col, int row, int left) {
    if (col == m) {
      auto rows = mat;
      std::sort(rows.begin(), rows.end());
      orbits.insert(rows);
      return;
    }
    if (row == n - 1) {
      mat[row][col] = left;
      rec(col + 1, 0, col + 1 < m ? alpha[col + 1] : 0);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      mat[row][col] = v;
      rec(col, row + 1, left - v);
    }
  };
  rec(0, 0, alpha.empty() ? 0 : alpha[0]);
  return static_cast<long>(orbits.size());
}

/// Coefficient of t^alpha in prod_w 1/(1 - t^w), 1 <= deg w <= cap, by dense series multiplication.
inline long brute_dim_F(int cap, int m, const std::vector<int>& alpha) {
  std::map<std::vector<int>, long> series{{std::vector<int>(static_cast<std::size_t>(m), 0), 1}};
  auto le = [&](const std::vector<int>& v) {
    for (int j = 0; j < m; ++j)
      if (v[j] > alpha[j]) return false;
    return true;
  };
  std::vector<std::vector<int>> words;
  std::vector<int> w(static_cast<std::size_t>(m), 0);
  std::function<void(int)> gen = [&](int j) {
    if (j == m) {
      int d = 0;
      for (int v : w) d += v;
      if (d >= 1 && d <= cap && le(w)) words.push_back(w);
      return;
    }
    for (int v = 0; v <= alpha[j]; ++v) {
      w[j] = v;
      gen(j + 1);
    }
  };
  gen(0);
  for (const auto& word : words) {
    // multiply by 1/(1 - t^word): s_new[v] = s[v] + s_new[v - word], in increasing order
    std::map<std::vector<int>, long> next;
    std::vector<std::vector<int>> keys;
    std::vector<int> v(static_cast<std::size_t>(m), 0);
    std::function<void(int)> all = [&](int j) {
      if (j == m) {
        keys.push_back(v);
        return;
      }
      for (int x = 0; x <= alpha[j]; ++x) {
        v[j] = x;
        all(j + 1);
      }
    };
    all(0);
    for (const auto& k : keys) {
      long val = series.count(k) ? series[k] : 0;
      std::vector<int> prev = k;
      bool ok = true;
      for (int j = 0; j < m; ++j) {
        prev[j] -= word[j];
        if (prev[j] < 0) ok = false;
      }
      if (ok && next.count(prev)) val += next[prev];
      if (val) next[k] = val;
    }
    series = std::move(next);
  }
  return series.count(alpha) ? series[alpha] : 0;
}

/// Value of a t-monomial at an n x m matrix: prod (sum_i prod_j x_ij^{w_j})^e.
inline Rational eval_t(const polysym::TMonomial& t, const std::vector<std::vector<Rational>>& x) {
  Rational out = 1;
  for (const auto& f : t.factors()) {
    Rational s = 0;
    for (const auto& row : x) {
      Rational p = 1;
      for (std::size_t j = 0; j < row.size(); ++j)
        for (int e = 0; e < f.word[j]; ++e) p *= row[j];
      s += p;
    }
    for (std::uint32_t e = 0; e < f.exp; ++e) out *= s;
  }
  return out;
}

inline Rational eval_f(const polysym::FPoly& f, const std::vector<std::vector<Rational>>& x) {
  Rational out = 0;
  for (const auto& [t, c] : f.terms()) out += c * eval_t(t, x);
  return out;
}

/// Value of a polynomial in x_ij (row-major exponent vectors) at a matrix.
inline Rational eval_x(const polysym::XPoly& p, const std::vector<std::vector<Rational>>& x) {
  const int m = p.space().m;
  Rational out = 0;
  for (const auto& [e, c] : p.terms()) {
    Rational v = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int r = 0; r < e[k]; ++r) v *= x[k / static_cast<std::size_t>(m)][k % static_cast<std::size_t>(m)];
    out += v;
  }
  return out;
}

inline std::vector<std::vector<Rational>> random_point(std::mt19937_64& rng, int n, int m, int bound = 9) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<std::vector<Rational>> x(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(m)));
  for (auto& row : x)
    for (auto& v : row) v = d(rng);
  return x;
}

/// f vanishes at `points` random integer matrices.
inline bool vanishes_at_points(const polysym::FPoly& f, int n, int points, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < points; ++k)
    if (eval_f(f, random_point(rng, n, f.space().m)) != 0) return false;
  return true;
}

/// Determinant of a square matrix of polynomials by Laplace expansion along the first row.
inline polysym::FPoly laplace_det(const std::vector<std::vector<polysym::FPoly>>& a) {
  const std::size_t k = a.size();
  if (k == 1) return a[0][0];
  polysym::FPoly out(a[0][0].space());
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<polysym::FPoly>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<polysym::FPoly> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(a[r][cc]);
      minor.push_back(row);
    }
    polysym::FPoly term = a[0][c] * laplace_det(minor);
    out = (c % 2 == 0) ? out + term : out - term;
  }
  return out;
}

/// Gram matrix of t(x_i x_j), bordered by t(x_i) and corner n, for n rows and m symbols.
inline std::vector<std::vector<polysym::FPoly>> gram_matrix(int n, int m) {
  const polysym::TSpace s{m, 2};
  std::vector<std::vector<polysym::FPoly>> a(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      if (i < n && j < n) {
        ExpVec w(static_cast<std::size_t>(m));
        w.add(static_cast<std::size_t>(i), 1);
        w.add(static_cast<std::size_t>(j), 1);
        a[i].push_back(polysym::t_variable(s, w));
      } else if (i < n || j < n) {
        a[i].push_back(polysym::t_variable(s, ExpVec::unit(static_cast<std::size_t>(m), static_cast<std::size_t>(i < n ? i : j))));
      } else {
        a[i].push_back(polysym::FPoly::constant(s, n));
      }
    }
  return a;
}

inline polysym::FPoly gram_by_laplace(int n, int m) { return laplace_det(gram_matrix(n, m)); }

/// Weights of total degree d in m parts, by stars and bars.
inline std::vector<std::vector<int>> weights(int m, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(static_cast<std::size_t>(m), 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == m - 1) {
      w[j] = left;
      out.push_back(w);
      return;
    }
    for (int v = left; v >= 0; --v) {
      w[j] = v;
      rec(j + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

}  // namespace oracle
