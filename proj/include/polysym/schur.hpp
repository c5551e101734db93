#pragma once

// Partitions, Weyl dimensions, Kostka numbers, and decomposition of weight
// tables of polynomial GL_m-modules into irreducibles.

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "polysym/invariant_ring.hpp"

namespace polysym {

class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; the remaining parts must be positive and weakly decreasing.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// The dominant weight obtained by sorting a weight vector.
  static Partition sorted_from(const ExpVec& weight) {
    std::vector<int> v = weight.to_vector();
    std::sort(v.begin(), v.end(), std::greater<>());
    return Partition(std::move(v));
  }

  const std::vector<int>& parts() const { return parts_; }
  int height() const { return static_cast<int>(parts_.size()); }
  int size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// The partition as a weight vector of length m (requires height <= m).
  ExpVec as_weight(int m) const {
    if (height() > m) throw DomainError("partition has more than m parts");
    ExpVec w(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < parts_.size(); ++i) w.set(i, parts_[i]);
    return w;
  }

  std::string text() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) out += (i ? "," : "") + std::to_string(parts_[i]);
    return out + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// Multiplicities of irreducibles, largest partition first.
using SchurMultiset = std::map<Partition, long long, std::greater<>>;

/// dim V_lambda for GL_m: prod_{i<j} (l_i - l_j + j - i) / (j - i).
inline Integer weyl_dim(const Partition& lambda, int m) {
  if (m < 1) throw DomainError("m must be positive");
  if (lambda.height() > m) throw DomainError("partition height exceeds m");
  Rational d = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) d *= make_rational(lambda.part(i) - lambda.part(j) + j - i, j - i);
  if (d.get_den() != 1) throw ConsistencyError("Weyl dimension is not an integer");
  return d.get_num();
}

/// Number of semistandard tableaux of shape lambda and content mu, counted as
/// chains of horizontal strips of sizes mu_1, mu_2, ...
inline long long kostka(const Partition& lambda, const std::vector<int>& mu) {
  int total = 0;
  for (int v : mu) {
    if (v < 0) throw DomainError("content entries must be nonnegative");
    total += v;
  }
  if (total != lambda.size()) throw DomainError("shape and content have different sizes");
  const int h = lambda.height();
  std::map<std::pair<std::size_t, std::vector<int>>, long long> memo;
  // shape: current inner shape (length h); place value k in a horizontal strip of size mu[k].
  std::function<long long(std::size_t, const std::vector<int>&)> count = [&](std::size_t k, const std::vector<int>& shape) -> long long {
    if (k == mu.size()) {
      for (int i = 0; i < h; ++i)
        if (shape[i] != lambda.part(i)) return 0;
      return 1;
    }
    auto key = std::make_pair(k, shape);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long long ways = 0;
    std::vector<int> next = shape;
    // Row i may grow to at most min(lambda_i, previous length of row i-1).
    std::function<void(int, int)> grow = [&](int i, int left) {
      if (i == h) {
        if (left == 0) ways += count(k + 1, next);
        return;
      }
      const int limit = std::min(lambda.part(i), i == 0 ? lambda.part(0) : shape[i - 1]);
      for (int add = 0; add <= std::min(left, limit - shape[i]); ++add) {
        next[i] = shape[i] + add;
        grow(i + 1, left - add);
      }
      next[i] = shape[i];
    };
    grow(0, mu[k]);
    memo.emplace(std::move(key), ways);
    return ways;
  };
  return count(0, std::vector<int>(static_cast<std::size_t>(h), 0));
}

inline long long kostka(const Partition& lambda, const ExpVec& mu) { return kostka(lambda, mu.to_vector()); }

/// All index monomials w in m symbols with 1 <= deg w <= cap, by degree then decreasing lex.
inline std::vector<ExpVec> index_words(int m, int cap) {
  std::vector<ExpVec> out;
  for (int d = 1; d <= cap; ++d)
    for (const auto& w : weights_of_degree(m, d)) out.push_back(w);
  return out;
}

/// Number of t-monomials of weight alpha in the variables t(w), 1 <= deg w <= n.
inline Integer dim_F_component(int n, int m, const ExpVec& alpha) {
  if (alpha.size() != static_cast<std::size_t>(m)) throw StructuralError("weight length differs from m");
  const std::vector<ExpVec> words = index_words(m, n);
  // One pass per word, trying every multiplicity; states are weights <= alpha.
  std::map<std::vector<int>, Integer> ways;
  ways[std::vector<int>(static_cast<std::size_t>(m), 0)] = 1;
  for (const auto& w : words) {
    if (!w.divides(alpha)) continue;
    std::map<std::vector<int>, Integer> next;
    for (const auto& [state, count] : ways) {
      std::vector<int> cur = state;
      while (true) {
        next[cur] += count;
        bool fits = true;
        for (int j = 0; j < m; ++j) {
          cur[j] += w[j];
          if (cur[j] > alpha[j]) fits = false;
        }
        if (!fits) break;
      }
    }
    ways = std::move(next);
  }
  auto it = ways.find(alpha.to_vector());
  return it == ways.end() ? Integer(0) : it->second;
}

/// Weight table -> multiplicities of irreducibles. The table must be symmetric
/// under permutation of the weight entries.
inline SchurMultiset schur_decompose(const std::map<ExpVec, long long>& dims, int m) {
  std::map<std::vector<int>, long long, std::greater<>> remaining;  // dominant weight -> value
  for (const auto& [alpha, d] : dims) {
    if (alpha.size() != static_cast<std::size_t>(m)) throw StructuralError("weight length differs from m");
    Partition dom = Partition::sorted_from(alpha);
    std::vector<int> key = dom.as_weight(m).to_vector();
    auto [it, inserted] = remaining.emplace(key, d);
    if (!inserted && it->second != d) throw NotPolynomialCharacter("weight table is not symmetric at " + dom.text());
  }
  SchurMultiset out;
  // Lexicographic order refines dominance, so the largest remaining weight is highest.
  for (auto it = remaining.begin(); it != remaining.end(); ++it) {
    const long long mult = it->second;
    if (mult < 0) throw NotPolynomialCharacter("negative multiplicity at " + Partition(it->first).text());
    if (mult == 0) continue;
    Partition lambda(it->first);
    out[lambda] = mult;
    for (auto jt = std::next(it); jt != remaining.end(); ++jt) {
      int size = 0;
      for (int v : jt->first) size += v;
      if (size != lambda.size()) continue;
      jt->second -= mult * kostka(lambda, jt->first);
    }
  }
  return out;
}

inline std::map<ExpVec, long long> f_weight_table(int n, int m, int degree) {
  std::map<ExpVec, long long> dims;
  for (const auto& alpha : weights_of_degree(m, degree)) dims[alpha] = dim_F_component(n, m, alpha).get_si();
  return dims;
}

inline std::map<ExpVec, long long> r_weight_table(int n, int m, int degree) {
  std::map<ExpVec, long long> dims;
  for (const auto& alpha : weights_of_degree(m, degree))
    dims[alpha] = dim_invariant_component_exact(n, m, alpha).get_si();
  return dims;
}

/// dim K^alpha = dim F^alpha - dim R^alpha, valid because t(w) -> [w] is onto.
inline std::map<ExpVec, long long> kernel_weight_table(int n, int m, int degree) {
  std::map<ExpVec, long long> dims;
  for (const auto& alpha : weights_of_degree(m, degree))
    dims[alpha] = Integer(dim_F_component(n, m, alpha) - dim_invariant_component_exact(n, m, alpha)).get_si();
  return dims;
}

inline SchurMultiset f_decomposition(int n, int m, int degree) { return schur_decompose(f_weight_table(n, m, degree), m); }
inline SchurMultiset r_decomposition(int n, int m, int degree) { return schur_decompose(r_weight_table(n, m, degree), m); }
inline SchurMultiset kernel_decomposition(int n, int m, int degree) {
  return schur_decompose(kernel_weight_table(n, m, degree), m);
}

/// Every irreducible in the degree-d slice of F has at most (d+1)/2 parts.
inline bool height_filter_check(int n, int m, int degree) {
  for (const auto& [lambda, mult] : f_decomposition(n, m, degree))
    if (2 * lambda.height() > degree + 1) return false;
  return true;
}

inline Integer total_dimension(const SchurMultiset& s, int m) {
  Integer total = 0;
  for (const auto& [lambda, mult] : s) total += Integer(static_cast<long>(mult)) * weyl_dim(lambda, m);
  return total;
}

inline std::string schur_text(const SchurMultiset& s) {
  if (s.empty()) return "0";
  std::string out;
  for (const auto& [lambda, mult] : s) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += std::to_string(mult) + "*";
    out += "V" + lambda.text();
  }
  return out;
}

inline nlohmann::json schur_json(const SchurMultiset& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [lambda, mult] : s) out.push_back({{"partition", lambda.parts()}, {"mult", mult}});
  return out;
}

}  // namespace polysym
