#pragma once

// Whole-family verifications shared by the command-line tool and the test suites.

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "polysym/ideal_lab.hpp"

namespace polysym {

struct PsiSweep {
  int n = 0;
  int m = 0;
  int max_degree = 0;
  std::size_t tuples = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

namespace detail {

inline std::string words_text(const std::vector<ExpVec>& words) {
  std::string out = "(";
  for (std::size_t i = 0; i < words.size(); ++i) out += (i ? "," : "") + word_text(words[i]);
  return out + ")";
}

/// Multisets of k words from `words` (index nondecreasing) with total degree <= budget.
inline void for_each_multiset(const std::vector<ExpVec>& words, std::size_t start, int k, int budget, std::vector<ExpVec>& current,
                              const std::function<void(const std::vector<ExpVec>&)>& visit) {
  if (k == 0) {
    visit(current);
    return;
  }
  for (std::size_t i = start; i < words.size(); ++i) {
    if (words[i].degree() * k > budget) continue;
    current.push_back(words[i]);
    for_each_multiset(words, i, k - 1, budget - words[i].degree(), current, visit);
    current.pop_back();
  }
}

}  // namespace detail

/// phi(Psi(w_1..w_{n+1})) = 0 for every multiset of n+1 nonzero words in m
/// symbols with total degree <= max_degree. Images are compared in orbit
/// coordinates, one job per leading word.
inline PsiSweep psi_sweep(int n, int m, int max_degree, unsigned threads = 1) {
  PsiSweep out{n, m, max_degree, 0, {}};
  const std::vector<ExpVec> words = index_words(m, max_degree);
  std::vector<std::size_t> leads(words.size());
  std::iota(leads.begin(), leads.end(), 0);
  struct Part {
    std::size_t tuples = 0;
    std::vector<std::string> failures;
  };
  auto parts = parallel_map(
      leads,
      [&](std::size_t lead) {
        Part p;
        std::map<ExpVec, OrbitBasis> bases;
        std::vector<ExpVec> current{words[lead]};
        const int k = n;
        if (words[lead].degree() * (k + 1) > max_degree) return p;
        detail::for_each_multiset(words, lead, k, max_degree - words[lead].degree(), current, [&](const std::vector<ExpVec>& ws) {
          ++p.tuples;
          const FPoly f = psi(n, ws);
          if (f.is_zero()) return;
          const ExpVec alpha = *f.multidegree();
          auto it = bases.find(alpha);
          if (it == bases.end()) it = bases.emplace(alpha, OrbitBasis(n, m, alpha)).first;
          for (const auto& c : phi_coordinates(f, it->second))
            if (c != 0) {
              p.failures.push_back(detail::words_text(ws));
              return;
            }
        });
        return p;
      },
      threads);
  for (auto& p : parts) {
    out.tuples += p.tuples;
    out.failures.insert(out.failures.end(), p.failures.begin(), p.failures.end());
  }
  return out;
}

struct RelationCheck {
  std::string name;
  bool in_kernel = false;
  bool highest = false;
  std::optional<WeightVector> weight;
  std::optional<WeightVector> expected_weight;
  std::optional<bool> forms_equal;  ///< for relations with two independent constructions
  bool passed() const {
    return in_kernel && highest && weight && expected_weight && *weight == *expected_weight && forms_equal.value_or(true);
  }
};

inline RelationCheck check_relation(const RelationRecord& r, int n) {
  RelationCheck out;
  out.name = r.name;
  out.in_kernel = phi_eval(r.element, n).is_zero();
  const auto hw = is_highest_weight(r.element);
  out.highest = hw.highest;
  out.weight = hw.weight;
  out.expected_weight = r.weight;
  return out;
}

/// The Gram relation for n rows in m = n symbols.
inline RelationCheck gram_check(int n) { return check_relation(gram_relation(n, n), n); }

/// J32 or J42: both constructions agree, and the relation is a kernel element for n = 3.
inline RelationCheck explicit_relation_check(const std::string& which, int m = 2) {
  if (which != "j32" && which != "j42") throw DomainError("explicit relations are j32 and j42");
  const bool is32 = which == "j32";
  RelationCheck out = check_relation(is32 ? j32(m) : j42(m), 3);
  const FPoly a = is32 ? j32_form_a() : j42_form_a();
  const FPoly b = is32 ? j32_form_b() : j42_form_b();
  out.forms_equal = a.terms() == b.terms();
  return out;
}

struct OrbitSpanCheck {
  int m = 0;
  std::vector<std::pair<std::string, std::size_t>> dims;
  bool all_in_kernel = true;
  std::size_t total() const {
    std::size_t t = 0;
    for (const auto& [name, d] : dims) t += d;
    return t;
  }
};

/// Spans of J32, J42, and (m >= 3) J222 under the raising and lowering operators.
inline OrbitSpanCheck orbit_span_check(int m) {
  OrbitSpanCheck out;
  out.m = m;
  const GeneratorSet g = polarization_generators(m);
  PhiEvaluator phi(3, m);
  for (const auto& member : g.members) {
    if (out.dims.empty() || out.dims.back().first != member.seed) out.dims.emplace_back(member.seed, 0);
    ++out.dims.back().second;
    if (!phi(member.element).is_zero()) out.all_in_kernel = false;
  }
  return out;
}

}  // namespace polysym
