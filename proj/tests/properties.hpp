#pragma once

// Randomized exact property checks shared by the unit suite and the acceptance binary.

#include <map>
#include <random>
#include <string>

#include "oracles.hpp"

namespace property {

using namespace polysym;

struct Outcome {
  int trials = 0;
  int failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
  void fail(int trial, const std::string& what) {
    if (failures++ == 0) first_failure = "trial " + std::to_string(trial) + ": " + what;
  }
};

inline Rational random_coeff(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  int a = 0;
  while (a == 0) a = num(rng);
  return make_rational(a, den(rng));
}

inline XPoly random_x(std::mt19937_64& rng, const XSpace& s, int terms, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  XPoly p(s);
  for (int k = 0; k < terms; ++k) {
    ExpVec mono(static_cast<std::size_t>(s.n * s.m));
    for (std::size_t i = 0; i < mono.size(); ++i) mono.set(i, e(rng));
    p.add_term(mono, random_coeff(rng));
  }
  return p;
}

inline TMonomial random_t_monomial(std::mt19937_64& rng, int m, int cap, int factors) {
  std::uniform_int_distribution<int> e(0, cap);
  TMonomial t;
  for (int k = 0; k < factors; ++k) {
    ExpVec w(static_cast<std::size_t>(m));
    do {
      for (int j = 0; j < m; ++j) w.set(static_cast<std::size_t>(j), e(rng));
    } while (w.is_zero() || w.degree() > cap);
    t = t * TMonomial::variable(w);
  }
  return t;
}

inline FPoly random_f(std::mt19937_64& rng, int m, int cap, int terms, int max_factors) {
  std::uniform_int_distribution<int> len(0, max_factors);
  FPoly f(t_space(m, cap));
  for (int k = 0; k < terms; ++k) f.add_term(random_t_monomial(rng, m, cap, len(rng)), random_coeff(rng));
  return f;
}

/// Commutative ring axioms for both polynomial types, with a point-evaluation cross-check.
inline Outcome ring_axioms(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(1, 3);
  Outcome out;
  for (int t = 0; t < trials; ++t, ++out.trials) {
    const XSpace s{small(rng), small(rng)};
    const XPoly a = random_x(rng, s, small(rng) + 1, 2), b = random_x(rng, s, small(rng), 2), c = random_x(rng, s, small(rng), 2);
    const XPoly one = XPoly::constant(s, 1);
    if (!((a * b) * c == a * (b * c))) out.fail(t, "x associativity");
    if (!(a * b == b * a)) out.fail(t, "x commutativity");
    if (!(a * (b + c) == a * b + a * c)) out.fail(t, "x distributivity");
    if (!(a * one == a) || !(a - a).is_zero()) out.fail(t, "x identities");
    const auto x = oracle::random_point(rng, s.n, s.m, 5);
    if (oracle::eval_x(a * b, x) != oracle::eval_x(a, x) * oracle::eval_x(b, x)) out.fail(t, "x evaluation");

    const int m = small(rng);
    const FPoly f = random_f(rng, m, 3, 3, 2), g = random_f(rng, m, 3, 3, 2), h = random_f(rng, m, 3, 2, 2);
    if (!((f * g) * h == f * (g * h))) out.fail(t, "t associativity");
    if (!(f * g == g * f)) out.fail(t, "t commutativity");
    if (!(f * (g + h) == f * g + f * h)) out.fail(t, "t distributivity");
    if (!(f * FPoly::constant(f.space(), 1) == f) || !(f - f).is_zero()) out.fail(t, "t identities");
    const auto y = oracle::random_point(rng, 2, m, 4);
    if (oracle::eval_f(f * g, y) != oracle::eval_f(f, y) * oracle::eval_f(g, y)) out.fail(t, "t evaluation");
  }
  return out;
}

/// Polarization operators are derivations on both sides.
inline Outcome derivation_leibniz(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int t = 0; t < trials; ++t, ++out.trials) {
    const int m = std::uniform_int_distribution<int>(2, 4)(rng);
    std::uniform_int_distribution<int> sym(0, m - 1);
    int i = sym(rng), j = sym(rng);
    while (j == i) j = sym(rng);
    const FPoly f = random_f(rng, m, 3, 3, 3), g = random_f(rng, m, 3, 3, 2);
    if (!(raising_action(i, j, f * g) == raising_action(i, j, f) * g + f * raising_action(i, j, g))) out.fail(t, "t Leibniz");
    const XSpace s{std::uniform_int_distribution<int>(1, 3)(rng), m};
    const XPoly a = random_x(rng, s, 3, 2), b = random_x(rng, s, 3, 2);
    if (!(x_polarization(i, j, a * b) == x_polarization(i, j, a) * b + a * x_polarization(i, j, b))) out.fail(t, "x Leibniz");
  }
  return out;
}

/// phi is a ring homomorphism intertwining the two polarization actions.
inline Outcome phi_homomorphism(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int t = 0; t < trials; ++t, ++out.trials) {
    const int m = std::uniform_int_distribution<int>(1, 3)(rng);
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    const FPoly f = random_f(rng, m, 3, 3, 2), g = random_f(rng, m, 3, 2, 2);
    PhiEvaluator phi(n, m);
    const InvariantPoly pf = phi(f), pg = phi(g);
    if (!(phi(f * g) == pf * pg)) out.fail(t, "multiplicative");
    if (!(phi(f + g) == pf + pg)) out.fail(t, "additive");
    if (m >= 2) {
      std::uniform_int_distribution<int> sym(0, m - 1);
      int i = sym(rng), j = sym(rng);
      while (j == i) j = sym(rng);
      if (!(phi(raising_action(i, j, f)).body() == x_polarization(i, j, pf.body()))) out.fail(t, "equivariant");
    }
    const auto x = oracle::random_point(rng, n, m, 6);
    if (oracle::eval_x(pf.body(), x) != oracle::eval_f(f, x)) out.fail(t, "evaluation");
  }
  return out;
}

/// rank of the evaluation matrix + kernel dimension = dim of the F-component,
/// with both dimensions matched against brute-force counts.
inline Outcome rank_nullity(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  std::map<ExpVec, KernelComponent> cache;
  std::map<ExpVec, std::pair<long, long>> counts;
  for (int t = 0; t < trials; ++t, ++out.trials) {
    const int m = std::uniform_int_distribution<int>(2, 4)(rng);
    const int d = std::uniform_int_distribution<int>(0, 8)(rng);
    const auto ws = oracle::weights(m, d);
    const auto w = ws[std::uniform_int_distribution<std::size_t>(0, ws.size() - 1)(rng)];
    const ExpVec alpha = ExpVec::from(w);
    auto it = cache.find(alpha);
    if (it == cache.end()) {
      it = cache.emplace(alpha, kernel_component(3, m, alpha)).first;
      counts[alpha] = {oracle::brute_dim_F(3, m, w), oracle::brute_dim_R(3, m, w)};
    }
    const KernelComponent& k = it->second;
    const auto [f_dim, r_dim] = counts[alpha];
    if (static_cast<long>(k.phi_rank + k.basis.size()) != f_dim) out.fail(t, "rank + nullity");
    if (static_cast<long>(k.phi_rank) != r_dim) out.fail(t, "rank");
    FPoly combo(t_space(m, 3));
    for (const auto& b : k.basis) combo = combo + random_coeff(rng) * b;
    const auto x = oracle::random_point(rng, 3, m, 7);
    if (oracle::eval_f(combo, x) != 0) out.fail(t, "kernel combination does not vanish");
  }
  return out;
}

/// reduce_mod_P decides membership correctly on elements built inside (P), and
/// every certificate multiplies back to its input.
inline Outcome certificate_soundness(int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Outcome out;
  for (int t = 0; t < trials; ++t, ++out.trials) {
    const int m = std::uniform_int_distribution<int>(1, 3)(rng);
    const int d = std::uniform_int_distribution<int>(1, 5)(rng);
    const auto ws = oracle::weights(m, d);
    const ExpVec alpha = ExpVec::from(ws[std::uniform_int_distribution<std::size_t>(0, ws.size() - 1)(rng)]);
    const XSpace s{3, m};
    XPoly inside(s);
    for (int k = 0; k < 3; ++k) {
      std::vector<std::pair<int, int>> choices;
      for (int j = 0; j < m; ++j)
        for (int p = 1; p <= 3 && p <= alpha[j]; ++p) choices.emplace_back(j, p);
      if (choices.empty()) break;
      const auto [j, p] = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
      const ExpVec w = ExpVec::unit(static_cast<std::size_t>(m), static_cast<std::size_t>(j), p);
      OrbitBasis cof(3, m, alpha - w);
      const InvariantPoly b = cof.element(std::uniform_int_distribution<std::size_t>(0, cof.size() - 1)(rng));
      inside += random_coeff(rng) * (polarized_power_sum(w, 3).body() * b.body());
    }
    XPoly p = inside;
    const bool add_free = std::bernoulli_distribution(0.5)(rng) || inside.is_zero();
    if (add_free) {
      OrbitBasis full(3, m, alpha);
      p += random_coeff(rng) * full.element(std::uniform_int_distribution<std::size_t>(0, full.size() - 1)(rng)).body();
    }
    const PMembership mem = reduce_mod_P(trusted_invariant(p));
    if (!add_free && !mem.member) out.fail(t, "element of (P) not recognised");
    if (mem.member) {
      XPoly rebuilt(s);
      for (const auto& term : mem.certificate) {
        const ExpVec w = ExpVec::unit(static_cast<std::size_t>(m), static_cast<std::size_t>(term.generator.symbol), term.generator.power);
        rebuilt += term.coeff * (polarized_power_sum(w, 3).body() * orbit_sum(s, term.generator.rep).body());
      }
      if (!(rebuilt == p)) out.fail(t, "certificate does not reproduce input");
    } else if (mem.residue.empty()) {
      out.fail(t, "non-member with zero residue");
    }
    // Membership is unchanged by adding an element of (P).
    if (!inside.is_zero()) {
      const PMembership shifted = reduce_mod_P(trusted_invariant(p + inside));
      if (shifted.member != mem.member) out.fail(t, "membership not invariant under (P)");
    }
  }
  return out;
}

}  // namespace property
