// Shared helpers for the test suites: a deterministic RNG for reproducible
// randomized properties, and shorthand expression builders.
#pragma once

#include <array>
#include <cstdint>

#include "painleve/fraction.hpp"
#include "painleve/polynomial.hpp"

namespace painleve::testutil {

struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  int range(int lo, int hi) {  // inclusive
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

inline Rational small_rational(SplitMix64& rng) {
  int num = rng.range(-9, 9);
  int den = rng.range(1, 7);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational nonzero_rational(SplitMix64& rng) {
  Rational r = small_rational(rng);
  while (sgn(r) == 0) r = small_rational(rng);
  return r;
}

// Random sparse polynomial with a handful of low-degree terms.
inline Polynomial random_poly(SplitMix64& rng, int max_terms = 4,
                              int max_exp = 2) {
  std::vector<Term> terms;
  const int n = rng.range(0, max_terms);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    const int nvars = rng.range(1, 3);
    for (int k = 0; k < nvars; ++k)
      m.exps[rng.below(kNumVars)] =
          static_cast<std::uint16_t>(rng.range(0, max_exp));
    terms.push_back({m, small_rational(rng)});
  }
  return Polynomial::from_terms(std::move(terms));
}

inline Polynomial random_nonzero_poly(SplitMix64& rng, int max_terms = 4,
                                      int max_exp = 2) {
  Polynomial p = random_poly(rng, max_terms, max_exp);
  while (p.is_zero()) p = random_poly(rng, max_terms, max_exp);
  return p;
}

inline std::array<Rational, kNumVars> random_point(SplitMix64& rng) {
  std::array<Rational, kNumVars> pt;
  for (auto& v : pt) v = nonzero_rational(rng);
  return pt;
}

// Shorthand variable polynomials.
inline Polynomial P(Var v) { return Polynomial::variable(v); }
inline Fraction F(Var v) { return Fraction::variable(v); }

}  // namespace painleve::testutil
