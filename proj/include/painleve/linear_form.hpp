// Affine-linear parameter constraints c0*a0 + ... + c5*a5 = k, and reduction
// of polynomials modulo such a constraint by eliminating one parameter.
#pragma once

#include <array>
#include <string>

#include "painleve/fraction.hpp"
#include "painleve/polynomial.hpp"

namespace painleve {

struct LinearForm {
  std::array<Rational, kNumParams> coeffs{};
  Rational constant{0};

  Rational eval(const std::array<Rational, kNumParams>& params) const {
    Rational s(0);
    for (std::size_t i = 0; i < kNumParams; ++i) s += coeffs[i] * params[i];
    return s;
  }

  // True iff the given parameter vector satisfies coeffs . a == constant.
  bool satisfied_by(const std::array<Rational, kNumParams>& params) const {
    return eval(params) == constant;
  }

  // The defect polynomial coeffs . a - constant.
  Polynomial defect() const;

  bool operator==(const LinearForm&) const = default;

  std::string str() const;
};

// Replaces every occurrence of parameter `eliminated` using the constraint;
// the result is free of that parameter and equals `a` modulo the ideal
// generated by the defect. Requires a nonzero coefficient on `eliminated`.
Polynomial reduce_by_constraint(const Polynomial& a, const LinearForm& c,
                                std::size_t eliminated);

// Solves the constraint for parameter `eliminated` as a polynomial in the
// other parameters.
Polynomial constraint_solution(const LinearForm& c, std::size_t eliminated);

// Checks f == 0 modulo the constraint (numerator reduced, then tested).
bool zero_mod_constraint(const Fraction& f, const LinearForm& c,
                         std::size_t eliminated);

}  // namespace painleve
