// Sparse multivariate polynomials in the 13 fixed indeterminates over
// arbitrary-precision rationals. Terms are kept sorted in descending graded
// lexicographic order; no zero coefficients are stored. All operations are
// pure; values are safe to share between threads.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "painleve/vars.hpp"

namespace painleve {

using Rational = mpq_class;

struct Monomial {
  std::array<std::uint16_t, kNumVars> exps{};

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  std::uint32_t phase_degree() const {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < kNumPhaseVars; ++i) d += exps[i];
    return d;
  }
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic order: higher total degree first, ties broken by the
// fixed indeterminate order (x before y before ... before a5).
bool grlex_less(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(a, b);
  }
};

// Same order applied to the phase-variable exponents only.
bool phase_grlex_less(const Monomial& a, const Monomial& b);
bool phase_equal(const Monomial& a, const Monomial& b);

bool monomial_divisible(const Monomial& n, const Monomial& d);
Monomial monomial_mul(const Monomial& a, const Monomial& b);   // throws on overflow
Monomial monomial_div(const Monomial& n, const Monomial& d);   // requires divisible

struct Term {
  Monomial mono;
  Rational coeff;
};

class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rational& c);
  static Polynomial variable(Var v);
  static Polynomial monomial(const Monomial& m, const Rational& c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const;
  // Value as a constant; requires is_constant().
  Rational constant_value() const;

  // Leading term under graded lex; requires !is_zero().
  const Term& leading() const { return terms_.front(); }

  std::uint32_t total_degree() const;
  std::uint32_t phase_degree() const;
  std::uint16_t max_exponent(Var v) const;
  bool depends_on(Var v) const { return max_exponent(v) > 0; }

  bool operator==(const Polynomial& o) const;

  Rational eval(const std::array<Rational, kNumVars>& point) const;
  std::complex<double> eval(
      const std::array<std::complex<double>, kNumVars>& point) const;

  std::string str() const;

  // Construction from raw term list (sorts, merges, drops zeros).
  static Polynomial from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, const Polynomial& a);
Polynomial operator*(const Polynomial& a, const Rational& c);
Polynomial operator+(const Polynomial& a, const Rational& c);
Polynomial operator+(const Rational& c, const Polynomial& a);
Polynomial operator-(const Polynomial& a, const Rational& c);
Polynomial operator-(const Rational& c, const Polynomial& a);

Polynomial pow(const Polynomial& a, unsigned n);

Polynomial differentiate(const Polynomial& a, Var v);

// Positive rational c such that a/c has coprime integer coefficients.
// Requires !a.is_zero().
Rational content(const Polynomial& a);

// Exact division test: returns the quotient iff n == d * q, d != 0.
std::optional<Polynomial> divides(const Polynomial& d, const Polynomial& n);

// Division with remainder by a single divisor under graded lex. The remainder
// is the unique polynomial none of whose monomials is divisible by d's leading
// monomial; it depends linearly on n.
struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};
DivRem divrem(const Polynomial& n, const Polynomial& d);

// Decides whether n/d is a polynomial in the phase variables with
// coefficients in Q(t, a0..a5), by pseudo-division on phase monomials.
// Returns true iff the pseudo-remainder vanishes.
bool phase_polynomial_quotient_exists(const Polynomial& n, const Polynomial& d);

// Remainder of n modulo d in Q(t,a)[phase]; requires the leading
// phase-coefficient of d to be a rational constant (so the reduction is
// linear in n). Used to assemble exact linear conditions.
Polynomial phase_remainder_linear(const Polynomial& n, const Polynomial& d);

std::string rational_str(const Rational& c);

}  // namespace painleve
