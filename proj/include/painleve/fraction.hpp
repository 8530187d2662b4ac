// Quotients of polynomials. Equality is decided by cross-multiplication;
// normalization cancels monomial content, rational content and exact
// common factors when cheap, but correctness never relies on full GCD
// reduction.
#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <string>

#include "painleve/polynomial.hpp"

namespace painleve {

class Fraction {
 public:
  Fraction() : num_(Polynomial::zero()), den_(Polynomial::constant(1)) {}
  Fraction(Polynomial num, Polynomial den);
  Fraction(const Polynomial& num) : Fraction(num, Polynomial::constant(1)) {}
  Fraction(const Rational& c) : Fraction(Polynomial::constant(c)) {}
  Fraction(int c) : Fraction(Polynomial::constant(Rational(c))) {}

  static Fraction variable(Var v) { return Fraction(Polynomial::variable(v)); }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  // The polynomial value; requires is_polynomial().
  Polynomial as_polynomial() const;

  bool depends_on(Var v) const {
    return num_.depends_on(v) || den_.depends_on(v);
  }

  // a/b == c/d  iff  a*d - c*b == 0.
  bool equals(const Fraction& o) const;

  std::optional<Rational> eval(const std::array<Rational, kNumVars>& point) const;
  std::optional<std::complex<double>> eval(
      const std::array<std::complex<double>, kNumVars>& point) const;

  std::string str() const;

 private:
  Polynomial num_;
  Polynomial den_;
};

Fraction operator+(const Fraction& a, const Fraction& b);
Fraction operator-(const Fraction& a, const Fraction& b);
Fraction operator-(const Fraction& a);
Fraction operator*(const Fraction& a, const Fraction& b);
Fraction operator/(const Fraction& a, const Fraction& b);

Fraction operator/(const Polynomial& a, const Polynomial& b);

Fraction differentiate(const Fraction& a, Var v);

// Substitution bindings: unbound indeterminates pass through.
using Bindings = std::map<Var, Fraction>;

Fraction substitute(const Polynomial& a, const Bindings& bindings);
Fraction substitute(const Fraction& a, const Bindings& bindings);

}  // namespace painleve
