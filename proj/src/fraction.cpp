#include "painleve/fraction.hpp"

#include <algorithm>

#include "painleve/budget.hpp"
#include "painleve/errors.hpp"

namespace painleve {

namespace {

// Componentwise minimum exponent vector over all terms.
Monomial min_exponents(const Polynomial& p) {
  Monomial m = p.terms().front().mono;
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < kNumVars; ++i)
      m.exps[i] = std::min(m.exps[i], t.mono.exps[i]);
  return m;
}

Polynomial shift_down(const Polynomial& p, const Monomial& m) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({monomial_div(t.mono, m), t.coeff});
  return Polynomial::from_terms(std::move(out));
}

}  // namespace

Fraction::Fraction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw ZeroDenominator("fraction with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  // Cancel common monomial content.
  Monomial mn = min_exponents(num_);
  Monomial md = min_exponents(den_);
  Monomial common{};
  bool any = false;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    common.exps[i] = std::min(mn.exps[i], md.exps[i]);
    any = any || common.exps[i] > 0;
  }
  if (any) {
    num_ = shift_down(num_, common);
    den_ = shift_down(den_, common);
  }
  // Cancel exact polynomial factors when one side divides the other.
  if (!den_.is_constant()) {
    if (auto q = divides(den_, num_)) {
      num_ = std::move(*q);
      den_ = Polynomial::constant(1);
    } else if (auto q2 = divides(num_, den_)) {
      // num/den = 1/(den/num); keep the numerator's content as a scalar.
      den_ = std::move(*q2);
      num_ = Polynomial::constant(1);
    }
  }
  // Scale so the denominator is primitive with positive leading coefficient.
  Rational c = content(den_);
  if (sgn(den_.leading().coeff) < 0) c = -c;
  if (c != 1) {
    const Rational inv = Rational(1) / c;
    num_ = inv * num_;
    den_ = inv * den_;
  }
}

bool Fraction::is_polynomial() const {
  return den_.is_constant() || divides(den_, num_).has_value();
}

Polynomial Fraction::as_polynomial() const {
  if (den_.is_constant())
    return (Rational(1) / den_.constant_value()) * num_;
  auto q = divides(den_, num_);
  if (!q) throw std::logic_error("as_polynomial: not a polynomial");
  return *q;
}

bool Fraction::equals(const Fraction& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

namespace {

// Common denominator preferring divisibility (keeps powers of a shared
// irreducible from piling up term by term).
Fraction add_impl(const Fraction& a, const Fraction& b, bool subtract) {
  Polynomial bn = subtract ? -b.num() : b.num();
  if (auto q = divides(b.den(), a.den()))
    return Fraction(a.num() + bn * *q, a.den());
  if (auto q = divides(a.den(), b.den()))
    return Fraction(a.num() * *q + bn, b.den());
  return Fraction(a.num() * b.den() + bn * a.den(), a.den() * b.den());
}

}  // namespace

Fraction operator+(const Fraction& a, const Fraction& b) {
  return add_impl(a, b, false);
}

Fraction operator-(const Fraction& a, const Fraction& b) {
  return add_impl(a, b, true);
}

Fraction operator-(const Fraction& a) { return Fraction(-a.num(), a.den()); }

Fraction operator*(const Fraction& a, const Fraction& b) {
  // Cross-cancel first to keep products small.
  Fraction x(a.num(), b.den());
  Fraction y(b.num(), a.den());
  return Fraction(x.num() * y.num(), x.den() * y.den());
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.num().is_zero()) throw ZeroDenominator("division by zero fraction");
  return a * Fraction(b.den(), b.num());
}

Fraction operator/(const Polynomial& a, const Polynomial& b) {
  return Fraction(a, b);
}

Fraction differentiate(const Fraction& a, Var v) {
  if (a.den().is_constant())
    return Fraction(differentiate(a.num(), v), a.den());
  // (n/d)' = (n'd - nd') / d^2
  Polynomial n1 = differentiate(a.num(), v);
  Polynomial d1 = differentiate(a.den(), v);
  return Fraction(n1 * a.den() - a.num() * d1, a.den() * a.den());
}

namespace {

// Substitutes bindings into a polynomial using per-variable power tables:
// for each bound v with value n_v/d_v and max exponent E_v, a term picks up
// n_v^e * d_v^(E_v - e); the common denominator is prod d_v^E_v.
Fraction substitute_poly(const Polynomial& a, const Bindings& bindings) {
  if (a.is_zero()) return Fraction();
  struct BoundVar {
    std::size_t index;
    std::uint16_t max_exp;
    std::vector<Polynomial> num_pows;  // 0..max_exp
    std::vector<Polynomial> den_pows;  // 0..max_exp
  };
  std::vector<BoundVar> bound;
  for (const auto& [v, f] : bindings) {
    const std::uint16_t e = a.max_exponent(v);
    if (e == 0) continue;
    BoundVar bv;
    bv.index = index_of(v);
    bv.max_exp = e;
    bv.num_pows.resize(e + 1);
    bv.den_pows.resize(e + 1);
    bv.num_pows[0] = Polynomial::constant(1);
    bv.den_pows[0] = Polynomial::constant(1);
    for (std::uint16_t k = 1; k <= e; ++k) {
      bv.num_pows[k] = bv.num_pows[k - 1] * f.num();
      bv.den_pows[k] = bv.den_pows[k - 1] * f.den();
    }
    bound.push_back(std::move(bv));
  }
  if (bound.empty()) return Fraction(a);

  Polynomial num = Polynomial::zero();
  for (const auto& t : a.terms()) {
    Monomial rest = t.mono;
    Polynomial factor = Polynomial::constant(t.coeff);
    for (const auto& bv : bound) {
      const std::uint16_t e = rest.exps[bv.index];
      rest.exps[bv.index] = 0;
      factor = factor * bv.num_pows[e];
      factor = factor * bv.den_pows[bv.max_exp - e];
    }
    num = num + factor * Polynomial::monomial(rest, 1);
  }
  Polynomial den = Polynomial::constant(1);
  for (const auto& bv : bound) den = den * bv.den_pows[bv.max_exp];
  return Fraction(std::move(num), std::move(den));
}

}  // namespace

Fraction substitute(const Polynomial& a, const Bindings& bindings) {
  return substitute_poly(a, bindings);
}

Fraction substitute(const Fraction& a, const Bindings& bindings) {
  Fraction n = substitute_poly(a.num(), bindings);
  Fraction d = substitute_poly(a.den(), bindings);
  if (d.num().is_zero())
    throw SubstitutionDenominatorZero(
        "substitution makes a denominator identically zero");
  return n / d;
}

std::optional<Rational> Fraction::eval(
    const std::array<Rational, kNumVars>& point) const {
  Rational d = den_.eval(point);
  if (sgn(d) == 0) return std::nullopt;
  return num_.eval(point) / d;
}

std::optional<std::complex<double>> Fraction::eval(
    const std::array<std::complex<double>, kNumVars>& point) const {
  std::complex<double> d = den_.eval(point);
  if (d == std::complex<double>(0.0, 0.0)) return std::nullopt;
  return num_.eval(point) / d;
}

std::string Fraction::str() const {
  if (den_.is_constant() && den_.constant_value() == 1) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace painleve
