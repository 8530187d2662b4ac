#include "painleve/linear_form.hpp"

#include <sstream>
#include <stdexcept>

namespace painleve {

Polynomial LinearForm::defect() const {
  Polynomial p = Polynomial::constant(-constant);
  for (std::size_t i = 0; i < kNumParams; ++i)
    p = p + coeffs[i] * Polynomial::variable(param_var(i));
  return p;
}

std::string LinearForm::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < kNumParams; ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    Rational c = coeffs[i];
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      if (sgn(c) < 0) c = -c;
    }
    if (c != 1) os << c.get_str() << "*";
    os << name_of(param_var(i));
  }
  if (first) os << "0";
  os << " = " << constant.get_str();
  return os.str();
}

Polynomial constraint_solution(const LinearForm& c, std::size_t eliminated) {
  if (eliminated >= kNumParams || sgn(c.coeffs[eliminated]) == 0)
    throw std::invalid_argument(
        "constraint has zero coefficient on the eliminated parameter");
  const Rational inv = Rational(1) / c.coeffs[eliminated];
  Polynomial r = Polynomial::constant(c.constant * inv);
  for (std::size_t i = 0; i < kNumParams; ++i) {
    if (i == eliminated) continue;
    r = r - (c.coeffs[i] * inv) * Polynomial::variable(param_var(i));
  }
  return r;
}

Polynomial reduce_by_constraint(const Polynomial& a, const LinearForm& c,
                                std::size_t eliminated) {
  const Var ev = param_var(eliminated);
  const std::uint16_t max_e = a.max_exponent(ev);
  if (max_e == 0) return a;
  const Polynomial repl = constraint_solution(c, eliminated);
  std::vector<Polynomial> pows(max_e + 1);
  pows[0] = Polynomial::constant(1);
  for (std::uint16_t k = 1; k <= max_e; ++k) pows[k] = pows[k - 1] * repl;

  Polynomial out = Polynomial::zero();
  const std::size_t ei = index_of(ev);
  for (const auto& t : a.terms()) {
    Monomial rest = t.mono;
    const std::uint16_t e = rest.exps[ei];
    rest.exps[ei] = 0;
    out = out + Polynomial::monomial(rest, t.coeff) * pows[e];
  }
  return out;
}

bool zero_mod_constraint(const Fraction& f, const LinearForm& c,
                         std::size_t eliminated) {
  return reduce_by_constraint(f.num(), c, eliminated).is_zero();
}

}  // namespace painleve
