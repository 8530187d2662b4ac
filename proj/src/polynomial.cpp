#include "painleve/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "painleve/budget.hpp"
#include "painleve/errors.hpp"

namespace painleve {

bool grlex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
  return false;
}

bool phase_grlex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.phase_degree(), db = b.phase_degree();
  if (da != db) return da < db;
  for (std::size_t i = 0; i < kNumPhaseVars; ++i)
    if (a.exps[i] != b.exps[i]) return a.exps[i] < b.exps[i];
  return false;
}

bool phase_equal(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kNumPhaseVars; ++i)
    if (a.exps[i] != b.exps[i]) return false;
  return true;
}

bool monomial_divisible(const Monomial& n, const Monomial& d) {
  for (std::size_t i = 0; i < kNumVars; ++i)
    if (n.exps[i] < d.exps[i]) return false;
  return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i) {
    const std::uint32_t s =
        std::uint32_t(a.exps[i]) + std::uint32_t(b.exps[i]);
    if (s > 0xffffu) throw BudgetExceeded("exponent overflow");
    r.exps[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

Monomial monomial_div(const Monomial& n, const Monomial& d) {
  Monomial r;
  for (std::size_t i = 0; i < kNumVars; ++i)
    r.exps[i] = static_cast<std::uint16_t>(n.exps[i] - d.exps[i]);
  return r;
}

namespace {

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto e : m.exps) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

bool term_grlex_greater(const Term& a, const Term& b) {
  return grlex_less(b.mono, a.mono);
}

}  // namespace

Polynomial Polynomial::constant(const Rational& c) {
  Polynomial r;
  if (sgn(c) != 0) {
    Rational cc = c;
    cc.canonicalize();
    r.terms_.push_back({Monomial{}, std::move(cc)});
  }
  return r;
}

Polynomial Polynomial::variable(Var v) {
  Monomial m;
  m.exps[index_of(v)] = 1;
  return monomial(m, 1);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial r;
  if (sgn(c) != 0) {
    Rational cc = c;
    cc.canonicalize();
    r.terms_.push_back({m, std::move(cc)});
  }
  return r;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) t.coeff.canonicalize();
  std::sort(terms.begin(), terms.end(), term_grlex_greater);
  Polynomial r;
  r.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff += t.coeff;
      if (sgn(r.terms_.back().coeff) == 0) r.terms_.pop_back();
    } else if (sgn(t.coeff) != 0) {
      r.terms_.push_back(std::move(t));
    }
  }
  budget_check_terms(r.terms_.size());
  return r;
}

bool Polynomial::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_[0].mono.degree() == 0);
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_[0].coeff;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::phase_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.phase_degree());
  return d;
}

std::uint16_t Polynomial::max_exponent(Var v) const {
  std::uint16_t d = 0;
  const std::size_t i = index_of(v);
  for (const auto& t : terms_) d = std::max(d, t.mono.exps[i]);
  return d;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    if (ta[i].mono == tb[j].mono) {
      Rational c = ta[i].coeff + tb[j].coeff;
      if (sgn(c) != 0) out.push_back({ta[i].mono, std::move(c)});
      ++i;
      ++j;
    } else if (grlex_less(tb[j].mono, ta[i].mono)) {
      out.push_back(ta[i]);
      ++i;
    } else {
      out.push_back(tb[j]);
      ++j;
    }
  }
  for (; i < ta.size(); ++i) out.push_back(ta[i]);
  for (; j < tb.size(); ++j) out.push_back(tb[j]);
  budget_check_terms(out.size());
  Polynomial r;
  r = Polynomial::from_terms(std::move(out));  // already sorted; cheap merge
  return r;
}

Polynomial operator-(const Polynomial& a) {
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff = -t.coeff;
  return Polynomial::from_terms(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial::zero();
  // Multiply the smaller into the larger.
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    const Term& s = small.terms()[0];
    std::vector<Term> out;
    out.reserve(large.size());
    for (const auto& t : large.terms())
      out.push_back({monomial_mul(t.mono, s.mono), t.coeff * s.coeff});
    return Polynomial::from_terms(std::move(out));
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(large.size() * 2);
  std::size_t ops = 0;
  for (const auto& ts : small.terms()) {
    for (const auto& tl : large.terms()) {
      Monomial m = monomial_mul(ts.mono, tl.mono);
      auto [it, inserted] = acc.try_emplace(m, 0);
      it->second += ts.coeff * tl.coeff;
      if ((++ops & 0x3fff) == 0) budget_check_terms(acc.size());
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.push_back({m, std::move(c)});
  return Polynomial::from_terms(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  if (sgn(c) == 0) return Polynomial::zero();
  std::vector<Term> out = a.terms();
  for (auto& t : out) t.coeff *= c;
  return Polynomial::from_terms(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Rational& c) { return c * a; }

Polynomial operator+(const Polynomial& a, const Rational& c) {
  return a + Polynomial::constant(c);
}
Polynomial operator+(const Rational& c, const Polynomial& a) {
  return a + Polynomial::constant(c);
}
Polynomial operator-(const Polynomial& a, const Rational& c) {
  return a - Polynomial::constant(c);
}
Polynomial operator-(const Rational& c, const Polynomial& a) {
  return Polynomial::constant(c) - a;
}

Polynomial pow(const Polynomial& a, unsigned n) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = a;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial differentiate(const Polynomial& a, Var v) {
  const std::size_t vi = index_of(v);
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    const std::uint16_t e = t.mono.exps[vi];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.exps[vi] = static_cast<std::uint16_t>(e - 1);
    out.push_back({m, t.coeff * Rational(e)});
  }
  return Polynomial::from_terms(std::move(out));
}

Rational Polynomial::eval(const std::array<Rational, kNumVars>& point) const {
  Rational acc(0);
  for (const auto& t : terms_) {
    Rational term = t.coeff;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      for (std::uint16_t k = 0; k < t.mono.exps[i]; ++k) term *= point[i];
    }
    acc += term;
  }
  return acc;
}

std::complex<double> Polynomial::eval(
    const std::array<std::complex<double>, kNumVars>& point) const {
  std::complex<double> acc = 0.0;
  for (const auto& t : terms_) {
    std::complex<double> term(t.coeff.get_d(), 0.0);
    for (std::size_t i = 0; i < kNumVars; ++i) {
      std::uint16_t e = t.mono.exps[i];
      if (e == 0) continue;
      std::complex<double> b = point[i];
      while (true) {
        if (e & 1u) term *= b;
        e >>= 1u;
        if (e == 0) break;
        b *= b;
      }
    }
    acc += term;
  }
  return acc;
}

Rational content(const Polynomial& a) {
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& t : a.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.coeff.get_den().get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

std::optional<Polynomial> divides(const Polynomial& d, const Polynomial& n) {
  if (d.is_zero()) throw ZeroDenominator("divides: zero divisor");
  if (n.is_zero()) return Polynomial::zero();
  Polynomial r = n;
  std::vector<Term> qterms;
  const Term& lead_d = d.leading();
  while (!r.is_zero()) {
    const Term& lead_r = r.leading();
    if (!monomial_divisible(lead_r.mono, lead_d.mono)) return std::nullopt;
    Term qt{monomial_div(lead_r.mono, lead_d.mono),
            lead_r.coeff / lead_d.coeff};
    r = r - Polynomial::monomial(qt.mono, qt.coeff) * d;
    qterms.push_back(std::move(qt));
  }
  return Polynomial::from_terms(std::move(qterms));
}

DivRem divrem(const Polynomial& n, const Polynomial& d) {
  if (d.is_zero()) throw ZeroDenominator("divrem: zero divisor");
  Polynomial r = n;
  std::vector<Term> qterms;
  std::vector<Term> rem;
  const Term& lead_d = d.leading();
  while (!r.is_zero()) {
    const Term& lead_r = r.leading();
    if (monomial_divisible(lead_r.mono, lead_d.mono)) {
      Term qt{monomial_div(lead_r.mono, lead_d.mono),
              lead_r.coeff / lead_d.coeff};
      r = r - Polynomial::monomial(qt.mono, qt.coeff) * d;
      qterms.push_back(std::move(qt));
    } else {
      rem.push_back(lead_r);
      r = r - Polynomial::monomial(lead_r.mono, lead_r.coeff);
    }
    budget_check_terms(rem.size());
  }
  return {Polynomial::from_terms(std::move(qterms)),
          Polynomial::from_terms(std::move(rem))};
}

namespace {

// Collects the terms of p sharing p's phase-leading phase monomial, as a
// coefficient polynomial in (t, a) times that phase monomial.
Monomial phase_leading_monomial(const Polynomial& p) {
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (phase_grlex_less(best->mono, t.mono)) best = &t;
  Monomial m = best->mono;
  for (std::size_t i = kNumPhaseVars; i < kNumVars; ++i) m.exps[i] = 0;
  return m;
}

// Sum of terms of p whose phase part equals m (with that phase part removed).
Polynomial phase_coefficient(const Polynomial& p, const Monomial& m) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    if (phase_equal(t.mono, m)) {
      Monomial rest = t.mono;
      for (std::size_t i = 0; i < kNumPhaseVars; ++i) rest.exps[i] = 0;
      out.push_back({rest, t.coeff});
    }
  }
  return Polynomial::from_terms(std::move(out));
}

Polynomial attach_phase(const Polynomial& coeff, const Monomial& phase) {
  std::vector<Term> out;
  out.reserve(coeff.size());
  for (const auto& t : coeff.terms())
    out.push_back({monomial_mul(t.mono, phase), t.coeff});
  return Polynomial::from_terms(std::move(out));
}

bool phase_monomial_divisible(const Monomial& n, const Monomial& d) {
  for (std::size_t i = 0; i < kNumPhaseVars; ++i)
    if (n.exps[i] < d.exps[i]) return false;
  return true;
}

Monomial phase_monomial_div(const Monomial& n, const Monomial& d) {
  Monomial r{};
  for (std::size_t i = 0; i < kNumPhaseVars; ++i)
    r.exps[i] = static_cast<std::uint16_t>(n.exps[i] - d.exps[i]);
  return r;
}

}  // namespace

bool phase_polynomial_quotient_exists(const Polynomial& n,
                                      const Polynomial& d) {
  if (d.is_zero()) throw ZeroDenominator("phase division: zero divisor");
  if (n.is_zero()) return true;
  const Monomial dlead = phase_leading_monomial(d);
  const Polynomial dcoeff = phase_coefficient(d, dlead);
  Polynomial r = n;
  while (!r.is_zero()) {
    const Monomial rlead = phase_leading_monomial(r);
    if (!phase_monomial_divisible(rlead, dlead)) return false;
    const Polynomial rcoeff = phase_coefficient(r, rlead);
    const Monomial shift = phase_monomial_div(rlead, dlead);
    // Pseudo-step: dcoeff * r - rcoeff * shift * d kills the leading group.
    r = dcoeff * r - attach_phase(rcoeff, shift) * d;
    budget_check_terms(r.size());
  }
  return true;
}

Polynomial phase_remainder_linear(const Polynomial& n, const Polynomial& d) {
  if (d.is_zero()) throw ZeroDenominator("phase division: zero divisor");
  const Monomial dlead = phase_leading_monomial(d);
  const Polynomial dcoeff = phase_coefficient(d, dlead);
  if (!dcoeff.is_constant())
    throw std::invalid_argument(
        "phase_remainder_linear: divisor leading phase coefficient must be "
        "constant");
  const Rational dc = dcoeff.constant_value();
  Polynomial r = n;
  std::vector<Term> rem;
  while (!r.is_zero()) {
    const Monomial rlead = phase_leading_monomial(r);
    if (phase_monomial_divisible(rlead, dlead)) {
      const Polynomial rcoeff = phase_coefficient(r, rlead);
      const Monomial shift = phase_monomial_div(rlead, dlead);
      r = r - attach_phase((Rational(1) / dc) * rcoeff, shift) * d;
    } else {
      // Move the whole leading phase group to the remainder.
      const Polynomial rcoeff = phase_coefficient(r, rlead);
      Polynomial group = attach_phase(rcoeff, rlead);
      for (const auto& t : group.terms()) rem.push_back(t);
      r = r - group;
    }
    budget_check_terms(rem.size() + r.size());
  }
  return Polynomial::from_terms(std::move(rem));
}

std::string rational_str(const Rational& c) {
  return c.get_str();
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      if (sgn(c) < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    const bool has_vars = t.mono.degree() > 0;
    if (!has_vars || c != 1) {
      os << c.get_str();
      if (has_vars) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < kNumVars; ++i) {
      const auto e = t.mono.exps[i];
      if (e == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << kVarNames[i];
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace painleve
