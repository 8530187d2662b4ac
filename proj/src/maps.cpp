#include "painleve/maps.hpp"

#include <stdexcept>

#include "painleve/errors.hpp"

namespace painleve {

const char* to_string(Group g) {
  switch (g) {
    case Group::D5: return "d5";
    case Group::B5a: return "b5a";
    case Group::B5b: return "b5b";
    case Group::D62: return "d62";
    case Group::A1: return "a1";
  }
  return "?";
}

Group group_from_string(const std::string& name) {
  for (Group g : all_groups())
    if (name == to_string(g)) return g;
  throw UnknownGroup(name);
}

std::vector<Group> all_groups() {
  return {Group::D5, Group::B5a, Group::B5b, Group::D62, Group::A1};
}

SystemId system_of(Group g) {
  switch (g) {
    case Group::D5: return SystemId::D5;
    case Group::B5a: return SystemId::B5a;
    case Group::B5b: return SystemId::B5b;
    case Group::D62: return SystemId::D62;
    case Group::A1: return SystemId::HIII_D7;
  }
  throw UnknownGroup("?");
}

ParamMap ParamMap::identity() {
  ParamMap m;
  for (std::size_t i = 0; i < kNumParams; ++i) m.matrix[i][i] = 1;
  return m;
}

std::array<Rational, kNumParams> ParamMap::apply(
    const std::array<Rational, kNumParams>& a) const {
  std::array<Rational, kNumParams> r;
  for (std::size_t i = 0; i < kNumParams; ++i) {
    r[i] = offset[i];
    for (std::size_t j = 0; j < kNumParams; ++j) r[i] += matrix[i][j] * a[j];
  }
  return r;
}

LinearForm ParamMap::pullback(const LinearForm& form) const {
  LinearForm r;
  for (std::size_t j = 0; j < kNumParams; ++j) {
    r.coeffs[j] = 0;
    for (std::size_t i = 0; i < kNumParams; ++i)
      r.coeffs[j] += form.coeffs[i] * matrix[i][j];
  }
  Rational shift(0);
  for (std::size_t i = 0; i < kNumParams; ++i)
    shift += form.coeffs[i] * offset[i];
  r.constant = form.constant - shift;
  return r;
}

Polynomial ParamMap::image_polynomial(std::size_t i) const {
  Polynomial p = Polynomial::constant(offset[i]);
  for (std::size_t j = 0; j < kNumParams; ++j)
    if (sgn(matrix[i][j]) != 0)
      p = p + matrix[i][j] * Polynomial::variable(param_var(j));
  return p;
}

ParamMap ParamMap::after(const ParamMap& first) const {
  ParamMap r;
  for (std::size_t i = 0; i < kNumParams; ++i) {
    for (std::size_t j = 0; j < kNumParams; ++j) {
      r.matrix[i][j] = 0;
      for (std::size_t k = 0; k < kNumParams; ++k)
        r.matrix[i][j] += matrix[i][k] * first.matrix[k][j];
    }
    r.offset[i] = offset[i];
    for (std::size_t k = 0; k < kNumParams; ++k)
      r.offset[i] += matrix[i][k] * first.offset[k];
  }
  return r;
}

ParamMap ParamMap::inverse() const {
  // Gauss-Jordan over exact rationals on [matrix | I].
  auto a = matrix;
  auto inv = identity().matrix;
  for (std::size_t col = 0; col < kNumParams; ++col) {
    std::size_t piv = col;
    while (piv < kNumParams && sgn(a[piv][col]) == 0) ++piv;
    if (piv == kNumParams)
      throw std::invalid_argument("ParamMap::inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const Rational d = a[col][col];
    for (std::size_t j = 0; j < kNumParams; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t row = 0; row < kNumParams; ++row) {
      if (row == col || sgn(a[row][col]) == 0) continue;
      const Rational f = a[row][col];
      for (std::size_t j = 0; j < kNumParams; ++j) {
        a[row][j] -= f * a[col][j];
        inv[row][j] -= f * inv[col][j];
      }
    }
  }
  ParamMap r;
  r.matrix = inv;
  // offset' = -M^{-1} b
  for (std::size_t i = 0; i < kNumParams; ++i) {
    r.offset[i] = 0;
    for (std::size_t j = 0; j < kNumParams; ++j)
      r.offset[i] -= inv[i][j] * offset[j];
  }
  return r;
}

bool ParamMap::is_identity() const { return *this == identity(); }

ExtendedMap ExtendedMap::identity() {
  ExtendedMap m;
  m.name = "id";
  for (std::size_t i = 0; i < kNumPhaseVars; ++i)
    m.phase[i] = Fraction::variable(var_at(i));
  m.time = Fraction::variable(Var::t);
  m.params = ParamMap::identity();
  return m;
}

bool ExtendedMap::is_identity() const {
  return map_equal(*this, identity());
}

int ExtendedMap::time_sign() const {
  const Fraction t = Fraction::variable(Var::t);
  if (time.equals(t)) return +1;
  if (time.equals(-t)) return -1;
  throw std::logic_error("map time component is not +t or -t: " + time.str());
}

Bindings map_bindings(const ExtendedMap& f) {
  Bindings b;
  for (std::size_t i = 0; i < kNumPhaseVars; ++i) b[var_at(i)] = f.phase[i];
  b[Var::t] = f.time;
  for (std::size_t i = 0; i < kNumParams; ++i)
    b[param_var(i)] = Fraction(f.params.image_polynomial(i));
  return b;
}

ExtendedMap compose(const ExtendedMap& f, const ExtendedMap& g) {
  const Bindings bg = map_bindings(g);
  ExtendedMap r;
  r.name = f.name + "*" + g.name;
  for (std::size_t i = 0; i < kNumPhaseVars; ++i)
    r.phase[i] = substitute(f.phase[i], bg);
  r.time = substitute(f.time, bg);
  r.params = f.params.after(g.params);
  if (f.inverse && g.inverse) {
    auto inv = std::make_shared<ExtendedMap>(compose(*g.inverse, *f.inverse));
    r.inverse = inv;
  }
  return r;
}

ExtendedMap compose_word(const std::vector<const ExtendedMap*>& word) {
  if (word.empty()) return ExtendedMap::identity();
  ExtendedMap r = *word.front();
  for (std::size_t i = 1; i < word.size(); ++i) r = compose(r, *word[i]);
  return r;
}

bool map_equal(const ExtendedMap& f, const ExtendedMap& g,
               const LinearForm* constraint, std::size_t eliminated) {
  if (!(f.params == g.params)) return false;
  if (!f.time.equals(g.time)) return false;
  for (std::size_t i = 0; i < kNumPhaseVars; ++i) {
    Fraction diff = f.phase[i] - g.phase[i];
    if (constraint) {
      if (!zero_mod_constraint(diff, *constraint, eliminated)) return false;
    } else if (!diff.is_zero()) {
      return false;
    }
  }
  return true;
}

std::optional<int> order_of(const ExtendedMap& f, int max_order) {
  // The parameter action and the time sign bound the order from below and
  // are cheap to iterate; full symbolic powers are only formed at their
  // common multiples. Translation-type maps are rejected without any phase
  // composition.
  int cheap_order = 0;
  {
    ParamMap pp = f.params;
    const int tsign = f.time_sign();
    int tcur = tsign;
    for (int n = 1; n <= max_order; ++n) {
      if (pp.is_identity() && tcur > 0) {
        cheap_order = n;
        break;
      }
      pp = f.params.after(pp);
      tcur *= tsign;
    }
  }
  if (cheap_order == 0) return std::nullopt;
  ExtendedMap power = f;
  for (int n = 1; n <= max_order; ++n) {
    if (n % cheap_order == 0 && power.is_identity()) return n;
    if (n < max_order) power = compose(f, power);
  }
  return std::nullopt;
}

std::optional<std::array<Rational, kNumVars>> apply_map(
    const ExtendedMap& f, const std::array<Rational, kNumVars>& point) {
  std::array<Rational, kNumVars> out;
  for (std::size_t i = 0; i < kNumPhaseVars; ++i) {
    auto v = f.phase[i].eval(point);
    if (!v) return std::nullopt;
    out[i] = *v;
  }
  auto tv = f.time.eval(point);
  if (!tv) return std::nullopt;
  out[index_of(Var::t)] = *tv;
  std::array<Rational, kNumParams> a;
  for (std::size_t i = 0; i < kNumParams; ++i)
    a[i] = point[kNumPhaseVars + 1 + i];
  auto mapped = f.params.apply(a);
  for (std::size_t i = 0; i < kNumParams; ++i)
    out[kNumPhaseVars + 1 + i] = mapped[i];
  return out;
}

ExtendedMap Chart::as_map() const {
  ExtendedMap m;
  m.name = name;
  m.phase = forward;
  m.time = Fraction::variable(Var::t);
  m.params = ParamMap::identity();
  return m;
}

ExtendedMap Chart::back_map() const {
  ExtendedMap m;
  m.name = name + "^-1";
  m.phase = backward;
  m.time = Fraction::variable(Var::t);
  m.params = ParamMap::identity();
  return m;
}

Chart compose_charts(const Chart& outer, const Chart& inner,
                     const std::string& name) {
  Chart c;
  c.name = name;
  const ExtendedMap fwd = compose(outer.as_map(), inner.as_map());
  const ExtendedMap bwd = compose(inner.back_map(), outer.back_map());
  c.forward = fwd.phase;
  c.backward = bwd.phase;
  return c;
}

}  // namespace painleve
