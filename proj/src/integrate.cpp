#include "painleve/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "painleve/errors.hpp"

namespace painleve {

namespace {

std::array<Complex, kNumVars> full_point(const CState& state, double t,
                                         const CParams& params) {
  std::array<Complex, kNumVars> pt;
  for (std::size_t i = 0; i < kNumPhaseVars; ++i) pt[i] = state[i];
  pt[index_of(Var::t)] = t;
  for (std::size_t i = 0; i < kNumParams; ++i)
    pt[kNumPhaseVars + 1 + i] = params[i];
  return pt;
}

Complex eval_fraction(const Fraction& f,
                      const std::array<Complex, kNumVars>& pt) {
  const Complex den = f.den().eval(pt);
  return f.num().eval(pt) / den;
}

}  // namespace

CompiledField::CompiledField(const HamiltonSystem& sys, const CParams& params)
    : params_(params) {
  const VectorField field = hamiltonian_vector_field(sys);
  components_ = field.components;
}

CState CompiledField::eval(const CState& state, double t) const {
  const auto pt = full_point(state, t, params_);
  CState out;
  for (std::size_t i = 0; i < kNumPhaseVars; ++i)
    out[i] = components_[i].is_zero() ? Complex(0.0)
                                      : eval_fraction(components_[i], pt);
  return out;
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double kC[7] = {0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
constexpr double kB5[7] = {35.0 / 384,     0.0,  500.0 / 1113, 125.0 / 192,
                           -2187.0 / 6784, 11.0 / 84, 0.0};
constexpr double kB4[7] = {5179.0 / 57600,  0.0,           7571.0 / 16695,
                           393.0 / 640,     -92097.0 / 339200,
                           187.0 / 2100,    1.0 / 40};

struct StepResult {
  CState y;
  double error;  // scaled error norm
};

StepResult dopri_step(const CompiledField& field, const CState& y, double t,
                      double h, double tol) {
  std::array<CState, 7> k;
  k[0] = field.eval(y, t);
  for (int stage = 1; stage < 7; ++stage) {
    CState ys;
    for (std::size_t i = 0; i < kNumPhaseVars; ++i) {
      Complex acc = y[i];
      for (int s = 0; s < stage; ++s)
        acc += h * kA[stage][s] * k[s][i];
      ys[i] = acc;
    }
    k[stage] = field.eval(ys, t + kC[stage] * h);
  }
  StepResult r;
  r.error = 0.0;
  for (std::size_t i = 0; i < kNumPhaseVars; ++i) {
    Complex y5 = y[i], y4 = y[i];
    for (int s = 0; s < 7; ++s) {
      y5 += h * kB5[s] * k[s][i];
      y4 += h * kB4[s] * k[s][i];
    }
    r.y[i] = y5;
    const double scale = tol + tol * std::max(std::abs(y[i]), std::abs(y5));
    r.error = std::max(r.error, std::abs(y5 - y4) / scale);
  }
  return r;
}

}  // namespace

Trajectory integrate(const HamiltonSystem& sys, const CParams& params,
                     const CState& initial, double t0, double t1, double tol,
                     std::size_t samples) {
  if (t0 == 0.0 || t1 == 0.0 || (t0 < 0) != (t1 < 0))
    throw std::invalid_argument("integration window must avoid t = 0");
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  if (samples < 2) throw std::invalid_argument("need at least two samples");

  const CompiledField field(sys, params);
  Trajectory traj;
  traj.params = params;
  traj.tol = tol;
  traj.times.reserve(samples);
  traj.states.reserve(samples);

  const double span = t1 - t0;
  CState y = initial;
  double t = t0;
  double h = span / static_cast<double>(samples - 1);
  traj.times.push_back(t);
  traj.states.push_back(y);

  for (std::size_t s = 1; s < samples; ++s) {
    const double target =
        t0 + span * static_cast<double>(s) / static_cast<double>(samples - 1);
    while ((span > 0) ? t < target : t > target) {
      double step = h;
      if ((span > 0) ? (t + step > target) : (t + step < target))
        step = target - t;
      const StepResult r = dopri_step(field, y, t, step, tol);
      if (r.error <= 1.0) {
        t += step;
        y = r.y;
        const double grow =
            r.error > 0 ? 0.9 * std::pow(r.error, -0.2) : 5.0;
        h = step * std::clamp(grow, 0.2, 5.0);
      } else {
        h = step * std::clamp(0.9 * std::pow(r.error, -0.2), 0.1, 0.9);
      }
      if (std::abs(h) < 1e-14 * std::abs(t))
        throw SingularityEncountered(t);
    }
    t = target;  // clamp accumulated rounding
    traj.times.push_back(t);
    traj.states.push_back(y);
  }
  return traj;
}

namespace {

// Five-point centered stencil on the uniform grid; O(h^4) truncation.
Complex stencil_derivative(const std::vector<CState>& y,
                           const std::vector<double>& t, std::size_t i,
                           std::size_t c) {
  const double h = (t[i + 1] - t[i - 1]) / 2.0;
  return (-y[i + 2][c] + 8.0 * y[i + 1][c] - 8.0 * y[i - 1][c] +
          y[i - 2][c]) /
         (12.0 * h);
}

}  // namespace

double self_consistency_residual(const Trajectory& traj,
                                 const HamiltonSystem& sys) {
  const CompiledField field(sys, traj.params);
  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < traj.size(); ++i) {
    const CState f = field.eval(traj.states[i], traj.times[i]);
    for (std::size_t c = 0; c < kNumPhaseVars; ++c) {
      const Complex fd =
          stencil_derivative(traj.states, traj.times, i, c);
      worst = std::max(worst, std::abs(fd - f[c]));
    }
  }
  return worst;
}

double residual_under_map(const HamiltonSystem& sys_src,
                          const HamiltonSystem& sys_tgt, const ExtendedMap& f,
                          const Trajectory& traj, double floor) {
  (void)sys_src;
  // Map parameters once (affine action with real rational coefficients).
  CParams mapped_params;
  for (std::size_t i = 0; i < kNumParams; ++i) {
    Complex acc(f.params.offset[i].get_d(), 0.0);
    for (std::size_t j = 0; j < kNumParams; ++j)
      acc += f.params.matrix[i][j].get_d() * traj.params[j];
    mapped_params[i] = acc;
  }
  const CompiledField tgt_field(sys_tgt, mapped_params);

  std::vector<CState> mapped_states(traj.size());
  std::vector<double> mapped_times(traj.size());
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto pt = full_point(traj.states[i], traj.times[i], traj.params);
    for (std::size_t c = 0; c < kNumPhaseVars; ++c) {
      const Complex den = f.phase[c].den().eval(pt);
      if (std::abs(den) < floor)
        throw PoleProximity("denominator magnitude " +
                            std::to_string(std::abs(den)) + " below floor in " +
                            f.name);
      mapped_states[i][c] = f.phase[c].num().eval(pt) / den;
    }
    mapped_times[i] = eval_fraction(f.time, pt).real();
  }

  double worst = 0.0;
  for (std::size_t i = 2; i + 2 < traj.size(); ++i) {
    const CState ftgt = tgt_field.eval(mapped_states[i], mapped_times[i]);
    for (std::size_t c = 0; c < kNumPhaseVars; ++c) {
      const Complex fd = stencil_derivative(mapped_states, mapped_times, i, c);
      worst = std::max(worst, std::abs(fd - ftgt[c]));
    }
  }
  return worst;
}

double first_integral_drift(const Trajectory& traj) {
  const Polynomial& I = h1_first_integral();
  Complex start;
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const auto pt = full_point(traj.states[i], traj.times[i], traj.params);
    const Complex v = I.eval(pt);
    if (i == 0)
      start = v;
    else
      worst = std::max(worst, std::abs(v - start));
  }
  return worst;
}

CState seeded_initial_state(std::uint64_t seed) {
  auto next = [state = seed]() mutable {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  auto unit = [&]() {
    return static_cast<double>(next()) / 1.8446744073709552e19 - 0.5;
  };
  CState s;
  for (auto& c : s) c = Complex(1.0 + unit(), unit());
  return s;
}

CParams to_complex(const std::array<Rational, kNumParams>& params) {
  CParams out;
  for (std::size_t i = 0; i < kNumParams; ++i)
    out[i] = Complex(params[i].get_d(), 0.0);
  return out;
}

void write_csv(const Trajectory& traj, std::ostream& os) {
  os << "t";
  for (std::size_t c = 0; c < kNumPhaseVars; ++c)
    os << ",re_" << name_of(var_at(c)) << ",im_" << name_of(var_at(c));
  os << "\n";
  os.precision(17);
  for (std::size_t i = 0; i < traj.size(); ++i) {
    os << traj.times[i];
    for (std::size_t c = 0; c < kNumPhaseVars; ++c)
      os << "," << traj.states[i][c].real() << ","
         << traj.states[i][c].imag();
    os << "\n";
  }
}

}  // namespace painleve
