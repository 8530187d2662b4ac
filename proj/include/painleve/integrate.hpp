// Floating-point cross-checks: adaptive embedded Runge-Kutta integration of
// the catalog systems over complex phase space (time on a real ray), and
// trajectory-level validation of the transformations.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "painleve/maps.hpp"
#include "painleve/systems.hpp"

namespace painleve {

using Complex = std::complex<double>;
using CState = std::array<Complex, kNumPhaseVars>;
using CParams = std::array<Complex, kNumParams>;

struct Trajectory {
  CParams params;
  std::vector<double> times;   // strictly monotone, bounded away from 0
  std::vector<CState> states;
  double tol = 0.0;

  std::size_t size() const { return times.size(); }
};

// Numeric closure over the exact symbolic vector field.
class CompiledField {
 public:
  CompiledField(const HamiltonSystem& sys, const CParams& params);
  CState eval(const CState& state, double t) const;

 private:
  std::array<Fraction, kNumPhaseVars> components_;
  CParams params_;
};

// Dormand-Prince 5(4) with adaptive steps; the trajectory is sampled on a
// uniform grid of `samples` points including both endpoints. t0 and t1 must
// share a sign. Throws SingularityEncountered on step-size underflow.
Trajectory integrate(const HamiltonSystem& sys, const CParams& params,
                     const CState& initial, double t0, double t1, double tol,
                     std::size_t samples = 2001);

// Max-norm deviation of the central-difference derivative from the field at
// the interior samples.
double self_consistency_residual(const Trajectory& traj,
                                 const HamiltonSystem& sys);

// Pushes every sample through f, takes the finite-difference derivative of
// the mapped samples against the mapped times (the dt'/dt factor enters
// through the reversed spacing), and returns the max-norm deviation from the
// target field at the mapped points. Throws PoleProximity when a denominator
// magnitude drops below `floor`.
double residual_under_map(const HamiltonSystem& sys_src,
                          const HamiltonSystem& sys_tgt, const ExtendedMap& f,
                          const Trajectory& traj, double floor = 1e-8);

// Drift of the H1 first integral along a trajectory: max |I(t) - I(t0)|.
double first_integral_drift(const Trajectory& traj);

// Seeded pseudo-random initial state from the unit polydisc shifted by 1.
CState seeded_initial_state(std::uint64_t seed);

CParams to_complex(const std::array<Rational, kNumParams>& params);

// CSV export: t followed by interleaved re/im of the six coordinates.
void write_csv(const Trajectory& traj, std::ostream& os);

}  // namespace painleve
