// Catalog of the Hamiltonian systems: the four six-dimensional coupled
// systems (d5, b5a, b5b, d62), the scalar family H1..H4 and HIII_D7, the
// displayed right-hand sides transcribed independently of the Hamiltonians,
// and the derivation of vector fields from Hamiltonians.
#pragma once

#include <string>
#include <vector>

#include "painleve/fraction.hpp"
#include "painleve/linear_form.hpp"
#include "painleve/report.hpp"

namespace painleve {

enum class SystemId { D5, B5a, B5b, D62, H1, H2, H3, H4, HIII_D7 };

struct HamiltonSystem {
  SystemId id;
  std::string name;
  Fraction hamiltonian;  // always polynomial/t in this catalog
  std::vector<std::pair<Var, Var>> pairs;  // canonical (coordinate, momentum)
  LinearForm constraint;
  std::size_t eliminated_param;

  bool is_six_dimensional() const { return pairs.size() == 3; }
};

struct VectorField {
  // Components indexed by phase variable slot (x,y,z,w,q,p).
  std::array<Fraction, kNumPhaseVars> components;
};

const HamiltonSystem& get_system(SystemId id);
const HamiltonSystem& get_system(const std::string& name);  // UnknownSystem
std::vector<SystemId> all_system_ids();

VectorField hamiltonian_vector_field(const HamiltonSystem& sys);

// The displayed ODE right-hand sides, transcribed separately from the
// Hamiltonians (double-entry bookkeeping). Six-dimensional systems only.
const VectorField& transcribed_odes(SystemId id);

// First integral of the H1 system.
const Polynomial& h1_first_integral();

// Compares the Hamiltonian-derived field of `sys` against `odes`, modulo the
// system's constraint; one record per component.
VerificationReport check_system_consistency(const HamiltonSystem& sys,
                                            const VectorField& odes,
                                            const std::string& id_prefix);

// Hamiltonian-derived fields vs. transcribed ODEs for all four 6D systems.
VerificationReport check_catalog_consistency();

// Eliminates the momentum from the HIII_D7 system, substitutes y = q/tau,
// t = tau^2, and verifies the resulting scalar second-order ODE including the
// exact constants (a,b,c,d) = (-8, 4(1-a1), 0, -4).
VerificationReport scalar_piii_reduction();

}  // namespace painleve
