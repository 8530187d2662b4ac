// Holomorphy characterization at specialized parameters: a generic degree-4
// Hamiltonian with unknown coefficients is pushed through every chart of a
// group; polynomiality of the transformed field gives exact affine-linear
// conditions on the coefficients, solved over the rationals.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "painleve/maps.hpp"
#include "painleve/polynomial.hpp"
#include "painleve/report.hpp"

namespace painleve {

struct AnsatzSpace {
  Group group;
  std::array<Rational, kNumParams> params;
  int t_min = -1, t_max = 1;

  std::size_t n_unknowns = 0;
  std::size_t rank = 0;       // independent conditions
  std::size_t dimension = 0;  // of the homogeneous solution space
  bool consistent = false;    // the affine system admits a solution

  bool catalog_in_space = false;   // the catalog Hamiltonian solves every row
  bool pure_t_in_homogeneous = false;  // t^k directions are unconstrained
  bool roundtrip_ok = false;  // reported solutions re-verified through the
                              // actual chart machinery

  // A particular solution reconstructed as t * H (canonical text).
  std::string particular_tH;
};

// Solves the chart conditions at the given parameter point; throws
// ConstraintViolated when the point misses the group normalization.
// t_min..t_max is the t-exponent window of the ansatz.
AnsatzSpace solve_holomorphy_ansatz(Group g,
                                    const std::array<Rational, kNumParams>& params,
                                    int t_min = -1, int t_max = 1);

// Deterministic constraint-satisfying parameter points for a seed.
std::array<Rational, kNumParams> seeded_parameters(Group g, std::uint64_t seed);

// Records (membership, dimension, round trip) for the suite.
VerificationReport check_ansatz(Group g, std::uint64_t seed, int index);

}  // namespace painleve
