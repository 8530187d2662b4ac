// Fixed indeterminate set for the whole engine: six phase variables, time,
// and six affine parameters, in the canonical order x,y,z,w,q,p,t,a0..a5.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace painleve {

enum class Var : std::uint8_t {
  x = 0,
  y = 1,
  z = 2,
  w = 3,
  q = 4,
  p = 5,
  t = 6,
  a0 = 7,
  a1 = 8,
  a2 = 9,
  a3 = 10,
  a4 = 11,
  a5 = 12,
};

inline constexpr std::size_t kNumVars = 13;
inline constexpr std::size_t kNumPhaseVars = 6;
inline constexpr std::size_t kNumParams = 6;

inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "x", "y", "z", "w", "q", "p", "t",
    "a0", "a1", "a2", "a3", "a4", "a5"};

constexpr std::size_t index_of(Var v) { return static_cast<std::size_t>(v); }
constexpr Var var_at(std::size_t i) { return static_cast<Var>(i); }
constexpr std::string_view name_of(Var v) { return kVarNames[index_of(v)]; }

constexpr bool is_phase(Var v) { return index_of(v) < kNumPhaseVars; }
constexpr bool is_param(Var v) { return index_of(v) >= kNumPhaseVars + 1; }

// Parameter index 0..5 -> Var::a0..a5.
constexpr Var param_var(std::size_t i) {
  return static_cast<Var>(kNumPhaseVars + 1 + i);
}

// Canonical symplectic pairing: (x,y), (z,w), (q,p); coordinate first.
inline constexpr std::array<std::pair<Var, Var>, 3> kCanonicalPairs = {{
    {Var::x, Var::y},
    {Var::z, Var::w},
    {Var::q, Var::p},
}};

// Conjugate phase variable under the pairing (x<->y, z<->w, q<->p).
constexpr Var conjugate(Var v) {
  const std::size_t i = index_of(v);
  return static_cast<Var>(i ^ 1u);
}

// +1 if v is a coordinate (dv/dt = +dH/d(conj)), -1 if a momentum.
constexpr int hamilton_sign(Var v) { return index_of(v) % 2 == 0 ? +1 : -1; }

}  // namespace painleve
