// Birational transformations on the extended space (x,y,z,w,q,p,t,a0..a5):
// Baecklund generators, diagram automorphisms, charts, Dynkin diagram data,
// and the composition engine for transformation words.
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "painleve/fraction.hpp"
#include "painleve/linear_form.hpp"
#include "painleve/systems.hpp"

namespace painleve {

enum class Group { D5, B5a, B5b, D62, A1 };

const char* to_string(Group g);
Group group_from_string(const std::string& name);  // throws UnknownGroup
std::vector<Group> all_groups();

// The system a group's transformations act on.
SystemId system_of(Group g);

// Affine action on the six parameters: a -> matrix * a + offset.
struct ParamMap {
  std::array<std::array<Rational, kNumParams>, kNumParams> matrix{};
  std::array<Rational, kNumParams> offset{};

  static ParamMap identity();

  std::array<Rational, kNumParams> apply(
      const std::array<Rational, kNumParams>& a) const;

  // Pullback of an affine constraint (coeffs . a = constant).
  LinearForm pullback(const LinearForm& form) const;

  // Image of parameter i as a polynomial in a0..a5.
  Polynomial image_polynomial(std::size_t i) const;

  ParamMap after(const ParamMap& first) const;  // this o first
  ParamMap inverse() const;                     // exact; throws if singular
  bool is_identity() const;

  bool operator==(const ParamMap&) const = default;
};

struct ExtendedMap {
  std::string name;
  std::array<Fraction, kNumPhaseVars> phase;  // images of x,y,z,w,q,p
  Fraction time;                              // image of t
  ParamMap params;
  std::shared_ptr<const ExtendedMap> inverse;

  static ExtendedMap identity();

  bool is_identity() const;

  // dt'/dt for catalog maps (time is +t or -t); throws otherwise.
  int time_sign() const;
};

// (f o g)(P) = f(g(P)): g's images are substituted into f's components.
ExtendedMap compose(const ExtendedMap& f, const ExtendedMap& g);

// Left fold of compose over a word: word = {f1, f2, f3} gives f1 o f2 o f3.
ExtendedMap compose_word(const std::vector<const ExtendedMap*>& word);

// Exact equality on phase, time and parameter action; phase residuals are
// reduced by the constraint when one is supplied.
bool map_equal(const ExtendedMap& f, const ExtendedMap& g,
               const LinearForm* constraint = nullptr,
               std::size_t eliminated = 0);

// Smallest n <= max_order with f^n = identity, if any.
std::optional<int> order_of(const ExtendedMap& f, int max_order);

// Substitution bindings realizing the map: phase images, time image and the
// parameter images as linear polynomials.
Bindings map_bindings(const ExtendedMap& f);

// Evaluates the map at an extended rational point; nullopt on a pole.
std::optional<std::array<Rational, kNumVars>> apply_map(
    const ExtendedMap& f, const std::array<Rational, kNumVars>& point);

struct CoxeterDiagram {
  std::array<std::string, 6> node_labels;
  std::array<std::array<int, 6>, 6> order;  // m_ij in {1,2,3,4}
};

struct Chart {
  std::string name;
  std::array<Fraction, kNumPhaseVars> forward;
  std::array<Fraction, kNumPhaseVars> backward;

  ExtendedMap as_map() const;   // identity on t and parameters
  ExtendedMap back_map() const;
};

// outer o inner: apply inner first (for the two-stage charts).
Chart compose_charts(const Chart& outer, const Chart& inner,
                     const std::string& name);

// --- catalog access ---

const ExtendedMap& get_map(Group g, const std::string& name);  // UnknownMap
std::vector<std::string> generator_names(Group g);             // s0..s5 (s0,s1 for A1)
std::vector<std::string> extra_names(Group g);  // diagram automorphisms etc.

const CoxeterDiagram& get_diagram(Group g);  // 6-node groups only

const Chart& get_chart(Group g, const std::string& name);  // UnknownChart
std::vector<std::string> chart_names(Group g);

// Equivalences between systems (the theorems with variable/parameter maps).
struct Equivalence {
  std::string id;          // source-target slug, e.g. "d5-b5a"
  Group source, target;
  ExtendedMap map;         // source coordinates -> target coordinates
  // target generator name -> word in source generator names
  std::vector<std::pair<std::string, std::vector<std::string>>> correspondence;
};

const Equivalence& get_equivalence(const std::string& id);
std::vector<std::string> equivalence_ids();

}  // namespace painleve
