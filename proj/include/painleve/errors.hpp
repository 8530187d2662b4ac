#pragma once

#include <stdexcept>
#include <string>

namespace painleve {

struct ZeroDenominator : std::domain_error {
  explicit ZeroDenominator(const std::string& what) : std::domain_error(what) {}
};

struct SubstitutionDenominatorZero : std::domain_error {
  explicit SubstitutionDenominatorZero(const std::string& what)
      : std::domain_error(what) {}
};

struct UnknownSystem : std::out_of_range {
  explicit UnknownSystem(const std::string& name)
      : std::out_of_range("unknown system: " + name) {}
};

struct UnknownGroup : std::out_of_range {
  explicit UnknownGroup(const std::string& name)
      : std::out_of_range("unknown group: " + name) {}
};

struct UnknownMap : std::out_of_range {
  explicit UnknownMap(const std::string& name)
      : std::out_of_range("unknown map: " + name) {}
};

struct UnknownChart : std::out_of_range {
  explicit UnknownChart(const std::string& name)
      : std::out_of_range("unknown chart: " + name) {}
};

struct ConstraintViolated : std::invalid_argument {
  explicit ConstraintViolated(const std::string& what)
      : std::invalid_argument(what) {}
};

struct SingularityEncountered : std::runtime_error {
  double last_good_t;
  explicit SingularityEncountered(double t)
      : std::runtime_error("step size underflow near t = " + std::to_string(t)),
        last_good_t(t) {}
};

struct PoleProximity : std::runtime_error {
  explicit PoleProximity(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace painleve
