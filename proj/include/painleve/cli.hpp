// Suite runner and report emitter: executes selected verification suites
// under size/time budgets, writes the JSON report, and serializes the
// catalogs for diffing.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "painleve/maps.hpp"
#include "painleve/report.hpp"

namespace painleve {

inline constexpr const char* kCatalogVersion = "1.0";
inline constexpr int kReportSchema = 1;

enum class Suite {
  Catalog,
  Coxeter,
  Symmetry,
  Symplectic,
  Integral,
  Relations,
  Holomorphy,
  Equivalence,
  Ansatz,
  Numeric,
};

const char* to_string(Suite s);
Suite suite_from_string(const std::string& name);  // throws invalid_argument
std::vector<Suite> all_suites();

struct RunConfig {
  std::vector<Group> groups = all_groups();
  std::vector<Suite> suites = all_suites();
  std::size_t monomial_cap = 1'000'000;
  double time_cap_secs = 240.0;  // per check unit
  std::uint64_t seed = 20260808;
  double tol = 1e-12;
  std::string report_path;
};

VerificationReport run_suites(const RunConfig& config);

// 0: all PASS; 2: any FAIL; 3: no FAIL but some INDETERMINATE.
int exit_status(const VerificationReport& report);

void write_report_json(const VerificationReport& report,
                       const RunConfig& config, std::ostream& os);
void print_summary(const VerificationReport& report, std::ostream& os);

// Canonical, diff-stable serialization of a catalog section.
// kind is one of: systems, maps, charts, diagrams.
std::string dump(const std::string& kind);  // throws invalid_argument

}  // namespace painleve
