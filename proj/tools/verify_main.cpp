// Command-line entry point: suite runner, catalog dumps and trajectory
// export.
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "painleve/cli.hpp"
#include "painleve/errors.hpp"
#include "painleve/integrate.hpp"

using namespace painleve;

namespace {

int run_verification(const std::vector<std::string>& group_args,
                     const std::vector<std::string>& suite_args,
                     RunConfig config) {
  try {
    config.groups.clear();
    for (const auto& g : group_args) {
      if (g == "all") {
        config.groups = all_groups();
        break;
      }
      config.groups.push_back(group_from_string(g));
    }
    config.suites.clear();
    for (const auto& s : suite_args) {
      if (s == "all") {
        config.suites = all_suites();
        break;
      }
      config.suites.push_back(suite_from_string(s));
    }
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  const VerificationReport report = run_suites(config);
  print_summary(report, std::cout);

  if (!config.report_path.empty()) {
    std::ofstream out(config.report_path);
    if (!out) {
      std::cerr << "cannot write report to " << config.report_path << "\n";
      return 1;
    }
    write_report_json(report, config, out);
    if (!out.good()) {
      std::cerr << "i/o error writing " << config.report_path << "\n";
      return 1;
    }
  }
  return exit_status(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "verify: exact symbolic and numeric checks for the coupled Painleve "
      "III systems and their affine Weyl group structures"};

  std::vector<std::string> group_args{"all"};
  std::vector<std::string> suite_args{"all"};
  RunConfig config;

  app.add_option("--group", group_args,
                 "groups to check: d5, b5a, b5b, d62, a1 or all")
      ->envname("VERIFY_GROUP");
  app.add_option("--suite", suite_args,
                 "suites to run: catalog, coxeter, symmetry, symplectic, "
                 "integral, relations, holomorphy, equivalence, ansatz, "
                 "numeric or all")
      ->envname("VERIFY_SUITE");
  app.add_option("--report", config.report_path, "write a JSON report here")
      ->envname("VERIFY_REPORT");
  app.add_option("--seed", config.seed, "base seed for randomized checks")
      ->envname("VERIFY_SEED");
  app.add_option("--monomial-cap", config.monomial_cap,
                 "abort a check when an intermediate polynomial exceeds this "
                 "many monomials (0 = unlimited)")
      ->envname("VERIFY_MONOMIAL_CAP");
  app.add_option("--time-cap-secs", config.time_cap_secs,
                 "wall-clock cap per check unit")
      ->envname("VERIFY_TIME_CAP_SECS");
  app.add_option("--tol", config.tol, "integration tolerance (numeric suite)")
      ->envname("VERIFY_TOL");

  auto* dump_cmd =
      app.add_subcommand("dump", "print a catalog section in canonical form");
  std::string kind;
  dump_cmd->add_option("kind", kind, "systems | maps | charts | diagrams")
      ->required();

  auto* traj_cmd = app.add_subcommand(
      "trajectory", "integrate a catalog system and export CSV");
  std::string traj_system = "d5";
  double traj_t0 = 1.0, traj_t1 = 1.5;
  std::size_t traj_samples = 101;
  std::uint64_t traj_seed = 1;
  std::string traj_out;
  traj_cmd->add_option("--system", traj_system, "catalog system name");
  traj_cmd->add_option("--t0", traj_t0, "start time");
  traj_cmd->add_option("--t1", traj_t1, "end time");
  traj_cmd->add_option("--samples", traj_samples, "sample count");
  traj_cmd->add_option("--traj-seed", traj_seed,
                       "seed for parameters and initial state");
  traj_cmd->add_option("--out", traj_out, "output CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*dump_cmd) {
      try {
        std::cout << dump(kind);
      } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
      }
      return 0;
    }
    if (*traj_cmd) {
      const HamiltonSystem* sys = nullptr;
      try {
        sys = &get_system(traj_system);
      } catch (const UnknownSystem& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 1;
      }
      // seeded parameters on the system's own constraint
      std::array<Rational, kNumParams> a{};
      {
        auto next = [state = traj_seed]() mutable {
          std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
          z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
          z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
          return z ^ (z >> 31);
        };
        for (auto& v : a) {
          Rational r(1 + static_cast<int>(next() % 7),
                     2 + static_cast<int>(next() % 5));
          r.canonicalize();
          v = r;
        }
        const std::size_t e = sys->eliminated_param;
        Rational rest(0);
        for (std::size_t i = 0; i < kNumParams; ++i)
          if (i != e) rest += sys->constraint.coeffs[i] * a[i];
        a[e] = (sys->constraint.constant - rest) / sys->constraint.coeffs[e];
      }
      Trajectory traj = integrate(*sys, to_complex(a),
                                  seeded_initial_state(traj_seed), traj_t0,
                                  traj_t1, config.tol, traj_samples);
      if (traj_out.empty()) {
        write_csv(traj, std::cout);
      } else {
        std::ofstream out(traj_out);
        if (!out) {
          std::cerr << "cannot write " << traj_out << "\n";
          return 1;
        }
        write_csv(traj, out);
      }
      return 0;
    }
    return run_verification(group_args, suite_args, config);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
