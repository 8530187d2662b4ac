#include "painleve/cli.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "painleve/ansatz.hpp"
#include "painleve/budget.hpp"
#include "painleve/checks.hpp"
#include "painleve/errors.hpp"
#include "painleve/integrate.hpp"

namespace painleve {

const char* to_string(Suite s) {
  switch (s) {
    case Suite::Catalog: return "catalog";
    case Suite::Coxeter: return "coxeter";
    case Suite::Symmetry: return "symmetry";
    case Suite::Symplectic: return "symplectic";
    case Suite::Integral: return "integral";
    case Suite::Relations: return "relations";
    case Suite::Holomorphy: return "holomorphy";
    case Suite::Equivalence: return "equivalence";
    case Suite::Ansatz: return "ansatz";
    case Suite::Numeric: return "numeric";
  }
  return "?";
}

Suite suite_from_string(const std::string& name) {
  for (Suite s : all_suites())
    if (name == to_string(s)) return s;
  throw std::invalid_argument("unknown suite: " + name);
}

std::vector<Suite> all_suites() {
  return {Suite::Catalog,    Suite::Coxeter,  Suite::Symmetry,
          Suite::Symplectic, Suite::Integral, Suite::Relations,
          Suite::Holomorphy, Suite::Equivalence, Suite::Ansatz,
          Suite::Numeric};
}

namespace {

bool has_group(const RunConfig& c, Group g) {
  for (Group x : c.groups)
    if (x == g) return true;
  return false;
}

// Runs one budgeted unit of work; a budget overrun becomes a single
// INDETERMINATE record instead of aborting the suite.
void run_unit(VerificationReport& out, const RunConfig& config,
              const std::string& unit_id,
              const std::function<VerificationReport()>& fn) {
  Budget budget(config.monomial_cap, config.time_cap_secs);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport unit;
  try {
    BudgetScope scope(&budget);
    unit = fn();
  } catch (const BudgetExceeded& e) {
    unit.add(CheckRecord{unit_id, "", CheckStatus::INDETERMINATE, "",
                         std::string("budget: ") + e.what(), 0.0});
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  for (auto& r : unit.records) r.wall_time = elapsed / unit.records.size();
  out.merge(std::move(unit));
}

// The groups an equivalence needs before its suite entry applies.
bool equivalence_selected(const RunConfig& c, const Equivalence& e) {
  return has_group(c, e.source) && has_group(c, e.target);
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

VerificationReport numeric_shadow(const RunConfig& config) {
  VerificationReport rep;

  // First integral drift along the H1 flow (the quantitative part of the
  // first-integral verification).
  {
    const auto& h1 = get_system(SystemId::H1);
    std::array<Rational, kNumParams> a{Rational(1, 3), Rational(1, 4),
                                       Rational(-1, 24), Rational(0),
                                       Rational(0), Rational(0)};
    CState start;
    start.fill(Complex(1.0, 0.0));
    Trajectory traj =
        integrate(h1, to_complex(a), start, 1.0, 2.0, config.tol, 513);
    const double drift = first_integral_drift(traj);
    std::ostringstream note;
    note.precision(3);
    note << "drift=" << drift << " tol=" << config.tol;
    if (drift <= 1e-8)
      rep.add(make_pass("numeric.integral.h1_drift", "h1", note.str()));
    else
      rep.add(make_fail("numeric.integral.h1_drift", "h1", note.str()));
  }

  // Trajectory shadows of every symmetry and equivalence: three seeded
  // trajectories per subject, residual of the mapped flow <= 1e-6. The
  // finite-difference oracle needs the mapped path well clear of the map's
  // pole set, so the suite runs with a much stricter denominator floor than
  // the library default and reseeds on PoleProximity (the chosen seed is
  // recorded).
  auto shadow = [&](const HamiltonSystem& src, const HamiltonSystem& tgt,
                    const ExtendedMap& m, const std::string& id,
                    std::uint64_t subject_hash) {
    for (int k = 0; k < 3; ++k) {
      const std::string rid = id + ".traj" + std::to_string(k);
      double residual = -1.0;
      std::uint64_t seed = mix(config.seed, mix(subject_hash, k));
      std::string note;
      bool done = false;
      for (int attempt = 0; attempt < 48 && !done; ++attempt) {
        try {
          const auto params = to_complex(seeded_parameters(
              group_from_string(src.name == "hiii_d7" ? "a1" : src.name),
              seed));
          Trajectory traj = integrate(src, params, seeded_initial_state(seed),
                                      1.0, 1.5, config.tol, 4001);
          // Quality gate on the source path alone: a trajectory grazing a
          // movable pole cannot be resolved by the difference stencil, for
          // any map. Gate before looking at the map.
          if (self_consistency_residual(traj, src) > 2e-9)
            throw PoleProximity("source path unresolvable");
          residual = residual_under_map(src, tgt, m, traj, 0.2);
          done = true;
          std::ostringstream os;
          os.precision(3);
          os << "residual=" << residual << " seed=" << seed;
          note = os.str();
        } catch (const PoleProximity&) {
          seed = mix(seed, 0xabcdefull + attempt);
        }
      }
      if (!done)
        rep.add(CheckRecord{rid, m.name, CheckStatus::INDETERMINATE, "",
                            "all seeds ran into poles", 0.0});
      else if (residual <= 1e-6)
        rep.add(make_pass(rid, m.name, note));
      else
        rep.add(make_fail(rid, m.name, note));
    }
  };

  std::uint64_t h = 1;
  for (Group g : config.groups) {
    const auto& sys = get_system(system_of(g));
    std::vector<std::string> names = generator_names(g);
    for (const auto& n : extra_names(g)) names.push_back(n);
    for (const auto& n : names) {
      shadow(sys, sys, get_map(g, n),
             "numeric.symmetry." + std::string(to_string(g)) + "." + n, h);
      ++h;
    }
  }
  for (const auto& id : equivalence_ids()) {
    const Equivalence& e = get_equivalence(id);
    if (!equivalence_selected(config, e)) continue;
    shadow(get_system(system_of(e.source)), get_system(system_of(e.target)),
           e.map, "numeric.equivalence." + id, h);
    ++h;
  }
  return rep;
}

}  // namespace

VerificationReport run_suites(const RunConfig& config) {
  VerificationReport rep;
  for (Suite suite : config.suites) {
    switch (suite) {
      case Suite::Catalog:
        run_unit(rep, config, "catalog", [] { return check_catalog_consistency(); });
        run_unit(rep, config, "catalog.scalar_reduction",
                 [] { return scalar_piii_reduction(); });
        break;
      case Suite::Coxeter:
        for (Group g : config.groups)
          run_unit(rep, config, "coxeter." + std::string(to_string(g)),
                   [g] { return check_involutions_and_braid(g); });
        break;
      case Suite::Symmetry:
        for (Group g : config.groups)
          run_unit(rep, config, "symmetry." + std::string(to_string(g)),
                   [g] { return check_symmetry_group(g); });
        break;
      case Suite::Symplectic:
        run_unit(rep, config, "symplectic",
                 [] { return check_symplectic_catalog(); });
        break;
      case Suite::Integral:
        run_unit(rep, config, "integral", [] { return check_first_integral(); });
        break;
      case Suite::Relations:
        run_unit(rep, config, "relations.prop1",
                 [] { return check_hamiltonian_relations(); });
        for (Group g : config.groups)
          run_unit(rep, config, "relations." + std::string(to_string(g)),
                   [g] { return report_extended_relations(g); });
        break;
      case Suite::Holomorphy:
        for (Group g : config.groups) {
          if (g == Group::A1) continue;  // no charts cataloged for the scalar family
          run_unit(rep, config, "holomorphy." + std::string(to_string(g)),
                   [g] { return check_holomorphy(g); });
        }
        break;
      case Suite::Equivalence:
        for (const auto& id : equivalence_ids()) {
          const Equivalence& e = get_equivalence(id);
          if (!equivalence_selected(config, e)) continue;
          run_unit(rep, config, "equivalence." + id,
                   [&id] { return check_equivalence(id); });
          run_unit(rep, config, "equivalence.gen." + id,
                   [&id] { return check_generator_correspondence(id); });
        }
        break;
      case Suite::Ansatz:
        for (Group g : config.groups) {
          if (g == Group::A1) continue;
          for (int i = 0; i < 3; ++i) {
            const std::uint64_t seed = mix(config.seed, 1000 + 17 * i);
            run_unit(rep, config,
                     "ansatz." + std::string(to_string(g)) + ".seed" +
                         std::to_string(i),
                     [g, seed, i] { return check_ansatz(g, seed, i); });
          }
        }
        break;
      case Suite::Numeric:
        run_unit(rep, config, "numeric",
                 [&config] { return numeric_shadow(config); });
        break;
    }
  }
  rep.sort_by_id();
  return rep;
}

int exit_status(const VerificationReport& report) {
  if (report.count(CheckStatus::FAIL) > 0) return 2;
  if (report.count(CheckStatus::INDETERMINATE) > 0) return 3;
  return 0;
}

void write_report_json(const VerificationReport& report,
                       const RunConfig& config, std::ostream& os) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  nlohmann::ordered_json run;
  run["catalog_version"] = kCatalogVersion;
  std::vector<std::string> groups, suites;
  for (Group g : config.groups) groups.push_back(to_string(g));
  for (Suite s : config.suites) suites.push_back(to_string(s));
  run["groups"] = groups;
  run["suites"] = suites;
  run["seed"] = config.seed;
  run["monomial_cap"] = config.monomial_cap;
  run["time_cap_secs"] = config.time_cap_secs;
  run["tol"] = config.tol;
  j["run"] = run;
  nlohmann::ordered_json summary;
  summary["pass"] = report.count(CheckStatus::PASS);
  summary["fail"] = report.count(CheckStatus::FAIL);
  summary["indeterminate"] = report.count(CheckStatus::INDETERMINATE);
  j["summary"] = summary;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& r : report.records) {
    nlohmann::ordered_json rec;
    rec["check_id"] = r.check_id;
    rec["subject"] = r.subject;
    rec["status"] = to_string(r.status);
    rec["witness"] = r.witness;
    rec["note"] = r.note;
    rec["wall_time"] = r.wall_time;
    records.push_back(std::move(rec));
  }
  j["records"] = std::move(records);
  os << j.dump(2) << "\n";
}

void print_summary(const VerificationReport& report, std::ostream& os) {
  for (const auto& r : report.records) {
    os << to_string(r.status) << " " << r.check_id;
    if (!r.note.empty()) os << " [" << r.note << "]";
    if (r.status == CheckStatus::FAIL && !r.witness.empty())
      os << " witness: " << r.witness;
    os << "\n";
  }
  os << report.count(CheckStatus::PASS) << " pass, "
     << report.count(CheckStatus::FAIL) << " fail, "
     << report.count(CheckStatus::INDETERMINATE) << " indeterminate\n";
}

namespace {

void dump_systems(std::ostream& os) {
  for (SystemId id : all_system_ids()) {
    const auto& sys = get_system(id);
    os << "system " << sys.name << "\n";
    os << "  constraint: " << sys.constraint.str() << "\n";
    os << "  eliminated: " << name_of(param_var(sys.eliminated_param)) << "\n";
    Fraction th = Fraction(Polynomial::variable(Var::t)) * sys.hamiltonian;
    os << "  t*H = " << (th.is_polynomial() ? th.as_polynomial().str()
                                            : th.str())
       << "\n";
    const VectorField f = hamiltonian_vector_field(sys);
    for (const auto& [coord, mom] : sys.pairs) {
      os << "  d" << name_of(coord) << "/dt = "
         << f.components[index_of(coord)].str() << "\n";
      os << "  d" << name_of(mom) << "/dt = "
         << f.components[index_of(mom)].str() << "\n";
    }
  }
}

void dump_map(std::ostream& os, Group g, const std::string& name) {
  const auto& m = get_map(g, name);
  os << "map " << to_string(g) << "." << name << "\n";
  for (std::size_t i = 0; i < kNumPhaseVars; ++i) {
    const Fraction id = Fraction::variable(var_at(i));
    if (m.phase[i].equals(id)) continue;
    os << "  " << name_of(var_at(i)) << " -> " << m.phase[i].str() << "\n";
  }
  os << "  t -> " << m.time.str() << "\n";
  for (std::size_t i = 0; i < kNumParams; ++i) {
    const Polynomial img = m.params.image_polynomial(i);
    if (img == Polynomial::variable(param_var(i))) continue;
    os << "  " << name_of(param_var(i)) << " -> " << img.str() << "\n";
  }
}

void dump_maps(std::ostream& os) {
  for (Group g : all_groups()) {
    std::vector<std::string> names = generator_names(g);
    for (const auto& n : extra_names(g)) names.push_back(n);
    if (g == Group::A1)
      for (const auto& n : {"tr1", "tr2", "tr3"}) names.push_back(n);
    for (const auto& n : names) dump_map(os, g, n);
  }
}

void dump_charts(std::ostream& os) {
  for (Group g : all_groups()) {
    for (const auto& name : chart_names(g)) {
      const Chart& c = get_chart(g, name);
      os << "chart " << to_string(g) << "." << name << "\n";
      for (std::size_t i = 0; i < kNumPhaseVars; ++i) {
        const Fraction id = Fraction::variable(var_at(i));
        if (c.forward[i].equals(id)) continue;
        os << "  " << name_of(var_at(i)) << " -> " << c.forward[i].str()
           << "   (back: " << c.backward[i].str() << ")\n";
      }
    }
  }
}

void dump_diagrams(std::ostream& os) {
  for (Group g : all_groups()) {
    if (g == Group::A1) continue;
    const auto& d = get_diagram(g);
    os << "diagram " << to_string(g) << "\n";
    os << "  nodes:";
    for (int i = 0; i < 6; ++i)
      os << " " << i << ":\"" << d.node_labels[i] << "\"";
    os << "\n";
    for (int i = 0; i < 6; ++i) {
      os << "  m(" << i << ",*) =";
      for (int j = 0; j < 6; ++j) os << " " << d.order[i][j];
      os << "\n";
    }
  }
}

}  // namespace

std::string dump(const std::string& kind) {
  std::ostringstream os;
  if (kind == "systems")
    dump_systems(os);
  else if (kind == "maps")
    dump_maps(os);
  else if (kind == "charts")
    dump_charts(os);
  else if (kind == "diagrams")
    dump_diagrams(os);
  else
    throw std::invalid_argument("unknown dump kind: " + kind);
  return os.str();
}

}  // namespace painleve
