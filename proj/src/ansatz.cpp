#include "painleve/ansatz.hpp"

#include <map>
#include <sstream>

#include "painleve/checks.hpp"
#include "painleve/errors.hpp"

namespace painleve {

namespace {

// All monomials of total degree <= 4 in the six phase variables, in a fixed
// deterministic order.
std::vector<Monomial> phase_basis() {
  std::vector<Monomial> out;
  Monomial m;
  // lexicographic enumeration by nested exponents, filtered by degree
  for (int ex = 0; ex <= 4; ++ex)
    for (int ey = 0; ey + ex <= 4; ++ey)
      for (int ez = 0; ez + ey + ex <= 4; ++ez)
        for (int ew = 0; ew + ez + ey + ex <= 4; ++ew)
          for (int eq = 0; eq + ew + ez + ey + ex <= 4; ++eq)
            for (int ep = 0; ep + eq + ew + ez + ey + ex <= 4; ++ep) {
              m.exps = {static_cast<std::uint16_t>(ex),
                        static_cast<std::uint16_t>(ey),
                        static_cast<std::uint16_t>(ez),
                        static_cast<std::uint16_t>(ew),
                        static_cast<std::uint16_t>(eq),
                        static_cast<std::uint16_t>(ep),
                        0, 0, 0, 0, 0, 0, 0};
              out.push_back(m);
            }
  return out;
}

struct SparseRow {
  std::map<std::size_t, Rational> a;
  Rational rhs{0};

  void prune() {
    for (auto it = a.begin(); it != a.end();)
      it = sgn(it->second) == 0 ? a.erase(it) : std::next(it);
  }
};

// Online Gaussian elimination over exact rationals; rows are kept in
// row-echelon form keyed by pivot column.
class RowReducer {
 public:
  void add(SparseRow row) {
    row.prune();
    while (!row.a.empty()) {
      const std::size_t lead = row.a.begin()->first;
      auto it = pivots_.find(lead);
      if (it == pivots_.end()) {
        const Rational d = row.a.begin()->second;
        for (auto& [c, v] : row.a) v /= d;
        row.rhs /= d;
        pivots_.emplace(lead, std::move(row));
        return;
      }
      const Rational f = row.a.begin()->second;
      for (const auto& [c, v] : it->second.a) {
        auto [jt, inserted] = row.a.try_emplace(c, 0);
        jt->second -= f * v;
        if (sgn(jt->second) == 0) row.a.erase(jt);
      }
      row.rhs -= f * it->second.rhs;
    }
    if (sgn(row.rhs) != 0) inconsistent_ = true;
  }

  // Back-substitutes so every pivot row references free columns only.
  void finalize() {
    for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) {
      SparseRow& row = it->second;
      for (auto jt = std::next(row.a.begin()); jt != row.a.end();) {
        auto pv = pivots_.find(jt->first);
        if (pv == pivots_.end()) {
          ++jt;
          continue;
        }
        const Rational f = jt->second;
        jt = row.a.erase(jt);
        for (const auto& [c, v] : pv->second.a) {
          if (c == pv->first) continue;
          auto [kt, inserted] = row.a.try_emplace(c, 0);
          kt->second += f * -v;
          if (sgn(kt->second) == 0) row.a.erase(kt);
        }
        row.rhs -= f * pv->second.rhs;
        jt = row.a.upper_bound(it->first);  // restart after structural change
      }
    }
  }

  bool inconsistent() const { return inconsistent_; }
  std::size_t rank() const { return pivots_.size(); }
  bool is_pivot(std::size_t col) const { return pivots_.count(col) > 0; }

  // Particular solution with all free variables set to zero.
  std::vector<Rational> particular(std::size_t n) const {
    std::vector<Rational> x(n, Rational(0));
    for (const auto& [col, row] : pivots_) x[col] = row.rhs;
    return x;
  }

  // Homogeneous solution with free column f set to one.
  std::vector<Rational> null_vector(std::size_t n, std::size_t f) const {
    std::vector<Rational> x(n, Rational(0));
    x[f] = 1;
    for (const auto& [col, row] : pivots_) {
      auto it = row.a.find(f);
      if (it != row.a.end()) x[col] = -it->second;
    }
    return x;
  }

 private:
  std::map<std::size_t, SparseRow> pivots_;
  bool inconsistent_ = false;
};

Bindings specialization_bindings(const std::array<Rational, kNumParams>& params) {
  Bindings b;
  for (std::size_t i = 0; i < kNumParams; ++i)
    b[param_var(i)] = Fraction(params[i]);
  return b;
}

Fraction specialize(const Fraction& f, const Bindings& b) {
  return substitute(f, b);
}

}  // namespace

std::array<Rational, kNumParams> seeded_parameters(Group g, std::uint64_t seed) {
  const auto& sys = get_system(system_of(g));
  auto next = [state = seed]() mutable {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  std::array<Rational, kNumParams> a;
  for (std::size_t i = 0; i < kNumParams; ++i) {
    const int num = 1 + static_cast<int>(next() % 9);
    const int den = 2 + static_cast<int>(next() % 7);
    Rational r(num, den);
    r.canonicalize();
    a[i] = (next() & 1) ? r : -r;
  }
  // solve the normalization for the eliminated parameter
  const std::size_t e = sys.eliminated_param;
  Rational rest(0);
  for (std::size_t i = 0; i < kNumParams; ++i)
    if (i != e) rest += sys.constraint.coeffs[i] * a[i];
  a[e] = (sys.constraint.constant - rest) / sys.constraint.coeffs[e];
  return a;
}

AnsatzSpace solve_holomorphy_ansatz(Group g,
                                    const std::array<Rational, kNumParams>& params,
                                    int t_min, int t_max) {
  const auto& sys = get_system(system_of(g));
  if (!sys.constraint.satisfied_by(params))
    throw ConstraintViolated("parameters violate " + sys.constraint.str());
  if (t_min > t_max) throw std::invalid_argument("empty t-window");

  AnsatzSpace space;
  space.group = g;
  space.params = params;
  space.t_min = t_min;
  space.t_max = t_max;

  const std::vector<Monomial> basis = phase_basis();
  const std::size_t n_mono = basis.size();
  const std::size_t n_k = static_cast<std::size_t>(t_max - t_min + 1);
  const std::size_t n = n_mono * n_k;
  space.n_unknowns = n;
  auto column = [&](std::size_t mono_idx, int k) {
    return static_cast<std::size_t>(k - t_min) * n_mono + mono_idx;
  };

  const Bindings spec = specialization_bindings(params);

  // Coefficient vector of the catalog Hamiltonian at this specialization.
  std::vector<Rational> c_catalog(n, Rational(0));
  bool catalog_fits_window = true;
  {
    const Fraction h = specialize(sys.hamiltonian, spec);
    const Fraction th = Fraction(Polynomial::variable(Var::t)) * h;
    const Polynomial num = th.as_polynomial();
    std::map<Monomial, std::size_t, MonomialLess> mono_index;
    for (std::size_t i = 0; i < n_mono; ++i) mono_index[basis[i]] = i;
    for (const auto& term : num.terms()) {
      Monomial phase_part = term.mono;
      const int et = phase_part.exps[index_of(Var::t)];
      phase_part.exps[index_of(Var::t)] = 0;
      const int k = et - 1;  // term of t*H with t^et contributes to H at t^(et-1)
      auto it = mono_index.find(phase_part);
      if (it == mono_index.end() || k < t_min || k > t_max) {
        catalog_fits_window = false;
        break;
      }
      c_catalog[column(it->second, k)] = term.coeff;
    }
  }

  RowReducer reducer;
  bool catalog_satisfies_all = true;
  std::vector<bool> column_touched(n, false);

  const Polynomial t_poly = Polynomial::variable(Var::t);

  for (const auto& chart_name : chart_names(g)) {
    const Chart& raw = get_chart(g, chart_name);
    // Specialized chart data.
    std::array<Fraction, kNumPhaseVars> fwd, back;
    for (std::size_t i = 0; i < kNumPhaseVars; ++i) {
      fwd[i] = specialize(raw.forward[i], spec);
      back[i] = specialize(raw.backward[i], spec);
    }
    Bindings back_bind;
    for (std::size_t i = 0; i < kNumPhaseVars; ++i)
      back_bind[var_at(i)] = back[i];

    // Power tables of the backward components up to the ansatz degree.
    std::array<std::vector<Fraction>, kNumPhaseVars> back_pow;
    for (std::size_t s = 0; s < kNumPhaseVars; ++s) {
      back_pow[s].resize(5);
      back_pow[s][0] = Fraction(1);
      for (int e = 1; e <= 4; ++e) back_pow[s][e] = back_pow[s][e - 1] * back[s];
    }
    // Products back^e for every derivative monomial (degree <= 3), cached.
    std::map<Monomial, Fraction, MonomialLess> prod_cache;
    auto back_product = [&](const Monomial& m) -> const Fraction& {
      auto it = prod_cache.find(m);
      if (it != prod_cache.end()) return it->second;
      Fraction f(1);
      for (std::size_t s = 0; s < kNumPhaseVars; ++s)
        if (m.exps[s] > 0) f = f * back_pow[s][m.exps[s]];
      return prod_cache.emplace(m, std::move(f)).first->second;
    };

    for (std::size_t j = 0; j < kNumPhaseVars; ++j) {
      // Fixed data of the component: A_v = (dphi_j/dv) o back, offset
      // B = (dphi_j/dt) o back.
      std::array<Fraction, kNumPhaseVars> A;
      for (std::size_t v = 0; v < kNumPhaseVars; ++v) {
        const Fraction d = differentiate(fwd[j], var_at(v));
        A[v] = d.is_zero() ? Fraction(0) : substitute(d, back_bind);
      }
      const Fraction dfdt = differentiate(fwd[j], Var::t);
      const Fraction B = dfdt.is_zero() ? Fraction(0) : substitute(dfdt, back_bind);

      // First pass: the transformed contribution of each basis monomial.
      std::vector<Fraction> u_of(n_mono);
      Polynomial denom = Polynomial::constant(1);
      auto absorb_denominator = [&](const Polynomial& d) {
        if (d.is_constant() || divides(d, denom).has_value()) return;
        if (divides(denom, d).has_value()) {
          denom = d;
          return;
        }
        denom = denom * d;  // conservative common multiple
      };
      for (std::size_t mi = 0; mi < n_mono; ++mi) {
        Fraction u(0);
        for (std::size_t v = 0; v < kNumPhaseVars; ++v) {
          if (A[v].is_zero()) continue;
          const Var vb = conjugate(var_at(v));
          const std::uint16_t e = basis[mi].exps[index_of(vb)];
          if (e == 0) continue;
          Monomial dm = basis[mi];
          dm.exps[index_of(vb)] -= 1;
          Fraction g_v = Rational(hamilton_sign(var_at(v)) * int(e)) *
                         back_product(dm);
          u = u + A[v] * g_v;
        }
        if (!u.is_zero()) absorb_denominator(u.den());
        u_of[mi] = std::move(u);
      }
      if (!B.is_zero()) absorb_denominator(B.den());
      if (denom.depends_on(Var::t))
        throw std::logic_error("ansatz: denominator involves t");
      if (denom.is_constant()) continue;  // component imposes no condition

      // Equations keyed by remainder monomial.
      std::map<Monomial, SparseRow, MonomialLess> equations;

      auto add_entry = [&](const Polynomial& numerator, std::size_t col) {
        const Polynomial rem = phase_remainder_linear(numerator, denom);
        for (const auto& term : rem.terms()) {
          equations[term.mono].a[col] += term.coeff;
          column_touched[col] = true;
        }
      };

      for (std::size_t mi = 0; mi < n_mono; ++mi) {
        const Fraction& u = u_of[mi];
        if (u.is_zero()) continue;
        auto mult = divides(u.den(), denom);
        if (!mult) throw std::logic_error("ansatz: denominator mismatch");
        const Polynomial base = u.num() * *mult;
        for (int k = t_min; k <= t_max; ++k) {
          const Polynomial numerator =
              base * pow(t_poly, static_cast<unsigned>(k - t_min));
          add_entry(numerator, column(mi, k));
        }
      }

      // Offset from the chart's own time derivative, shifted by t^{-t_min}.
      if (!B.is_zero()) {
        auto mult = divides(B.den(), denom);
        if (!mult) throw std::logic_error("ansatz: offset denominator mismatch");
        const Polynomial numerator =
            B.num() * *mult * pow(t_poly, static_cast<unsigned>(-t_min));
        const Polynomial rem = phase_remainder_linear(numerator, denom);
        for (const auto& term : rem.terms())
          equations[term.mono].rhs -= term.coeff;
      }

      for (auto& [mono, row] : equations) {
        // membership of the catalog vector, checked on the raw rows
        Rational lhs(0);
        for (const auto& [col, coeff] : row.a) lhs += coeff * c_catalog[col];
        if (lhs != row.rhs) catalog_satisfies_all = false;
        reducer.add(std::move(row));
      }
    }
  }

  reducer.finalize();
  space.rank = reducer.rank();
  space.dimension = n - space.rank;
  space.consistent = !reducer.inconsistent();
  space.catalog_in_space = catalog_fits_window && catalog_satisfies_all &&
                           space.consistent;

  // Pure t-directions: the constant phase monomial never enters any row.
  space.pure_t_in_homogeneous = true;
  {
    std::size_t const_idx = 0;
    bool found = false;
    for (std::size_t i = 0; i < n_mono; ++i)
      if (basis[i].degree() == 0) {
        const_idx = i;
        found = true;
        break;
      }
    if (found) {
      for (int k = t_min; k <= t_max; ++k)
        if (column_touched[column(const_idx, k)] ||
            reducer.is_pivot(column(const_idx, k)))
          space.pure_t_in_homogeneous = false;
    }
  }

  // Reconstruct the particular solution and re-verify it through the real
  // chart machinery (round trip of the reported space).
  auto to_hamiltonian = [&](const std::vector<Rational>& c) {
    Polynomial num = Polynomial::zero();
    for (std::size_t mi = 0; mi < n_mono; ++mi) {
      for (int k = t_min; k <= t_max; ++k) {
        const Rational& coeff = c[column(mi, k)];
        if (sgn(coeff) == 0) continue;
        Monomial m = basis[mi];
        m.exps[index_of(Var::t)] = static_cast<std::uint16_t>(k - t_min);
        num = num + Polynomial::monomial(m, coeff);
      }
    }
    return Fraction(num, pow(t_poly, static_cast<unsigned>(-t_min)));
  };

  const std::vector<Rational> part = reducer.particular(n);
  const Fraction h_part = to_hamiltonian(part);
  {
    const Fraction th = Fraction(t_poly) * h_part;
    space.particular_tH = th.is_polynomial() ? th.as_polynomial().str()
                                             : th.str();
  }

  auto verify_solution = [&](const Fraction& h) {
    HamiltonSystem candidate = sys;
    candidate.hamiltonian = h;
    const VectorField field = hamiltonian_vector_field(candidate);
    for (const auto& chart_name : chart_names(g)) {
      const Chart& raw = get_chart(g, chart_name);
      Bindings back_bind;
      for (std::size_t i = 0; i < kNumPhaseVars; ++i)
        back_bind[var_at(i)] = specialize(raw.backward[i], spec);
      for (std::size_t j = 0; j < kNumPhaseVars; ++j) {
        const Fraction fwd_j = specialize(raw.forward[j], spec);
        Fraction u = differentiate(fwd_j, Var::t);
        for (std::size_t v = 0; v < kNumPhaseVars; ++v) {
          const Fraction d = differentiate(fwd_j, var_at(v));
          if (d.is_zero() || field.components[v].is_zero()) continue;
          u = u + d * field.components[v];
        }
        const Fraction tr = substitute(u, back_bind);
        if (!phase_polynomial_quotient_exists(tr.num(), tr.den())) return false;
      }
    }
    return true;
  };

  space.roundtrip_ok = space.consistent && verify_solution(h_part);
  if (space.roundtrip_ok) {
    // a few homogeneous directions, shifted into the affine space
    std::size_t checked = 0;
    for (std::size_t col = 0; col < n && checked < 3; ++col) {
      if (reducer.is_pivot(col) || !column_touched[col]) continue;
      std::vector<Rational> c = reducer.null_vector(n, col);
      for (std::size_t i = 0; i < n; ++i) c[i] += part[i];
      if (!verify_solution(to_hamiltonian(c))) space.roundtrip_ok = false;
      ++checked;
    }
  }
  return space;
}

VerificationReport check_ansatz(Group g, std::uint64_t seed, int index) {
  VerificationReport rep;
  const std::string prefix = "ansatz." + std::string(to_string(g)) + ".seed" +
                             std::to_string(index);
  const auto params = seeded_parameters(g, seed);
  std::ostringstream ps;
  for (std::size_t i = 0; i < kNumParams; ++i)
    ps << (i ? "," : "") << params[i].get_str();

  AnsatzSpace space = solve_holomorphy_ansatz(g, params);
  const std::string dim_note = "dim=" + std::to_string(space.dimension) +
                               " rank=" + std::to_string(space.rank) +
                               " params=(" + ps.str() + ")";
  if (space.consistent)
    rep.add(make_pass(prefix + ".consistent", to_string(g), dim_note));
  else
    rep.add(make_fail(prefix + ".consistent", to_string(g),
                      "conditions are inconsistent", dim_note));
  if (space.catalog_in_space)
    rep.add(make_pass(prefix + ".membership", to_string(g)));
  else
    rep.add(make_fail(prefix + ".membership", to_string(g),
                      "catalog Hamiltonian violates a chart condition"));
  if (space.pure_t_in_homogeneous)
    rep.add(make_pass(prefix + ".pure_t_directions", to_string(g)));
  else
    rep.add(make_fail(prefix + ".pure_t_directions", to_string(g),
                      "a pure t-term is constrained"));
  if (space.roundtrip_ok)
    rep.add(make_pass(prefix + ".roundtrip", to_string(g)));
  else
    rep.add(make_fail(prefix + ".roundtrip", to_string(g),
                      "a reported solution fails re-verification"));
  rep.add(make_pass(prefix + ".dimension", to_string(g), dim_note));
  return rep;
}

}  // namespace painleve
