#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "painleve/errors.hpp"
#include "painleve/systems.hpp"
#include "test_util.hpp"

using namespace painleve;
using namespace painleve::testutil;

namespace {
const Polynomial x = P(Var::x), y = P(Var::y), z = P(Var::z), w = P(Var::w),
                 q = P(Var::q), p = P(Var::p), t = P(Var::t);
const Polynomial a1 = P(Var::a1), a4 = P(Var::a4), a5 = P(Var::a5);
}  // namespace

TEST_CASE("catalog lookups") {
  const auto& d7 = get_system(SystemId::HIII_D7);
  Fraction expect((q * q * p * p + a1 * q * p + q + t * p), t);
  CHECK(d7.hamiltonian.equals(expect));

  const auto& d5 = get_system("d5");
  CHECK(d5.constraint.coeffs ==
        std::array<Rational, 6>{1, 1, 2, 2, 1, 1});
  CHECK(d5.constraint.constant == 1);

  const auto& d62 = get_system(SystemId::D62);
  CHECK(d62.constraint.coeffs == std::array<Rational, 6>{1, 1, 1, 1, 1, 1});
  CHECK(d62.constraint.constant == Rational(1, 2));

  CHECK_THROWS_AS(get_system("nosuch"), UnknownSystem);
}

TEST_CASE("every catalog Hamiltonian is polynomial over t") {
  for (SystemId id : all_system_ids()) {
    const auto& sys = get_system(id);
    Fraction th = Fraction(t) * sys.hamiltonian;
    CHECK_MESSAGE(th.is_polynomial(), sys.name);
    if (sys.is_six_dimensional()) {
      CHECK_MESSAGE(th.as_polynomial().phase_degree() == 4, sys.name);
    }
  }
}

TEST_CASE("t*H1 equals the first integral") {
  const auto& h1 = get_system(SystemId::H1);
  Fraction th = Fraction(t) * h1.hamiltonian;
  REQUIRE(th.is_polynomial());
  CHECK((th.as_polynomial() - h1_first_integral()).is_zero());
}

TEST_CASE("vector field from a constant Hamiltonian is zero") {
  HamiltonSystem sys = get_system(SystemId::D5);
  sys.hamiltonian = Fraction(Rational(7));
  VectorField f = hamiltonian_vector_field(sys);
  for (const auto& c : f.components) CHECK(c.is_zero());
}

TEST_CASE("vector field is linear in the Hamiltonian") {
  SplitMix64 rng(11);
  for (int i = 0; i < 5; ++i) {
    HamiltonSystem a = get_system(SystemId::D5);
    HamiltonSystem b = get_system(SystemId::B5b);
    HamiltonSystem sum = a;
    sum.hamiltonian = a.hamiltonian + b.hamiltonian;
    VectorField fa = hamiltonian_vector_field(a);
    VectorField fb = hamiltonian_vector_field(b);
    VectorField fs = hamiltonian_vector_field(sum);
    for (std::size_t k = 0; k < kNumPhaseVars; ++k)
      CHECK(fs.components[k].equals(fa.components[k] + fb.components[k]));
  }
}

TEST_CASE("catalog consistency: Hamiltonian fields match the displayed odes") {
  VerificationReport rep = check_catalog_consistency();
  CHECK(rep.records.size() == 24);
  for (const auto& r : rep.records) {
    CHECK_MESSAGE(r.status == CheckStatus::PASS,
                  r.check_id << " witness: " << r.witness);
  }
}

TEST_CASE("corrupted ode transcription is detected with a witness") {
  const auto& sys = get_system(SystemId::D5);
  VectorField bad = transcribed_odes(SystemId::D5);
  // flip one sign: dx/dt gains +a0 instead of -a0
  bad.components[0] = bad.components[0] + Fraction(Rational(2) * P(Var::a0), t);
  VerificationReport rep = check_system_consistency(sys, bad, "corrupt");
  CHECK(!rep.all_passed());
  bool found_witness = false;
  for (const auto& r : rep.records)
    if (r.status == CheckStatus::FAIL && !r.witness.empty())
      found_witness = true;
  CHECK(found_witness);
}

TEST_CASE("scalar Painleve III reduction") {
  VerificationReport rep = scalar_piii_reduction();
  for (const auto& r : rep.records)
    CHECK_MESSAGE(r.status == CheckStatus::PASS,
                  r.check_id << " witness: " << r.witness);

  // numeric spot check of the reduction identity at tau=2, y=5 (q=10),
  // a1=1/3, arbitrary rational p: recompute the two sides by evaluation.
  const auto& sys = get_system(SystemId::HIII_D7);
  const VectorField field = hamiltonian_vector_field(sys);
  Bindings to_tau;
  to_tau[Var::t] = Fraction(P(Var::x) * P(Var::x));
  const Fraction fq = substitute(field.components[index_of(Var::q)], to_tau);
  const Fraction fp = substitute(field.components[index_of(Var::p)], to_tau);
  const Fraction dq = Rational(2) * F(Var::x) * fq;
  const Fraction dp = Rational(2) * F(Var::x) * fp;
  auto D = [&](const Fraction& f) {
    return differentiate(f, Var::x) + differentiate(f, Var::q) * dq +
           differentiate(f, Var::p) * dp;
  };
  Fraction yf = F(Var::q) / F(Var::x);
  Fraction y1 = D(yf), y2 = D(y1);
  Fraction lhs = y2;
  Fraction rhs = y1 * y1 / yf - y1 / F(Var::x) +
                 (Fraction(Rational(-8)) * yf * yf +
                  Fraction(Rational(4) * (Rational(1) - P(Var::a1)))) /
                     F(Var::x) -
                 Fraction(Rational(4)) / yf;
  std::array<Rational, kNumVars> pt;
  pt.fill(Rational(1));
  pt[index_of(Var::q)] = 10;
  pt[index_of(Var::p)] = Rational(7, 3);
  pt[index_of(Var::x)] = 2;  // tau
  pt[index_of(Var::a1)] = Rational(1, 3);
  auto lv = lhs.eval(pt), rv = rhs.eval(pt);
  REQUIRE(lv.has_value());
  REQUIRE(rv.has_value());
  CHECK(*lv == *rv);
}
