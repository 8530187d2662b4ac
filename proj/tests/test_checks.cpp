#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "painleve/checks.hpp"
#include "test_util.hpp"

using namespace painleve;
using namespace painleve::testutil;

namespace {

void expect_all_pass(const VerificationReport& rep) {
  for (const auto& r : rep.records)
    CHECK_MESSAGE(r.status == CheckStatus::PASS,
                  r.check_id << " witness: " << r.witness);
}

}  // namespace

TEST_CASE("involutions and braid relations: d5") {
  VerificationReport rep = check_involutions_and_braid(Group::D5);
  CHECK(rep.records.size() == 21);  // 6 involutions + 15 pairs
  expect_all_pass(rep);
}

TEST_CASE("involutions for the scalar family") {
  VerificationReport rep = check_involutions_and_braid(Group::A1);
  CHECK(rep.records.size() == 2);
  expect_all_pass(rep);
}

TEST_CASE("braid b5b: double edge gives order four") {
  VerificationReport rep = check_involutions_and_braid(Group::B5b);
  bool saw_45 = false;
  for (const auto& r : rep.records) {
    CHECK_MESSAGE(r.status == CheckStatus::PASS,
                  r.check_id << " witness: " << r.witness);
    if (r.check_id == "coxeter.b5b.braid.s4s5") {
      saw_45 = true;
      CHECK(r.note == "m=4");
    }
  }
  CHECK(saw_45);
}

TEST_CASE("symplecticity") {
  CHECK(check_symplectic(ExtendedMap::identity(), "t").status ==
        CheckStatus::PASS);
  CHECK(check_symplectic(get_map(Group::A1, "tr2"), "t").status ==
        CheckStatus::PASS);
  CHECK(check_symplectic(get_equivalence("d5-d62").map, "t").status ==
        CheckStatus::PASS);
  // a deliberately non-symplectic map: q -> 2q
  ExtendedMap bad = ExtendedMap::identity();
  bad.phase[index_of(Var::q)] = Fraction(Rational(2)) * F(Var::q);
  CHECK(check_symplectic(bad, "t").status == CheckStatus::FAIL);
}

TEST_CASE("symmetry: d5 s2 and the identity map") {
  const auto& d5 = get_system(SystemId::D5);
  CHECK(check_symmetry(d5, get_map(Group::D5, "s2"), "t").status ==
        CheckStatus::PASS);
  CHECK(check_symmetry(d5, ExtendedMap::identity(), "t").status ==
        CheckStatus::PASS);
}

TEST_CASE("symmetry residual vanishes at the rational spot-check point") {
  const auto& d5 = get_system(SystemId::D5);
  const VectorField f = hamiltonian_vector_field(d5);
  const auto res = transport_residuals(f, f, get_map(Group::D5, "s2"));
  std::array<Rational, kNumVars> pt = {
      Rational(2), Rational(3), Rational(5), Rational(7),
      Rational(11), Rational(13), Rational(17),
      Rational(1, 2), Rational(1, 3), Rational(1, 5),
      Rational(0), Rational(1, 7), Rational(1, 11)};
  // a3 from the normalization a0+a1+2a2+2a3+a4+a5 = 1
  Rational rest = pt[7] + pt[8] + 2 * pt[9] + pt[11] + pt[12];
  pt[10] = (Rational(1) - rest) / 2;
  for (const auto& r : res) {
    auto v = r.eval(pt);
    REQUIRE(v.has_value());
    CHECK(*v == 0);
  }
}

TEST_CASE("first integral identities") {
  expect_all_pass(check_first_integral());
}

TEST_CASE("Prop. 1 relations with a consistent orientation") {
  VerificationReport rep = check_hamiltonian_relations();
  expect_all_pass(rep);
  // the recorded orientation is present
  bool found = false;
  for (const auto& r : rep.records)
    if (r.check_id == "relations.prop1.orientation") {
      found = true;
      CHECK(r.note.find("orientation=") != std::string::npos);
    }
  CHECK(found);
}

TEST_CASE("negative control: tr2 alone does not carry H1 to H3") {
  const auto& h1 = get_system(SystemId::H1);
  const auto& h3 = get_system(SystemId::H3);
  CHECK(!relation_transport_holds(h1, h3, get_map(Group::A1, "tr2")));
}

TEST_CASE("holomorphy: all charts of d5 and d62") {
  expect_all_pass(check_holomorphy(Group::D5));
  expect_all_pass(check_holomorphy(Group::D62));
}

TEST_CASE("holomorphy: identity chart is trivially polynomial") {
  // the identity chart transforms the field into itself
  Chart id;
  id.name = "id";
  for (std::size_t i = 0; i < kNumPhaseVars; ++i) {
    id.forward[i] = Fraction::variable(var_at(i));
    id.backward[i] = Fraction::variable(var_at(i));
  }
  const auto& sys = get_system(SystemId::D5);
  const VectorField field = hamiltonian_vector_field(sys);
  Bindings back;
  for (std::size_t i = 0; i < kNumPhaseVars; ++i)
    back[var_at(i)] = id.backward[i];
  for (std::size_t j = 0; j < kNumPhaseVars; ++j) {
    Fraction u = substitute(field.components[j], back);
    CHECK(phase_polynomial_quotient_exists(u.num(), u.den()));
  }
}

TEST_CASE("equivalences 3.3 and 4.3") {
  expect_all_pass(check_equivalence("d5-b5a"));
  VerificationReport rep = check_equivalence("d5-d62");
  expect_all_pass(rep);
  // target normalization: sum of target coefficients pulled back matches 1/2
  bool saw_norm = false;
  for (const auto& r : rep.records)
    if (r.check_id == "equivalence.norm.d5-d62") saw_norm = true;
  CHECK(saw_norm);
}

TEST_CASE("equivalence 3.7 residual vanishes at a rational point") {
  const Equivalence& e = get_equivalence("b5a-b5b");
  const auto& src = get_system(system_of(e.source));
  const auto& tgt = get_system(system_of(e.target));
  const auto res = transport_residuals(hamiltonian_vector_field(src),
                                       hamiltonian_vector_field(tgt), e.map);
  SplitMix64 rng(31);
  std::array<Rational, kNumVars> pt = random_point(rng);
  // satisfy the b5a constraint 2(a0+a1+a2+a3)+a4+a5 = 1 via a3
  Rational rest = 2 * pt[7] + 2 * pt[8] + 2 * pt[9] + pt[11] + pt[12];
  pt[10] = (Rational(1) - rest) / 2;
  for (const auto& r : res) {
    auto v = r.eval(pt);
    REQUIRE(v.has_value());
    CHECK(*v == 0);
  }
}

TEST_CASE("generator correspondences of the equivalence proofs") {
  expect_all_pass(check_generator_correspondence("d5-b5a"));
  expect_all_pass(check_generator_correspondence("d5-b5b"));
  expect_all_pass(check_generator_correspondence("d5-d62"));
  // identity conjugation: conjugating the identity gives the identity
  const Equivalence& e = get_equivalence("d5-b5b");
  const ExtendedMap conj =
      compose(e.map, compose(ExtendedMap::identity(), *e.map.inverse));
  CHECK(conj.is_identity());
}

TEST_CASE("symmetry is closed under composition (spot checks)") {
  SplitMix64 rng(77);
  for (Group g : {Group::D5, Group::B5a, Group::B5b, Group::D62}) {
    const auto& sys = get_system(system_of(g));
    auto names = generator_names(g);
    for (int i = 0; i < 5; ++i) {
      const auto& f = get_map(g, names[rng.below(names.size())]);
      const auto& h = get_map(g, names[rng.below(names.size())]);
      CheckRecord r = check_symmetry(sys, compose(f, h), "t");
      CHECK_MESSAGE(r.status == CheckStatus::PASS,
                    f.name << "*" << h.name << ": " << r.witness);
    }
  }
}

TEST_CASE("extended group observations") {
  VerificationReport rep = report_extended_relations(Group::D5);
  bool saw_order = false;
  for (const auto& r : rep.records) {
    if (r.check_id == "relations.order.d5.pi3") {
      saw_order = true;
      CHECK(r.note == "order=2");
    }
  }
  CHECK(saw_order);
}

TEST_CASE("scalar family symmetry: catalog maps pass, mirrored variants fail") {
  const auto& sys = get_system(SystemId::HIII_D7);
  expect_all_pass(check_symmetry_group(Group::A1));
  CHECK(check_symmetry(sys, get_map(Group::A1, "s0_mirror"), "t").status ==
        CheckStatus::FAIL);
  CHECK(check_symmetry(sys, get_map(Group::A1, "s1_mirror"), "t").status ==
        CheckStatus::FAIL);
}

TEST_CASE("involution check and order computation agree") {
  for (Group g : {Group::D5, Group::D62}) {
    VerificationReport rep = check_involutions_and_braid(g);
    for (const auto& gen : generator_names(g)) {
      bool involution_pass = false;
      for (const auto& r : rep.records)
        if (r.check_id.find("." + gen + ".involution") != std::string::npos)
          involution_pass = r.status == CheckStatus::PASS;
      CHECK(involution_pass == (order_of(get_map(g, gen), 2) == 2));
    }
  }
}
