// The transformation catalog: generator lists, diagram automorphisms, the
// scalar-family maps, holomorphy charts with hand-derived inverses, Dynkin
// diagram data and the system equivalences.
#include <map>

#include "painleve/errors.hpp"
#include "painleve/maps.hpp"

namespace painleve {

namespace {

Fraction fx() { return Fraction::variable(Var::x); }
Fraction fy() { return Fraction::variable(Var::y); }
Fraction fz() { return Fraction::variable(Var::z); }
Fraction fw() { return Fraction::variable(Var::w); }
Fraction fq() { return Fraction::variable(Var::q); }
Fraction fp() { return Fraction::variable(Var::p); }
Fraction ft() { return Fraction::variable(Var::t); }
Fraction fa(int i) { return Fraction::variable(param_var(i)); }
Fraction c(int v) { return Fraction(Rational(v)); }

ExtendedMap mk(const std::string& name) {
  ExtendedMap m = ExtendedMap::identity();
  m.name = name;
  return m;
}

void set_phase(ExtendedMap& m, Var v, Fraction f) {
  m.phase[index_of(v)] = std::move(f);
}

// a_i' = sum coeffs[j] * a_j (integer coefficients cover all generators).
void prow(ExtendedMap& m, int i, std::array<int, 6> coeffs) {
  for (std::size_t j = 0; j < kNumParams; ++j)
    m.params.matrix[i][j] = coeffs[j];
}

void negate_phase(ExtendedMap& m) {
  for (auto& f : m.phase) f = -f;
}

void flip_time(ExtendedMap& m) { m.time = -m.time; }

void swap_params(ExtendedMap& m, int i, int j) {
  prow(m, i, {0, 0, 0, 0, 0, 0});
  prow(m, j, {0, 0, 0, 0, 0, 0});
  m.params.matrix[i][j] = 1;
  m.params.matrix[j][i] = 1;
}

void reverse_params(ExtendedMap& m) {
  for (int i = 0; i < 6; ++i) {
    prow(m, i, {0, 0, 0, 0, 0, 0});
    m.params.matrix[i][5 - i] = 1;
  }
}

void self_inverse(ExtendedMap& m) {
  ExtendedMap copy = m;
  copy.inverse.reset();
  m.inverse = std::make_shared<const ExtendedMap>(std::move(copy));
}

void set_inverse(ExtendedMap& m, ExtendedMap inv) {
  inv.inverse.reset();
  m.inverse = std::make_shared<const ExtendedMap>(std::move(inv));
}

using MapTable = std::map<std::string, ExtendedMap>;

MapTable build_d5() {
  MapTable g;
  {
    ExtendedMap m = mk("s0");
    set_phase(m, Var::y, fy() - fa(0) / fx());
    prow(m, 0, {-1, 0, 0, 0, 0, 0});
    prow(m, 2, {1, 0, 1, 0, 0, 0});
    self_inverse(m);
    g["s0"] = m;
  }
  {
    ExtendedMap m = mk("s1");
    set_phase(m, Var::y, fy() - fa(1) / (fx() + c(1)));
    prow(m, 1, {0, -1, 0, 0, 0, 0});
    prow(m, 2, {0, 1, 1, 0, 0, 0});
    self_inverse(m);
    g["s1"] = m;
  }
  {
    ExtendedMap m = mk("s2");
    const Fraction d = fy() * fw() + c(1);
    set_phase(m, Var::x, fx() + fa(2) * fw() / d);
    set_phase(m, Var::z, fz() + fa(2) * fy() / d);
    prow(m, 0, {1, 0, 1, 0, 0, 0});
    prow(m, 1, {0, 1, 1, 0, 0, 0});
    prow(m, 2, {0, 0, -1, 0, 0, 0});
    prow(m, 3, {0, 0, 1, 1, 0, 0});
    self_inverse(m);
    g["s2"] = m;
  }
  {
    ExtendedMap m = mk("s3");
    const Fraction d = fz() * fq() - c(1);
    set_phase(m, Var::w, fw() - fa(3) * fq() / d);
    set_phase(m, Var::p, fp() - fa(3) * fz() / d);
    prow(m, 2, {0, 0, 1, 1, 0, 0});
    prow(m, 3, {0, 0, 0, -1, 0, 0});
    prow(m, 4, {0, 0, 0, 1, 1, 0});
    prow(m, 5, {0, 0, 0, 1, 0, 1});
    self_inverse(m);
    g["s3"] = m;
  }
  {
    ExtendedMap m = mk("s4");
    set_phase(m, Var::q, fq() + fa(4) / fp());
    prow(m, 3, {0, 0, 0, 1, 1, 0});
    prow(m, 4, {0, 0, 0, 0, -1, 0});
    self_inverse(m);
    g["s4"] = m;
  }
  {
    ExtendedMap m = mk("s5");
    set_phase(m, Var::q, fq() + fa(5) / (fp() - ft()));
    prow(m, 3, {0, 0, 0, 1, 0, 1});
    prow(m, 5, {0, 0, 0, 0, 0, -1});
    self_inverse(m);
    g["s5"] = m;
  }
  {
    ExtendedMap m = mk("pi1");
    negate_phase(m);
    set_phase(m, Var::x, -fx() - c(1));
    flip_time(m);
    swap_params(m, 0, 1);
    self_inverse(m);
    g["pi1"] = m;
  }
  {
    ExtendedMap m = mk("pi2");
    set_phase(m, Var::p, fp() - ft());
    flip_time(m);
    swap_params(m, 4, 5);
    self_inverse(m);
    g["pi2"] = m;
  }
  {
    ExtendedMap m = mk("pi3");
    set_phase(m, Var::x, (fp() - ft()) / ft());
    set_phase(m, Var::y, -ft() * fq());
    set_phase(m, Var::z, -ft() * fw());
    set_phase(m, Var::w, fz() / ft());
    set_phase(m, Var::q, fy() / ft());
    set_phase(m, Var::p, -ft() * (fx() + c(1)));
    flip_time(m);
    reverse_params(m);
    self_inverse(m);
    g["pi3"] = m;
  }
  return g;
}

MapTable build_b5a() {
  MapTable g;
  {
    ExtendedMap m = mk("s0");
    negate_phase(m);
    set_phase(m, Var::x, -fx() - c(2) * fa(0) / fy() + c(1) / (fy() * fy()));
    flip_time(m);
    prow(m, 0, {-1, 0, 0, 0, 0, 0});
    prow(m, 1, {2, 1, 0, 0, 0, 0});
    self_inverse(m);
    g["s0"] = m;
  }
  {
    ExtendedMap m = mk("s1");
    set_phase(m, Var::y, fy() - fa(1) / fx());
    prow(m, 0, {1, 1, 0, 0, 0, 0});
    prow(m, 1, {0, -1, 0, 0, 0, 0});
    prow(m, 2, {0, 1, 1, 0, 0, 0});
    self_inverse(m);
    g["s1"] = m;
  }
  {
    ExtendedMap m = mk("s2");
    const Fraction d = fy() + fw();
    set_phase(m, Var::x, fx() + fa(2) / d);
    set_phase(m, Var::z, fz() + fa(2) / d);
    prow(m, 1, {0, 1, 1, 0, 0, 0});
    prow(m, 2, {0, 0, -1, 0, 0, 0});
    prow(m, 3, {0, 0, 1, 1, 0, 0});
    self_inverse(m);
    g["s2"] = m;
  }
  {
    ExtendedMap m = mk("s3");
    const Fraction d = fz() * fq() - c(1);
    set_phase(m, Var::w, fw() - fa(3) * fq() / d);
    set_phase(m, Var::p, fp() - fa(3) * fz() / d);
    prow(m, 2, {0, 0, 1, 1, 0, 0});
    prow(m, 3, {0, 0, 0, -1, 0, 0});
    prow(m, 4, {0, 0, 0, 1, 1, 0});
    prow(m, 5, {0, 0, 0, 1, 0, 1});
    self_inverse(m);
    g["s3"] = m;
  }
  {
    ExtendedMap m = mk("s4");
    set_phase(m, Var::q, fq() + fa(4) / fp());
    prow(m, 3, {0, 0, 0, 1, 1, 0});
    prow(m, 4, {0, 0, 0, 0, -1, 0});
    self_inverse(m);
    g["s4"] = m;
  }
  {
    ExtendedMap m = mk("s5");
    set_phase(m, Var::q, fq() + fa(5) / (fp() - ft()));
    prow(m, 3, {0, 0, 0, 1, 0, 1});
    prow(m, 5, {0, 0, 0, 0, 0, -1});
    self_inverse(m);
    g["s5"] = m;
  }
  {
    ExtendedMap m = mk("phi");
    set_phase(m, Var::p, fp() - ft());
    flip_time(m);
    swap_params(m, 4, 5);
    self_inverse(m);
    g["phi"] = m;
  }
  return g;
}

MapTable build_b5b() {
  MapTable g;
  {
    ExtendedMap m = mk("s0");
    set_phase(m, Var::y, fy() - fa(0) / fx());
    prow(m, 0, {-1, 0, 0, 0, 0, 0});
    prow(m, 2, {1, 0, 1, 0, 0, 0});
    self_inverse(m);
    g["s0"] = m;
  }
  {
    ExtendedMap m = mk("s1");
    set_phase(m, Var::y, fy() - fa(1) / (fx() + c(1)));
    prow(m, 1, {0, -1, 0, 0, 0, 0});
    prow(m, 2, {0, 1, 1, 0, 0, 0});
    self_inverse(m);
    g["s1"] = m;
  }
  {
    ExtendedMap m = mk("s2");
    const Fraction d = fy() * fw() + c(1);
    set_phase(m, Var::x, fx() + fa(2) * fw() / d);
    set_phase(m, Var::z, fz() + fa(2) * fy() / d);
    prow(m, 0, {1, 0, 1, 0, 0, 0});
    prow(m, 1, {0, 1, 1, 0, 0, 0});
    prow(m, 2, {0, 0, -1, 0, 0, 0});
    prow(m, 3, {0, 0, 1, 1, 0, 0});
    self_inverse(m);
    g["s2"] = m;
  }
  {
    ExtendedMap m = mk("s3");
    const Fraction d = fz() - fq();
    set_phase(m, Var::w, fw() - fa(3) / d);
    set_phase(m, Var::p, fp() + fa(3) / d);
    prow(m, 2, {0, 0, 1, 1, 0, 0});
    prow(m, 3, {0, 0, 0, -1, 0, 0});
    prow(m, 4, {0, 0, 0, 1, 1, 0});
    self_inverse(m);
    g["s3"] = m;
  }
  {
    ExtendedMap m = mk("s4");
    set_phase(m, Var::q, fq() + fa(4) / fp());
    prow(m, 3, {0, 0, 0, 1, 1, 0});
    prow(m, 4, {0, 0, 0, 0, -1, 0});
    prow(m, 5, {0, 0, 0, 0, 1, 1});
    self_inverse(m);
    g["s4"] = m;
  }
  {
    ExtendedMap m = mk("s5");
    set_phase(m, Var::p,
              fp() - c(2) * fa(5) / fq() + ft() / (fq() * fq()));
    flip_time(m);
    prow(m, 4, {0, 0, 0, 0, 1, 2});
    prow(m, 5, {0, 0, 0, 0, 0, -1});
    self_inverse(m);
    g["s5"] = m;
  }
  {
    ExtendedMap m = mk("phi");
    negate_phase(m);
    set_phase(m, Var::x, -fx() - c(1));
    flip_time(m);
    swap_params(m, 0, 1);
    self_inverse(m);
    g["phi"] = m;
  }
  return g;
}

MapTable build_d62() {
  MapTable g;
  {
    ExtendedMap m = mk("s0");
    negate_phase(m);
    set_phase(m, Var::x, -fx() - c(2) * fa(0) / fy() + c(1) / (fy() * fy()));
    flip_time(m);
    prow(m, 0, {-1, 0, 0, 0, 0, 0});
    prow(m, 1, {2, 1, 0, 0, 0, 0});
    self_inverse(m);
    g["s0"] = m;
  }
  {
    ExtendedMap m = mk("s1");
    set_phase(m, Var::y, fy() - fa(1) / fx());
    prow(m, 0, {1, 1, 0, 0, 0, 0});
    prow(m, 1, {0, -1, 0, 0, 0, 0});
    prow(m, 2, {0, 1, 1, 0, 0, 0});
    self_inverse(m);
    g["s1"] = m;
  }
  {
    ExtendedMap m = mk("s2");
    const Fraction d = fy() + fw();
    set_phase(m, Var::x, fx() + fa(2) / d);
    set_phase(m, Var::z, fz() + fa(2) / d);
    prow(m, 1, {0, 1, 1, 0, 0, 0});
    prow(m, 2, {0, 0, -1, 0, 0, 0});
    prow(m, 3, {0, 0, 1, 1, 0, 0});
    self_inverse(m);
    g["s2"] = m;
  }
  {
    ExtendedMap m = mk("s3");
    const Fraction d = fz() - fq();
    set_phase(m, Var::w, fw() - fa(3) / d);
    set_phase(m, Var::p, fp() + fa(3) / d);
    prow(m, 2, {0, 0, 1, 1, 0, 0});
    prow(m, 3, {0, 0, 0, -1, 0, 0});
    prow(m, 4, {0, 0, 0, 1, 1, 0});
    self_inverse(m);
    g["s3"] = m;
  }
  {
    ExtendedMap m = mk("s4");
    set_phase(m, Var::q, fq() + fa(4) / fp());
    prow(m, 3, {0, 0, 0, 1, 1, 0});
    prow(m, 4, {0, 0, 0, 0, -1, 0});
    prow(m, 5, {0, 0, 0, 0, 1, 1});
    self_inverse(m);
    g["s4"] = m;
  }
  {
    ExtendedMap m = mk("s5");
    set_phase(m, Var::p,
              fp() - c(2) * fa(5) / fq() + ft() / (fq() * fq()));
    flip_time(m);
    prow(m, 4, {0, 0, 0, 0, 1, 2});
    prow(m, 5, {0, 0, 0, 0, 0, -1});
    self_inverse(m);
    g["s5"] = m;
  }
  {
    ExtendedMap m = mk("psi");
    set_phase(m, Var::x, -ft() * fp());
    set_phase(m, Var::y, fq() / ft());
    set_phase(m, Var::z, ft() * fw());
    set_phase(m, Var::w, -fz() / ft());
    set_phase(m, Var::q, -ft() * fy());
    set_phase(m, Var::p, fx() / ft());
    flip_time(m);
    reverse_params(m);
    self_inverse(m);
    g["psi"] = m;
  }
  return g;
}

MapTable build_a1() {
  MapTable g;
  // The scalar-family reflections are stored in their transport-consistent
  // form. The sign-mirrored variants (same parameter action, still
  // involutions, but not solution transports) circulate as well; they are
  // kept under *_mirror as negative controls.
  {
    ExtendedMap m = mk("s0");
    set_phase(m, Var::p, fp() - fa(0) / fq() + ft() / (fq() * fq()));
    flip_time(m);
    prow(m, 0, {-1, 0, 0, 0, 0, 0});
    prow(m, 1, {2, 1, 0, 0, 0, 0});
    self_inverse(m);
    g["s0"] = m;

    ExtendedMap mirror = mk("s0_mirror");
    set_phase(mirror, Var::p, fp() + fa(0) / fq() - ft() / (fq() * fq()));
    flip_time(mirror);
    prow(mirror, 0, {-1, 0, 0, 0, 0, 0});
    prow(mirror, 1, {2, 1, 0, 0, 0, 0});
    self_inverse(mirror);
    g["s0_mirror"] = mirror;
  }
  {
    ExtendedMap m = mk("s1");
    set_phase(m, Var::q, -fq() - fa(1) / fp() - c(1) / (fp() * fp()));
    set_phase(m, Var::p, -fp());
    flip_time(m);
    prow(m, 0, {1, 2, 0, 0, 0, 0});
    prow(m, 1, {0, -1, 0, 0, 0, 0});
    self_inverse(m);
    g["s1"] = m;

    ExtendedMap mirror = mk("s1_mirror");
    set_phase(mirror, Var::q, -fq() + fa(1) / fp() + c(1) / (fp() * fp()));
    set_phase(mirror, Var::p, -fp());
    flip_time(mirror);
    prow(mirror, 0, {1, 2, 0, 0, 0, 0});
    prow(mirror, 1, {0, -1, 0, 0, 0, 0});
    self_inverse(mirror);
    g["s1_mirror"] = mirror;
  }
  {
    ExtendedMap m = mk("sigma");
    set_phase(m, Var::q, ft() * fp());
    set_phase(m, Var::p, -fq() / ft());
    flip_time(m);
    swap_params(m, 0, 1);
    self_inverse(m);
    g["sigma"] = m;
  }
  {
    // pi is only ever presented as the composite sigma o s1
    ExtendedMap m = compose(g["sigma"], g["s1"]);
    m.name = "pi";
    set_inverse(m, compose(g["s1"], g["sigma"]));
    g["pi"] = m;
  }
  {
    ExtendedMap m = mk("tr1");
    set_phase(m, Var::q, ft() / fp());
    set_phase(m, Var::p, (fq() * fp() - fa(0)) * fp() / ft());
    ExtendedMap inv = mk("tr1^-1");
    set_phase(inv, Var::q, (fq() * fp() + fa(0)) * fq() / ft());
    set_phase(inv, Var::p, ft() / fq());
    set_inverse(m, inv);
    g["tr1"] = m;
  }
  {
    ExtendedMap m = mk("tr2");
    set_phase(m, Var::q, -ft() * fp());
    set_phase(m, Var::p, fq() / ft());
    ExtendedMap inv = mk("tr2^-1");
    set_phase(inv, Var::q, ft() * fp());
    set_phase(inv, Var::p, -fq() / ft());
    set_inverse(m, inv);
    g["tr2"] = m;
  }
  {
    ExtendedMap m = mk("tr3");
    set_phase(m, Var::q, fp() / ft());
    set_phase(m, Var::p, -ft() * fq());
    ExtendedMap inv = mk("tr3^-1");
    set_phase(inv, Var::q, -fp() / ft());
    set_phase(inv, Var::p, ft() * fq());
    set_inverse(m, inv);
    g["tr3"] = m;
  }
  return g;
}

const std::map<Group, MapTable>& map_catalog() {
  static const std::map<Group, MapTable> cat = [] {
    std::map<Group, MapTable> c;
    c[Group::D5] = build_d5();
    c[Group::B5a] = build_b5a();
    c[Group::B5b] = build_b5b();
    c[Group::D62] = build_d62();
    c[Group::A1] = build_a1();
    return c;
  }();
  return cat;
}

// --- charts ---

Chart chart(const std::string& name) {
  Chart c;
  c.name = name;
  for (std::size_t i = 0; i < kNumPhaseVars; ++i) {
    c.forward[i] = Fraction::variable(var_at(i));
    c.backward[i] = Fraction::variable(var_at(i));
  }
  return c;
}

void fwd(Chart& c, Var v, Fraction f) { c.forward[index_of(v)] = std::move(f); }
void bwd(Chart& c, Var v, Fraction f) { c.backward[index_of(v)] = std::move(f); }

// x0 = -(x y - a) y, y0 = 1/y (an involution).
Chart chart_flip_xy(const std::string& name, const Fraction& a) {
  Chart ch = chart(name);
  fwd(ch, Var::x, -(fx() * fy() - a) * fy());
  fwd(ch, Var::y, c(1) / fy());
  bwd(ch, Var::x, -(fx() * fy() - a) * fy());
  bwd(ch, Var::y, c(1) / fy());
  return ch;
}

// q4 = 1/q, p4 = -(p q + a4) q (an involution).
Chart chart_r4(const std::string& name) {
  Chart ch = chart(name);
  fwd(ch, Var::q, c(1) / fq());
  fwd(ch, Var::p, -(fp() * fq() + fa(4)) * fq());
  bwd(ch, Var::q, c(1) / fq());
  bwd(ch, Var::p, -(fp() * fq() + fa(4)) * fq());
  return ch;
}

// q5 = 1/q, p5 = -((p - t) q + a5) q.
Chart chart_r5_inverting(const std::string& name) {
  Chart ch = chart(name);
  fwd(ch, Var::q, c(1) / fq());
  fwd(ch, Var::p, -((fp() - ft()) * fq() + fa(5)) * fq());
  bwd(ch, Var::q, c(1) / fq());
  bwd(ch, Var::p, ft() - fa(5) * fq() - fp() * fq() * fq());
  return ch;
}

// x0 = x + 2 a0/y - 1/y^2 (additive shift).
Chart chart_r0_shift(const std::string& name) {
  Chart ch = chart(name);
  fwd(ch, Var::x, fx() + c(2) * fa(0) / fy() - c(1) / (fy() * fy()));
  bwd(ch, Var::x, fx() - c(2) * fa(0) / fy() + c(1) / (fy() * fy()));
  return ch;
}

// x1 = -((x+1) y - a1) y, y1 = 1/y.
Chart chart_r1_shifted(const std::string& name) {
  Chart ch = chart(name);
  fwd(ch, Var::x, -((fx() + c(1)) * fy() - fa(1)) * fy());
  fwd(ch, Var::y, c(1) / fy());
  bwd(ch, Var::x, fa(1) * fy() - fx() * fy() * fy() - c(1));
  bwd(ch, Var::y, c(1) / fy());
  return ch;
}

// x2 = 1/x, y2 = -((y + w) x + a2) x, z2 = z - x.
Chart chart_r2(const std::string& name) {
  Chart ch = chart(name);
  fwd(ch, Var::x, c(1) / fx());
  fwd(ch, Var::y, -((fy() + fw()) * fx() + fa(2)) * fx());
  fwd(ch, Var::z, fz() - fx());
  bwd(ch, Var::x, c(1) / fx());
  bwd(ch, Var::y, -fy() * fx() * fx() - fa(2) * fx() - fw());
  bwd(ch, Var::z, fz() + c(1) / fx());
  return ch;
}

// z3 = -((z - q) w - a3) w, w3 = 1/w, p3 = p + w.
Chart chart_r3(const std::string& name) {
  Chart ch = chart(name);
  fwd(ch, Var::z, -((fz() - fq()) * fw() - fa(3)) * fw());
  fwd(ch, Var::w, c(1) / fw());
  fwd(ch, Var::p, fp() + fw());
  bwd(ch, Var::z, fq() + fa(3) * fw() - fz() * fw() * fw());
  bwd(ch, Var::w, c(1) / fw());
  bwd(ch, Var::p, fp() - c(1) / fw());
  return ch;
}

// p5 = p - 2 a5/q + t/q^2 (additive shift).
Chart chart_r5_shift(const std::string& name) {
  Chart ch = chart(name);
  fwd(ch, Var::p, fp() - c(2) * fa(5) / fq() + ft() / (fq() * fq()));
  bwd(ch, Var::p, fp() + c(2) * fa(5) / fq() - ft() / (fq() * fq()));
  return ch;
}

using ChartTable = std::vector<Chart>;

const std::map<Group, ChartTable>& chart_catalog() {
  static const std::map<Group, ChartTable> cat = [] {
    std::map<Group, ChartTable> c;
    {
      ChartTable v;
      v.push_back(chart_flip_xy("r0", fa(0)));
      v.push_back(chart_r1_shifted("r1"));
      v.push_back(chart_r4("r4"));
      v.push_back(chart_r5_inverting("r5"));
      v.push_back(compose_charts(chart_r2("r2"), v[0], "r2_r0"));
      v.push_back(compose_charts(chart_r3("r3"), v[2], "r3_r4"));
      c[Group::D5] = v;
    }
    {
      ChartTable v;
      v.push_back(chart_r0_shift("r0"));
      v.push_back(chart_flip_xy("r1", fa(1)));
      v.push_back(chart_r2("r2"));
      v.push_back(chart_r4("r4"));
      v.push_back(chart_r5_inverting("r5"));
      v.push_back(compose_charts(chart_r3("r3"), v[3], "r3_r4"));
      c[Group::B5a] = v;
    }
    {
      ChartTable v;
      v.push_back(chart_flip_xy("r0", fa(0)));
      v.push_back(chart_r1_shifted("r1"));
      v.push_back(chart_r3("r3"));
      v.push_back(chart_r4("r4"));
      v.push_back(chart_r5_shift("r5"));
      v.push_back(compose_charts(chart_r2("r2"), v[0], "r2_r0"));
      c[Group::B5b] = v;
    }
    {
      ChartTable v;
      v.push_back(chart_r0_shift("r0"));
      v.push_back(chart_flip_xy("r1", fa(1)));
      v.push_back(chart_r2("r2"));
      v.push_back(chart_r3("r3"));
      v.push_back(chart_r4("r4"));
      v.push_back(chart_r5_shift("r5"));
      c[Group::D62] = v;
    }
    return c;
  }();
  return cat;
}

// --- Dynkin diagrams ---

CoxeterDiagram diagram(std::array<std::string, 6> labels,
                       std::vector<std::array<int, 3>> edges) {
  CoxeterDiagram d;
  d.node_labels = std::move(labels);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) d.order[i][j] = i == j ? 1 : 2;
  for (const auto& [i, j, m] : edges) {
    d.order[i][j] = m;
    d.order[j][i] = m;
  }
  return d;
}

const std::map<Group, CoxeterDiagram>& diagram_catalog() {
  static const std::map<Group, CoxeterDiagram> cat = [] {
    std::map<Group, CoxeterDiagram> c;
    c[Group::D5] = diagram({"x", "x+1", "yw+1", "zq-1", "p", "p-t"},
                           {{0, 2, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {3, 5, 3}});
    c[Group::B5a] = diagram({"", "x", "y+w", "zq-1", "p", "p-t"},
                            {{0, 1, 4}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {3, 5, 3}});
    c[Group::B5b] = diagram({"x", "x+1", "yw+1", "z-q", "p", ""},
                            {{0, 2, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 4}});
    c[Group::D62] = diagram({"", "x", "y+w", "z-q", "p", ""},
                            {{0, 1, 4}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 4}});
    return c;
  }();
  return cat;
}

// --- equivalences ---

std::map<std::string, Equivalence> build_equivalences() {
  std::map<std::string, Equivalence> eqs;
  {
    Equivalence e;
    e.id = "d5-b5a";
    e.source = Group::D5;
    e.target = Group::B5a;
    ExtendedMap m = mk("eq_d5_b5a");
    set_phase(m, Var::x, -(fx() * fy() - fa(0)) * fy());
    set_phase(m, Var::y, c(1) / fy());
    prow(m, 0, {0, 0, 0, 0, 0, 0});
    m.params.matrix[0][0] = Rational(-1, 2);
    m.params.matrix[0][1] = Rational(1, 2);
    prow(m, 1, {1, 0, 0, 0, 0, 0});
    ExtendedMap inv = mk("eq_d5_b5a^-1");
    set_phase(inv, Var::x, (fa(1) - fx() * fy()) * fy());
    set_phase(inv, Var::y, c(1) / fy());
    prow(inv, 0, {0, 1, 0, 0, 0, 0});
    prow(inv, 1, {2, 1, 0, 0, 0, 0});
    set_inverse(m, inv);
    e.map = m;
    e.correspondence = {{"s0", {"pi1"}}, {"s1", {"s0"}}, {"s2", {"s2"}},
                        {"s3", {"s3"}},  {"s4", {"s4"}}, {"s5", {"s5"}},
                        {"phi", {"pi2"}}};
    eqs[e.id] = e;
  }
  {
    Equivalence e;
    e.id = "d5-b5b";
    e.source = Group::D5;
    e.target = Group::B5b;
    ExtendedMap m = mk("eq_d5_b5b");
    set_phase(m, Var::q, c(1) / fq());
    set_phase(m, Var::p, -(fp() * fq() + fa(4)) * fq());
    prow(m, 5, {0, 0, 0, 0, 0, 0});
    m.params.matrix[5][4] = Rational(-1, 2);
    m.params.matrix[5][5] = Rational(1, 2);
    ExtendedMap inv = mk("eq_d5_b5b^-1");
    set_phase(inv, Var::q, c(1) / fq());
    set_phase(inv, Var::p, -fp() * fq() * fq() - fa(4) * fq());
    prow(inv, 5, {0, 0, 0, 0, 1, 2});
    set_inverse(m, inv);
    e.map = m;
    e.correspondence = {{"s0", {"s0"}}, {"s1", {"s1"}}, {"s2", {"s2"}},
                        {"s3", {"s3"}}, {"s4", {"s4"}}, {"s5", {"pi2"}},
                        {"phi", {"pi1"}}};
    eqs[e.id] = e;
  }
  {
    Equivalence e;
    e.id = "b5a-b5b";
    e.source = Group::B5a;
    e.target = Group::B5b;
    ExtendedMap m = mk("eq_b5a_b5b");
    set_phase(m, Var::x, -(fx() * fy() - fa(1)) * fy());
    set_phase(m, Var::y, c(1) / fy());
    set_phase(m, Var::q, c(1) / fq());
    set_phase(m, Var::p, -(fp() * fq() + fa(4)) * fq());
    prow(m, 0, {0, 1, 0, 0, 0, 0});
    prow(m, 1, {2, 1, 0, 0, 0, 0});
    prow(m, 5, {0, 0, 0, 0, 0, 0});
    m.params.matrix[5][4] = Rational(-1, 2);
    m.params.matrix[5][5] = Rational(1, 2);
    ExtendedMap inv = mk("eq_b5a_b5b^-1");
    set_phase(inv, Var::x, (fa(0) - fx() * fy()) * fy());
    set_phase(inv, Var::y, c(1) / fy());
    set_phase(inv, Var::q, c(1) / fq());
    set_phase(inv, Var::p, -fp() * fq() * fq() - fa(4) * fq());
    prow(inv, 0, {0, 0, 0, 0, 0, 0});
    inv.params.matrix[0][0] = Rational(-1, 2);
    inv.params.matrix[0][1] = Rational(1, 2);
    prow(inv, 1, {1, 0, 0, 0, 0, 0});
    prow(inv, 5, {0, 0, 0, 0, 1, 2});
    set_inverse(m, inv);
    e.map = m;
    eqs[e.id] = e;
  }
  {
    Equivalence e;
    e.id = "d5-d62";
    e.source = Group::D5;
    e.target = Group::D62;
    ExtendedMap m = mk("eq_d5_d62");
    set_phase(m, Var::x, -(fx() * fy() - fa(0)) * fy());
    set_phase(m, Var::y, c(1) / fy());
    set_phase(m, Var::q, c(1) / fq());
    set_phase(m, Var::p, -(fp() * fq() + fa(4)) * fq());
    prow(m, 0, {0, 0, 0, 0, 0, 0});
    m.params.matrix[0][0] = Rational(-1, 2);
    m.params.matrix[0][1] = Rational(1, 2);
    prow(m, 1, {1, 0, 0, 0, 0, 0});
    prow(m, 5, {0, 0, 0, 0, 0, 0});
    m.params.matrix[5][4] = Rational(-1, 2);
    m.params.matrix[5][5] = Rational(1, 2);
    ExtendedMap inv = mk("eq_d5_d62^-1");
    set_phase(inv, Var::x, (fa(1) - fx() * fy()) * fy());
    set_phase(inv, Var::y, c(1) / fy());
    set_phase(inv, Var::q, c(1) / fq());
    set_phase(inv, Var::p, -fp() * fq() * fq() - fa(4) * fq());
    prow(inv, 0, {0, 1, 0, 0, 0, 0});
    prow(inv, 1, {2, 1, 0, 0, 0, 0});
    prow(inv, 5, {0, 0, 0, 0, 1, 2});
    set_inverse(m, inv);
    e.map = m;
    e.correspondence = {{"s0", {"pi1"}}, {"s1", {"s0"}}, {"s2", {"s2"}},
                        {"s3", {"s3"}},  {"s4", {"s4"}}, {"s5", {"pi2"}},
                        {"psi", {"pi1", "pi2", "pi3"}}};
    eqs[e.id] = e;
  }
  return eqs;
}

const std::map<std::string, Equivalence>& equivalence_catalog() {
  static const std::map<std::string, Equivalence> cat = build_equivalences();
  return cat;
}

}  // namespace

const ExtendedMap& get_map(Group g, const std::string& name) {
  const auto& table = map_catalog().at(g);
  auto it = table.find(name);
  if (it == table.end())
    throw UnknownMap(std::string(to_string(g)) + "." + name);
  return it->second;
}

std::vector<std::string> generator_names(Group g) {
  if (g == Group::A1) return {"s0", "s1"};
  return {"s0", "s1", "s2", "s3", "s4", "s5"};
}

std::vector<std::string> extra_names(Group g) {
  switch (g) {
    case Group::D5: return {"pi1", "pi2", "pi3"};
    case Group::B5a: return {"phi"};
    case Group::B5b: return {"phi"};
    case Group::D62: return {"psi"};
    case Group::A1: return {"sigma", "pi"};
  }
  return {};
}

const CoxeterDiagram& get_diagram(Group g) {
  const auto& cat = diagram_catalog();
  auto it = cat.find(g);
  if (it == cat.end()) throw UnknownGroup(to_string(g));
  return it->second;
}

const Chart& get_chart(Group g, const std::string& name) {
  for (const Chart& c : chart_catalog().at(g))
    if (c.name == name) return c;
  throw UnknownChart(std::string(to_string(g)) + "." + name);
}

std::vector<std::string> chart_names(Group g) {
  std::vector<std::string> names;
  auto it = chart_catalog().find(g);
  if (it == chart_catalog().end()) return names;
  for (const Chart& c : it->second) names.push_back(c.name);
  return names;
}

const Equivalence& get_equivalence(const std::string& id) {
  const auto& cat = equivalence_catalog();
  auto it = cat.find(id);
  if (it == cat.end()) throw UnknownMap("equivalence " + id);
  return it->second;
}

std::vector<std::string> equivalence_ids() {
  return {"d5-b5a", "d5-b5b", "b5a-b5b", "d5-d62"};
}

}  // namespace painleve
