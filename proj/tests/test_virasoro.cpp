#include "doctest.h"
#include "z2sl/soldering.hpp"
#include "z2sl/virasoro.hpp"

#include <set>

using namespace z2sl;

namespace {
std::set<std::string> failing(const std::vector<CheckResult>& v) {
  std::set<std::string> out;
  for (const auto& r : v)
    if (!r.pass) out.insert(r.id + " " + r.residual);
  return out;
}

GradedPoly d(Field f, int n = 0) { return jet(f, n); }

ModeVec jacobi(const ModeAlgebra& m, const Mode& a, const Mode& b, const Mode& c) {
  ModeVec lhs = m.bracket(a, m.bracket(b, c));
  ModeVec r1 = m.bracket(m.bracket(a, b), c);
  ModeVec r2 = m.bracket(b, m.bracket(a, c));
  Scalar s(grade_sign(current_grade(a.family), current_grade(b.family)));
  ModeVec out = lhs;
  for (const auto& [k, v] : r1.modes) out.add(k, -v);
  for (const auto& [k, v] : r2.modes) out.add(k, -s * v);
  out.central = lhs.central - r1.central - s * r2.central;
  return out;
}
}  // namespace

TEST_CASE("smearing against delta derivatives") {
  Field g = declare_component("vg", kG00, Chirality::PlusOnly);
  Field u = declare_component("vu", kG00, Chirality::PlusOnly);
  DistExpr e;
  e.add(1, d(u));
  CHECK(smear(d(g), e) == -(d(g, 1) * d(u) + d(g) * d(u, 1)));
  DistExpr c;
  c.add(3, GradedPoly(Scalar::rational(1, 2)));
  CHECK(smear(d(g), c) == GradedPoly(Scalar::rational(-1, 2)) * d(g, 3));
}

TEST_CASE("flip rule agrees with integration by parts") {
  // g(y) c(x) delta^(m)(x - y) integrates to c(x) g^(m)(x)
  Field g = declare_component("vg", kG00, Chirality::PlusOnly);
  Field c = declare_component("vc", kG10, Chirality::PlusOnly);
  for (int m = 0; m <= 4; ++m) {
    DistExpr e;
    e.add(m, d(c));
    CHECK(smear(d(g), e.flipped()) == d(g, m) * d(c));
    CHECK(e.flipped().flipped() == e);
  }
}

TEST_CASE("ansatz coefficients") {
  AnsatzSolution s = solve_ansatz();
  CHECK(s.consistent);
  CHECK(s.unique);
  CHECK(s.factorizes);
  CHECK(s.unknown_products == 32);
  CHECK(s.values.at("k1") == Scalar::i());
  CHECK(s.values.at("k4") == -Scalar::i());
  CHECK(s.values.at("a3") == Scalar::rational(-1, 2));
  CHECK(s.values.at("c3") == Scalar::rational(1, 2) * Scalar::i());
  CHECK(s.values.at("b5") == Scalar::rational(-3, 2));
  CHECK(s.products.at("k1*a5") == -2 * Scalar::i());
  CHECK(s.products.at("k2*b2") == -2 * Scalar::i());
  auto r = verify_ansatz();
  CHECK(failing(r).empty());
  CHECK(r.size() == 36);
}

TEST_CASE("ansatz with wrong coefficients does not reproduce the transformations") {
  auto t = printed_coefficients();
  t["a7"] = GradedPoly(-1);
  CurrentAlgebra alg(t);
  CHECK_FALSE((alg.transformation(Current::U00) - printed_transformation(Current::U00)).is_zero());
  CHECK((alg.transformation(Current::U11) - printed_transformation(Current::U11)).is_zero());
}

TEST_CASE("current algebra") {
  auto r = verify_current_algebra();
  CHECK(failing(r).empty());
  CurrentAlgebra alg(printed_coefficients());
  const auto& u = UFields::get();
  DistExpr want;
  want.add(0, Scalar::rational(1, 2) * Scalar::i() * d(u.u11));
  CHECK(alg.bracket(Current::U01, Current::U10) == want);
  // reversed orientation: {u10(y), u01(x)} = -(i/2) u11(y) delta
  DistExpr rev;
  rev.add(0, Scalar::rational(-1, 2) * Scalar::i() * d(u.u11));
  CHECK(alg.bracket(Current::U10, Current::U01) == rev);
  // {u00, u00} is odd under the flip
  DistExpr e = alg.bracket(Current::U00, Current::U00);
  CHECK(GradedPoly(-1) * e.flipped() == e);
}

TEST_CASE("mode brackets") {
  CurrentAlgebra alg(printed_coefficients());
  ModeAlgebra rrr(alg, Sector::RRR);
  ModeVec l = rrr.bracket(Mode{Current::U00, 2}, Mode{Current::U00, -2});
  CHECK(l.modes.at(Mode{Current::U00, 0}) == -2 * Scalar::i());
  CHECK(l.central == Scalar::rational(1, 2) * Scalar::i());
  ModeAlgebra ns(alg, Sector::RNSNS);
  ModeVec g = ns.bracket(Mode{Current::U10, 1}, Mode{Current::U10, -1});
  CHECK(g.modes.at(Mode{Current::U00, 0}) == Scalar::rational(-1, 2) * Scalar::i());
  CHECK(g.central == Scalar::rational(1, 8) * Scalar::i());
  // {F_s, F_-s} central -(i/2) s^2
  ModeVec f = rrr.bracket(Mode{Current::U01, 4}, Mode{Current::U01, -4});
  CHECK(f.central == Scalar(-2) * Scalar::i());
  CHECK(ns.window_modes(2).size() == 5 + 5 + 4 + 4);
  CHECK(parse_sector("NS/NS/R") == Sector::NSNSR);
  CHECK_THROWS(parse_sector("nsns"));
  for (Sector s : {Sector::RRR, Sector::RNSNS, Sector::NSNSR}) CHECK(failing(verify_mode_algebra(s, 4)).empty());
}

TEST_CASE("mode Jacobi identity") {
  for (Sector s : {Sector::RRR, Sector::RNSNS, Sector::NSNSR}) {
    auto rep = check_mode_jacobi(s, 3);
    CHECK(rep.ok());
    CHECK(rep.degree_bound == 4);
    CHECK(rep.triples > 0);
  }
  CHECK_THROWS(check_mode_jacobi(Sector::RRR, 1));
}

TEST_CASE("Jacobi detects a broken conformal weight") {
  auto t = printed_coefficients();
  t["a7"] = GradedPoly(-1);
  CurrentAlgebra alg(t);
  ModeAlgebra m(alg, Sector::RRR);
  bool broken = false;
  for (int n = -4; n <= 4; n += 2)
    for (int k = -4; k <= 4; k += 2)
      if (!jacobi(m, Mode{Current::U10, n}, Mode{Current::U10, k}, Mode{Current::U00, 2}).is_zero()) broken = true;
  CHECK(broken);
  ModeAlgebra ok(CurrentAlgebra(printed_coefficients()), Sector::RRR);
  CHECK(jacobi(ok, Mode{Current::U00, 4}, Mode{Current::U00, -4}, Mode{Current::U00, 0}).is_zero());
}
