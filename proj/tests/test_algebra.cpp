#include "doctest.h"
#include "z2sl/algebra.hpp"

using namespace z2sl;

namespace {
ScalarVec br(const AlgebraBasis& b, const char* x, const char* y) { return b.bracket(b.index(x), b.index(y)); }
ScalarVec vec(const AlgebraBasis& b, const char* x, Scalar c) { return ScalarVec{{b.index(x), c}}; }
}  // namespace

TEST_CASE("defining relations") {
  const auto& g = z2_osp();
  const Scalar i = Scalar::i();
  CHECK(br(g, "P+", "P+") == vec(g, "K+", 2));
  CHECK(br(g, "P+", "Q-") == vec(g, "L0", i));
  CHECK(br(g, "K+", "K+").empty());
  CHECK(br(g, "Q-", "P+") == vec(g, "L0", -i));  // commutator, [10].[01] = 0
  CHECK(br(g, "P-", "P+") == vec(g, "K0", 1));   // anticommutator
  CHECK(br(g, "L-", "L+") == vec(g, "K0", -1));
  CHECK(br(g, "L0", "P+") == vec(g, "Q+", i));  // {P+, L0} symmetric
  CHECK(br(g, "K0", "L0").empty());
}

TEST_CASE("axioms on the ten-dimensional algebra") {
  const auto& g = z2_osp();
  auto j = check_jacobi(g);
  CHECK(j.checked == 1000);
  CHECK_MESSAGE(j.ok(), (j.failures.empty() ? "" : j.failures.front()));
  auto s = check_symmetry(g);
  CHECK(s.checked == 100);
  CHECK(s.ok());
  auto d = check_dimensions(g, "K0");
  CHECK_MESSAGE(d.ok(), (d.failures.empty() ? "" : d.failures.front()));
  CHECK(check_closure(g, {"K0", "K+", "K-", "L0", "L+", "L-"}).ok());
  CHECK(check_closure(g, {"K0", "K+", "K-"}).ok());
  CHECK(!check_closure(g, {"P+", "Q+"}).ok());
}

TEST_CASE("axioms on osp(1|2)") {
  const auto& o = osp12();
  auto j = check_jacobi(o);
  CHECK(j.checked == 125);
  CHECK(j.ok());
  CHECK(check_symmetry(o).ok());
  CHECK(check_dimensions(o, "H").ok());
}

TEST_CASE("a corrupted table fails Jacobi") {
  AlgebraBasis g = z2_osp();
  g.set_bracket("P+", "Q-", {{"L0", Scalar(2) * Scalar::i()}});
  CHECK(!check_jacobi(g).ok());
}

TEST_CASE("loop algebra") {
  const auto& g = z2_osp();
  auto r = check_loop_axioms(g, 1);
  CHECK(r.ok());
  LoopVec x{{{g.index("P+"), 1}, 1}}, y{{{g.index("P-"), -1}, 1}};
  CHECK(loop_bracket(g, x, y) == LoopVec{{{g.index("K0"), 0}, 1}});
}

TEST_CASE("JSON round trip") {
  const auto& g = z2_osp();
  AlgebraBasis back = AlgebraBasis::from_json(g.json());
  CHECK(back == g);
  CHECK(AlgebraBasis::from_json(osp12().json()) == osp12());
}

TEST_CASE("elements with ring coefficients") {
  const auto& g = z2_osp();
  Field psi = declare_superfield("apsi", kG10);
  Field chi = declare_superfield("achi", kG01);
  AlgebraElement a(&g, "K+", jet(psi));  // [10] coefficient on [00]
  AlgebraElement b(&g, "P-", jet(chi));
  // [[psi K+, chi P-]] = sign(K+, chi) psi chi [[K+, P-]] = -psi chi P+
  AlgebraElement ab = bracket(a, b);
  CHECK(ab == AlgebraElement(&g, "P+", -(jet(psi) * jet(chi))));
  CHECK(ab.grade() == kG10 + kG01 + kG10);
  // graded symmetry of total elements
  AlgebraElement ba = bracket(b, a);
  CHECK(ab + GradedPoly(Scalar(grade_sign(a.grade(), b.grade()))) * ba == AlgebraElement(&g));
  AlgebraElement c(&g, "P+", jet(psi));  // total grade [00]
  CHECK(c.grade() == kG00);
  CHECK(!(c + a).is_homogeneous());
}
