#include "doctest.h"
#include "z2sl/lax.hpp"
#include "z2sl/soldering.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <set>

using namespace z2sl;

namespace {
std::set<std::string> failing(const std::vector<CheckResult>& v) {
  std::set<std::string> out;
  for (const auto& r : v)
    if (!r.pass) out.insert(r.id + " " + r.residual);
  return out;
}
}  // namespace

TEST_CASE("variant names") {
  CHECK(parse_variant("Spectral") == LaxVariant::Spectral);
  CHECK(variant_name(LaxVariant::Alternative) == "alternative");
  CHECK_THROWS(parse_variant("loop"));
}

TEST_CASE("superspace Lax pair") {
  const auto& f = LaxFields::get();
  LaxPair lp = build_lax(LaxVariant::Superspace);
  auto vac = lp.first.map([&](const GradedPoly& p) { return set_zero(p, {f.Phi00, f.Phi11}); });
  CHECK(vac == AlgebraElement(&z2_osp(), "P+"));
  CHECK(failing(verify_lax(LaxVariant::Superspace)).empty());
  CHECK(failing(verify_a_identities()).empty());
}

TEST_CASE("A00^2 - A11^2 = e^Phi00 numerically") {
  const auto& f = LaxFields::get();
  GradedPoly a0 = exp_of(LinearArg::of(f.Phi00, mpq_class(1, 2))) * cosh_of(LinearArg::of(f.Phi11, mpq_class(1, 2)));
  GradedPoly a1 = exp_of(LinearArg::of(f.Phi00, mpq_class(1, 2))) * sinh_of(LinearArg::of(f.Phi11, mpq_class(1, 2)));
  for (double x : {-0.7, 0.3, 1.9})
    for (double y : {-1.1, 0.4, 2.2}) {
      std::map<std::string, double> v{{"Phi00", x}, {"Phi11", y}};
      CHECK(std::abs(evaluate(a0 * a0 - a1 * a1, v) - std::exp(x)) < 1e-12);
    }
}

TEST_CASE("adjoint action against a matrix exponential") {
  // graded six-dimensional images evaluated at numeric field values
  const auto& f = LaxFields::get();
  MatrixRep rep = sixdim_from_action();
  const auto& kets = sixdim_ket_grades();
  const double x = 0.37, y = -0.81;
  std::map<std::string, double> v{{"Phi00", x}, {"Phi11", y}};
  auto num = [&](const AlgebraElement& e) {
    GradedMatrix m = represent(e, rep, kets);
    Eigen::MatrixXcd out(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) out(static_cast<long>(i), static_cast<long>(j)) = evaluate(m.at(i, j), v);
    return out;
  };
  const AlgebraBasis* b = &z2_osp();
  GradedPoly h(Scalar::rational(1, 2));
  Eigen::MatrixXcd phi = num(AlgebraElement(b, "K0", h * var(f.Phi00)) + AlgebraElement(b, "L0", h * var(f.Phi11)));
  for (auto [name, s] : {std::pair{"P+", 1}, std::pair{"P-", -1}, std::pair{"Q+", 1}, std::pair{"Q-", -1}}) {
    Eigen::MatrixXcd lhs = (double(s) * phi).exp() * num(AlgebraElement(b, name)) * (-double(s) * phi).exp();
    AdjointExp a = adjoint_exp(f.Phi00, f.Phi11, s, name);
    CHECK(a.cartan_scalar);
    CHECK(a.two_step);
    CHECK((lhs - num(a.value)).norm() < 1e-12);
  }
}

TEST_CASE("alternative Lax pair") {
  auto r = verify_lax(LaxVariant::Alternative);
  CHECK(failing(r).empty());
  LaxPair lp = build_lax(LaxVariant::Alternative);
  CHECK(lp.second.grade() == kG01);
}

TEST_CASE("spectral Lax pair") {
  const auto& c = ComponentFields::get();
  LambdaChoice plain{var(c.psi10), var(c.psi01), "plain"};
  LaxPair lp = build_lax(LaxVariant::Spectral, plain);
  CHECK(lp.first.coefficient("K+") == GradedPoly(-Scalar::i()) * lambda_pow(2));
  auto [pp, pm] = printed_spectral_matrices(plain);
  CHECK(pp.at(0, 1) == GradedPoly(-Scalar::i()) * lambda_pow(2));
  CHECK(pm.at(1, 0) == GradedPoly(Scalar::i()) * lambda_pow(-2) * exp_of(LinearArg::of(c.phi00, 2)) *
                           cosh_of(LinearArg::of(c.phi11, 2)));
  SpectralSearch s = search_lambda();
  CHECK(s.survivors.empty());
  REQUIRE(s.ansatz.size() == 2);
  CHECK_FALSE(s.ansatz[0].consistent);
  REQUIRE(s.ansatz[1].solution);
  GradedPoly ch = cosh_of(LinearArg::of(c.phi11)), sh = sinh_of(LinearArg::of(c.phi11));
  CHECK(s.ansatz[1].solution->l10 == ch * var(c.psi10) - sh * var(c.psi01));
  CHECK(s.ansatz[1].solution->l01 == ch * var(c.psi01) - sh * var(c.psi10));
  CHECK(failing(verify_spectral_matrices()).empty());
  CHECK_FALSE(spectral_on_shell_residual(plain, Orientation::XMinus).is_zero());
  CHECK(spectral_on_shell_residual(*s.ansatz[1].solution, Orientation::XMinus).is_zero());
}
