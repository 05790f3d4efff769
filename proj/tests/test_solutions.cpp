#include "z2sl/solutions.hpp"

#include <doctest.h>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>

using namespace z2sl;

namespace {

Eigen::MatrixXcd numeric(const GradedMatrix& m, const std::map<std::string, double>& v) {
  Eigen::MatrixXcd out(static_cast<long>(m.rows()), static_cast<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(static_cast<long>(i), static_cast<long>(j)) = evaluate(m.at(i, j), v);
  return out;
}

Eigen::MatrixXcd generator(const std::string& x) { return numeric(sixdim_from_action().at(x), {}); }

const CheckResult* find(const std::vector<CheckResult>& v, const std::string& id) {
  for (const auto& r : v)
    if (r.id == id) return &r;
  return nullptr;
}

}  // namespace

TEST_CASE("closed-form exponentials match expm") {
  const auto& cd = ChiralData::get();
  const std::map<std::string, double> v{{"f+", 0.7}, {"g+", -0.4}, {"q+", 1.3}, {"r+", 0.25}};
  struct Case {
    Field f;
    std::string x;
  };
  for (const auto& [f, x] : {Case{cd.plus.f, "K0"}, Case{cd.plus.g, "L0"}, Case{cd.plus.q, "K+"}, Case{cd.plus.r, "L+"},
                             Case{cd.plus.q, "K-"}, Case{cd.plus.r, "L-"}}) {
    Eigen::MatrixXcd expect = (v.at(f.name()) * generator(x)).exp();
    CHECK((numeric(sixdim_exp(var(f), x), v) - expect).norm() < 1e-12);
    Eigen::MatrixXcd inv = (-v.at(f.name()) * generator(x)).exp();
    CHECK((numeric(sixdim_exp(-var(f), x), v) - inv).norm() < 1e-12);
  }
}

TEST_CASE("lowest-weight matrix elements of e^{2 Phi} against expm") {
  Field p00 = declare_superfield("Phi00", kG00), p11 = declare_superfield("Phi11", kG11);
  for (auto [a, b] : {std::pair{0.3, -1.1}, std::pair{-0.8, 0.45}}) {
    Eigen::MatrixXcd e = (a * generator("K0") + b * generator("L0")).exp();
    CHECK(std::abs(e(kKet00, kKet00) - std::exp(-a) * std::cosh(b)) < 1e-12);
    CHECK(std::abs(e(kKet11, kKet00) + std::exp(-a) * std::sinh(b)) < 1e-12);
    GradedMatrix sym = sixdim_exp(var(p00), "K0") * sixdim_exp(var(p11), "L0");
    CHECK((numeric(sym, {{"Phi00", a}, {"Phi11", b}}) - e).norm() < 1e-12);
  }
}

TEST_CASE("bosonic reconstruction against a numeric group product") {
  const auto& cd = ChiralData::get();
  const std::map<std::string, double> v{{"f+", 0.2}, {"g+", 0.6},  {"q+", -0.9}, {"r+", 0.35},
                                        {"f-", -0.5}, {"g-", 0.15}, {"q-", 0.4},  {"r-", -0.7}};
  auto side = [&](bool plus, int s) {
    std::string p = plus ? "+" : "-";
    std::vector<std::pair<std::string, std::string>> fs{{"f", "K0"}, {"g", "L0"}, {"q", "K"}, {"r", "L"}};
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(6, 6);
    if (s > 0) {
      for (const auto& [f, x] : fs) out = out * (v.at(f + p) * generator(x == "K" || x == "L" ? x + p : x)).exp();
    } else {
      for (auto it = fs.rbegin(); it != fs.rend(); ++it)
        out = out * (-v.at(it->first + p) * generator(it->second == "K" || it->second == "L" ? it->second + p : it->second)).exp();
    }
    return out;
  };
  Eigen::MatrixXcd prod = side(false, 1) * side(true, -1);
  auto bos = [&](const GradedPoly& p) { return set_zero(p, {cd.plus.alpha, cd.plus.beta, cd.minus.alpha, cd.minus.beta}); };
  CHECK(std::abs(prod(kKet00, kKet00) - evaluate(bos(solution_cosh()), v)) < 1e-12);
  CHECK(std::abs(prod(kKet11, kKet00) + evaluate(bos(solution_sinh()), v)) < 1e-12);
  GradedMatrix sym = chiral_group_element(false) * chiral_group_element_inverse(true);
  CHECK(std::abs(evaluate(bos(sym.at(kKet00, kKet00)), v) - prod(kKet00, kKet00)) < 1e-12);
}

TEST_CASE("chiral constraints") {
  const auto& cd = ChiralData::get();
  RewriteSystem rs = chiral_constraints();
  CHECK(apply_D(Deriv::DMinus, var(cd.plus.alpha)).is_zero());
  GradedPoly dq = rs.reduce(apply_D(Deriv::DPlus, var(cd.plus.q)));
  GradedPoly da = rs.reduce(apply_D(Deriv::DPlus, var(cd.plus.alpha)));
  GradedPoly db = rs.reduce(apply_D(Deriv::DPlus, var(cd.plus.beta)));
  CHECK(rs.reduce(dq + da * var(cd.plus.alpha) + db * var(cd.plus.beta)).is_zero());
  CHECK(da == exp_of(LinearArg::of(cd.plus.f, -1)) * cosh_of(LinearArg::of(cd.plus.g)));
  for (const auto& r : verify_constraint_consistency()) CHECK_MESSAGE(r.pass, r.id);
}

TEST_CASE("derivative identities") {
  for (const auto& r : verify_dw_identities()) CHECK_MESSAGE(r.pass, r.id << " " << r.residual);
}

TEST_CASE("altered W00 breaks the derivative identity") {
  const auto& cd = ChiralData::get();
  const auto& x = SolutionExpr::get();
  RewriteSystem rs = chiral_constraints();
  GradedPoly wrong = x.W00 + GradedPoly(2) * var(cd.plus.q) * var(cd.minus.q);
  GradedPoly da = rs.reduce(apply_D(Deriv::DPlus, var(cd.plus.alpha)));
  GradedPoly db = rs.reduce(apply_D(Deriv::DPlus, var(cd.plus.beta)));
  CHECK_FALSE(rs.reduce(apply_D(Deriv::DPlus, wrong) - (x.Am * da - x.Bm * db)).is_zero());
}

TEST_CASE("solution satisfies the field equations") {
  auto v = verify_solution();
  for (const auto& r : v) CHECK_MESSAGE(r.pass, r.id << " " << r.residual);
  const CheckResult* rhs = find(v, "solution.eom11.rhs");
  REQUIRE(rhs != nullptr);
  CHECK(rhs->note.find("sinh Phi11 closes") != std::string::npos);
}

TEST_CASE("lowest-weight projection and audits") {
  for (const auto& r : verify_lowest_weight_projection()) CHECK_MESSAGE(r.pass, r.id << " " << r.residual);
  auto all = verify_solutions();
  CHECK(all_pass(all));
  CHECK(find(all, "audit.nilpotency") != nullptr);
}
