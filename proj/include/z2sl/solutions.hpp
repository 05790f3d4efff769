#pragma once

// General solution of the graded super-Liouville equation from chiral data:
// constraint rewrites, the W00 / W11 combinations and the verification chain
// in the ring localized at U = W00^2 - W11^2.

#include "z2sl/check.hpp"
#include "z2sl/reduce.hpp"
#include "z2sl/representations.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace z2sl {

/// Chiral superfields of one light-cone side.
struct ChiralSide {
  Field f, g, q, r, alpha, beta;  // [00] [11] [00] [11] [10] [01]
};

struct ChiralData {
  ChiralSide plus, minus;
  static const ChiralData& get();
  const ChiralSide& side(bool plus_side) const { return plus_side ? plus : minus; }
};

/// D+- alpha+-, D+- beta+-, D+- q+- and D+- r+- rules.
RewriteSystem chiral_constraints();

struct SolutionExpr {
  GradedPoly Rp, Rm;        // R+- = r+- +- i alpha+- beta+-
  GradedPoly W00, W11;
  GradedPoly Ap, Am, Bp, Bm;
  GradedPoly D00, D11;      // unreduced products of first derivatives
  GradedPoly C, S;          // cosh(g+ - g-), sinh(g+ - g-)
  GradedPoly E;             // exp(f+ - f-)
  GradedPoly U;             // W00^2 - W11^2
  const NamedPoly* invU = nullptr;
  static const SolutionExpr& get();
};

/// Right-hand sides of e^{-Phi00} cosh Phi11 and e^{-Phi00} sinh Phi11.
GradedPoly solution_cosh();
GradedPoly solution_sinh();

std::vector<CheckResult> verify_constraint_consistency();
std::vector<CheckResult> verify_dw_identities();
std::vector<CheckResult> verify_solution();
std::vector<CheckResult> verify_lowest_weight_projection();
/// All of the above in order, followed by the grading and nilpotency audits.
std::vector<CheckResult> verify_solutions();

/// exp(c X) in the six-dimensional representation for a basis generator X.
/// Uses the finite series when rho(X) is nilpotent and the closed form
/// 1 + sinh(c) N + (cosh(c) - 1) N^2 when N = rho(X) satisfies N^3 = N.
GradedMatrix sixdim_exp(const GradedPoly& c, std::string_view x);
/// B+- = e^{f K0} e^{g L0} e^{q K+-} e^{r L+-} e^{alpha P+-} e^{beta Q+-}.
GradedMatrix chiral_group_element(bool plus_side);
/// Inverse of chiral_group_element, as the reversed product of inverse factors.
GradedMatrix chiral_group_element_inverse(bool plus_side);
/// Row / column of the kets |00> and |11> in the six-dimensional representation.
inline constexpr std::size_t kKet00 = 1;
inline constexpr std::size_t kKet11 = 3;

}  // namespace z2sl
