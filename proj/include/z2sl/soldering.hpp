#pragma once

// Group element, WZNW currents, Hamiltonian constraints and component
// expansion of the graded super-Liouville system; current variations and
// gauge reduction.

#include "z2sl/check.hpp"
#include "z2sl/reduce.hpp"
#include "z2sl/representations.hpp"

#include <array>
#include <string>
#include <vector>

namespace z2sl {

/// How ring coefficients pass the M matrices.
/// Graded: M_k carries the grading of its index, (c M_k)(d M_l) = sign(M_k, d) c d M_k M_l.
/// Plain: coefficients commute with the M matrices.
enum class MConvention { Graded, Plain };

/// M-algebra valued ring elements sum_k c_k M_k, realized as 4x4 matrices.
class MAlgebra {
 public:
  explicit MAlgebra(MConvention conv) : conv_(conv) {}
  MConvention convention() const { return conv_; }

  GradedMatrix make(const std::array<GradedPoly, 4>& c) const;
  GradedMatrix scalar(const GradedPoly& c) const { return make({c, 0, 0, 0}); }
  /// Coefficients c_0..c_3; throws if m is not in the image of make.
  std::array<GradedPoly, 4> coords(const GradedMatrix& m) const;
  /// Derivative compatible with make: D(make(c)) = make(D c) for odd or even D.
  GradedMatrix D(Deriv d, const GradedMatrix& m) const;
  /// Same, on a 12x12 matrix of the tensor space.
  GradedMatrix D12(Deriv d, const GradedMatrix& m) const;
  /// Row gradings of the 4-dim M space.
  static const std::array<GradeVec, 4>& row_grades();

 private:
  MConvention conv_;
};

struct SolderingFields {
  Field a00, a11, l10, l01, b00, b11, m10, m01, c00, c11;  // alpha, lambda, beta, mu, gamma
  static const SolderingFields& get();
};

/// The five M-valued group coordinates a, b, c, d, f.
struct GroupCoords {
  GradedMatrix a, b, c, d, f;
};
GroupCoords group_coords(const MAlgebra& M);
/// e^{k c} for the Cartan coordinate c = beta00 M0 + beta11 M3.
GradedMatrix exp_cartan(const MAlgebra& M, int k);

/// Components J_{++}, J_+, J_0, J_-, J_{--} as M-valued 4x4 matrices.
struct CurrentComponents {
  GradedMatrix pp, p, zero, m, mm;
};

/// J = D g g^-1 (holomorphic) or g^-1 Dbar g, decomposed along E+, F+, H, F-, E-.
/// Residue entries of the 3x3 block structure are reported through `residue_ok`.
struct Currents {
  CurrentComponents J, Jbar;
  bool residue_ok = false;
};
Currents derive_wznw_currents(const MAlgebra& M);
/// Reference component formulas.
CurrentComponents displayed_currents(const MAlgebra& M, bool holomorphic);
/// Closed forms that reproduce derive_wznw_currents in the graded convention.
CurrentComponents closed_form_currents(const MAlgebra& M, bool holomorphic);
/// Coefficients of an M-valued matrix as "M0: ... ; M3: ..." text.
std::string m_text(const MAlgebra& M, const GradedMatrix& m);

std::vector<CheckResult> verify_currents(MConvention conv);
std::vector<CheckResult> verify_master_equation(MConvention conv);
std::vector<CheckResult> verify_components();
/// Holomorphic component currents u and parameters varepsilon of the gauge-fixed system.
struct UFields {
  Field u00, u11, u10, u01, v00, v11, v10, v01;
  static const UFields& get();
};
/// Printed variations {delta u10, delta u00, delta u01, delta u11}.
std::array<GradedPoly, 4> printed_u_transformations();

std::vector<CheckResult> verify_current_variation();
std::vector<CheckResult> verify_gauge_reduction();

/// Component fields of the two superfields: phi00 psi10 psibar10 F00 and
/// phi11 psi01 psibar01 F11.
struct ComponentFields {
  Field phi00, psi10, psib10, F00, phi11, psi01, psib01, F11;
  static const ComponentFields& get();
};

/// Printed component equations, each as lhs - rhs.
struct PrintedComponents {
  GradedPoly box00, dpsi10, dpsib10, aux00, box11, dpsi01, dpsib01, aux11;
  GradedPoly box00_elim, box11_elim;  // auxiliary fields eliminated
};
PrintedComponents printed_components();
/// Replaces F00, F11 by their algebraic solutions.
GradedPoly eliminate_aux(const GradedPoly& p);
/// The component equations as rewrite rules (auxiliary fields eliminated):
/// d+d- phi -> rhs, d- psi -> rhs, d+ psibar -> rhs.
RewriteSystem component_equations();

}  // namespace z2sl
