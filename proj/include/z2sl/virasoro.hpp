#pragma once

// Distributional Poisson brackets of the gauge-fixed currents u00, u11, u10,
// u01: the bracket Ansatz and its coefficients, the current algebra, the mode
// algebra in the three boundary sectors and its graded Jacobi identity.

#include "z2sl/check.hpp"
#include "z2sl/ring.hpp"

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace z2sl {

enum class Current { U00, U11, U10, U01 };
constexpr std::array<Current, 4> kCurrents{Current::U00, Current::U11, Current::U10, Current::U01};
GradeVec current_grade(Current c);
std::string current_name(Current c);
Field current_field(Current c);
/// Parameter component paired with a current in K(y).
Field parameter_field(Current c);

/// sum_m c_m(y) delta^(m)(y - x), c_m polynomial in y-jets of the currents.
class DistExpr {
 public:
  DistExpr() = default;
  void add(int m, const GradedPoly& c);
  const std::map<int, GradedPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// The same distribution written about the other point:
  /// sum_m c_m(x) delta^(m)(x - y) -> sum_m sum_k (-1)^m C(m,k) c_m^(k)(y) delta^(m-k)(y - x).
  DistExpr flipped() const;

  DistExpr& operator+=(const DistExpr& o);
  friend DistExpr operator+(DistExpr a, const DistExpr& b) { return a += b; }
  friend DistExpr operator*(const GradedPoly& s, const DistExpr& e);
  friend bool operator==(const DistExpr& a, const DistExpr& b) { return a.terms_ == b.terms_; }
  std::string str() const;

 private:
  std::map<int, GradedPoly> terms_;
};

/// (1/2pi) oint dy g(y) e(y, x) = sum_m (-1)^m (g c_m)^(m)(x).
GradedPoly smear(const GradedPoly& profile, const DistExpr& e);

/// Names k1..k4, a1..a9, b1..b7, c1..c3, d1, d2.
const std::vector<std::string>& ansatz_unknowns();
using CoefficientTable = std::map<std::string, GradedPoly>;
/// Every unknown as a formal parameter.
CoefficientTable symbolic_coefficients();
/// The printed solution.
CoefficientTable printed_coefficients();

/// Current algebra {u_a(y), u_b(x)} built from the Ansatz with the given coefficients.
class CurrentAlgebra {
 public:
  explicit CurrentAlgebra(CoefficientTable coefficients);
  /// The ten Ansatz brackets in their printed orientation.
  static const std::vector<std::pair<Current, Current>>& ansatz_pairs();
  /// Any ordered pair; reversed pairs use graded antisymmetry and flipped().
  DistExpr bracket(Current a, Current b) const;
  /// delta u_b(x) generated by K(y) = sum_j k_j eps_j u_j.
  GradedPoly transformation(Current b) const;
  const CoefficientTable& coefficients() const { return coef_; }

 private:
  CoefficientTable coef_;
  std::map<std::pair<Current, Current>, DistExpr> table_;
};

/// Printed component transformations of the currents.
GradedPoly printed_transformation(Current b);

struct AnsatzSolution {
  std::map<std::string, Scalar> values;    // k1..d2
  std::map<std::string, Scalar> products;  // "k1*a2" -> value
  std::size_t equations = 0;
  std::size_t unknown_products = 0;
  bool consistent = false;  // linear system solvable
  bool unique = false;      // every product pinned
  bool factorizes = false;  // products = k_j * x with k1 = i
  std::vector<std::string> notes;
};
/// Matches smeared K(y) against the printed transformations, solves the linear
/// system in the products k_j x and factors it with the normalization k1 = i.
AnsatzSolution solve_ansatz();

std::vector<CheckResult> verify_ansatz();
std::vector<CheckResult> verify_current_algebra();

// ---- modes ------------------------------------------------------------------

enum class Sector { RRR, RNSNS, NSNSR };
std::string sector_name(Sector s);
/// Accepts rrr, rnsns, nsnsr (any case).
Sector parse_sector(std::string_view s);
/// True when the family's indices are half-integers in this sector.
bool half_integer(Sector s, Current c);

struct Mode {
  Current family;
  int twice;  // twice the index
  friend auto operator<=>(const Mode&, const Mode&) = default;
};
std::string mode_name(const Mode& m);

/// Linear combination of modes plus a central constant.
struct ModeVec {
  std::map<Mode, Scalar> modes;
  Scalar central;
  void add(const Mode& m, const Scalar& c);
  bool is_zero() const { return modes.empty() && central.is_zero(); }
  friend bool operator==(const ModeVec&, const ModeVec&) = default;
  std::string str() const;
};

struct ModeTable;

class ModeAlgebra {
 public:
  ModeAlgebra(const CurrentAlgebra& currents, Sector sector);
  Sector sector() const { return sector_; }
  /// Double residue of {u_a(y), u_b(x)} against e^{-i n y} e^{-i n' x}.
  ModeVec bracket(const Mode& a, const Mode& b) const;
  ModeVec bracket(const ModeVec& a, const Mode& b) const;
  ModeVec bracket(const Mode& a, const ModeVec& b) const;
  /// Modes with |index| <= window in the sector's index domains.
  std::vector<Mode> window_modes(int window) const;
  bool in_domain(const Mode& m) const;

 private:
  std::shared_ptr<const ModeTable> table_;
  Sector sector_;
};

/// Printed mode brackets for the ten printed orientations.
ModeVec printed_mode_bracket(const Mode& a, const Mode& b);

std::vector<CheckResult> verify_mode_algebra(Sector sector, int window);

struct JacobiReport {
  Sector sector = Sector::RRR;
  int window = 0;
  std::size_t triples = 0;
  std::vector<std::string> failures;
  int degree_bound = 0;  // max polynomial degree of the Jacobi sum in one index
  bool ok() const { return failures.empty(); }
};
JacobiReport check_mode_jacobi(Sector sector, int window);

}  // namespace z2sl
