#pragma once

// Matrix realizations: the 4x4 M-algebra, the 3x3 fundamental of osp(1|2),
// the 12x12 tensor realization and the six-dimensional lowest-weight
// representation.

#include "z2sl/algebra.hpp"

#include <map>
#include <string>
#include <vector>

namespace z2sl {

/// Matrix with ring entries. Products are plain matrix products; any grading
/// signs live in the entries.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  static GradedMatrix identity(std::size_t n);
  /// Row-major rational/Gaussian entries.
  static GradedMatrix from_scalars(std::size_t rows, std::size_t cols, const std::vector<Scalar>& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GradedPoly& at(std::size_t i, std::size_t j) { return e_.at(i * cols_ + j); }
  const GradedPoly& at(std::size_t i, std::size_t j) const { return e_.at(i * cols_ + j); }
  bool is_zero() const;

  GradedMatrix& operator+=(const GradedMatrix& o);
  GradedMatrix& operator-=(const GradedMatrix& o);
  friend GradedMatrix operator+(GradedMatrix a, const GradedMatrix& b) { return a += b; }
  friend GradedMatrix operator-(GradedMatrix a, const GradedMatrix& b) { return a -= b; }
  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  friend GradedMatrix operator*(const GradedPoly& s, GradedMatrix a);
  GradedMatrix operator-() const;
  GradedMatrix map(const std::function<GradedPoly(const GradedPoly&)>& f) const;
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b) = default;

  std::string str() const;
  /// Nested JSON arrays of entry strings.
  std::string json() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<GradedPoly> e_;
};

GradedMatrix kron(const GradedMatrix& a, const GradedMatrix& b);
/// Commutator or anticommutator of generator images of gradings ga, gb.
GradedMatrix graded_bracket(const GradedMatrix& a, GradeVec ga, const GradedMatrix& b, GradeVec gb);

using MatrixRep = std::map<std::string, GradedMatrix>;

/// M0..M3 built from Pauli matrices.
GradedMatrix m_matrix(int k);
/// Checks M_i M_j = delta_ij M0 + i eps_ijk M_k (and M0 as unit).
AxiomReport check_m_algebra();

/// 3x3 matrices in the basis v0, v1, v2 with F+ v_n = v_{n+1}.
MatrixRep fundamental_osp();
/// K0 = M0 x H, K+- = M0 x E+-, P+- = M1 x F+-, Q+- = M2 x F+-, L0 = M3 x H, L+- = M3 x E+-.
MatrixRep tensor_realization();

/// Kets |1>..|6> and their gradings.
const std::vector<GradeVec>& sixdim_ket_grades();
/// Entered from the action table v -> X v.
MatrixRep sixdim_from_action();
/// Entered from the displayed 2x2 block matrices.
MatrixRep sixdim_printed();
/// Computed by acting with the tensor realization on |00> = M0 x v0, |11> = M3 x v0.
MatrixRep sixdim_from_tensor();

/// Image of every bracket equals the image of the structure constants, for all
/// unordered basis pairs.
AxiomReport check_homomorphism(const AlgebraBasis& b, const MatrixRep& rep);
/// Each generator maps kets of grading g into kets of grading g + deg X.
AxiomReport check_grading_consistency(const AlgebraBasis& b, const MatrixRep& rep, const std::vector<GradeVec>& kets);
/// Entry-by-entry comparison of two realizations.
AxiomReport compare_reps(const MatrixRep& a, const MatrixRep& b, const std::string& what);

/// rho(c X)_ij = sign(deg c, deg ket_i) c X_ij, extended over homogeneous parts.
GradedMatrix represent(const AlgebraElement& x, const MatrixRep& rep, const std::vector<GradeVec>& kets);

}  // namespace z2sl
