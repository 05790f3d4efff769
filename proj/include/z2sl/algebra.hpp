#pragma once

// Structure constants and graded brackets of the Z2xZ2-graded extension of
// osp(1|2), of osp(1|2) itself, and of the loop algebra over either.

#include "z2sl/ring.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace z2sl {

struct BasisElement {
  std::string name;
  GradeVec grade;
  mpq_class dim;  // eigenvalue of the grading operator
};

using ScalarVec = std::map<int, Scalar>;

class AlgebraBasis {
 public:
  AlgebraBasis(std::string name, std::vector<BasisElement> elems);

  const std::string& name() const { return name_; }
  std::size_t size() const { return elems_.size(); }
  const BasisElement& operator[](int k) const { return elems_.at(static_cast<std::size_t>(k)); }
  const std::vector<BasisElement>& elements() const { return elems_; }
  /// Throws std::out_of_range for an unknown name.
  int index(std::string_view name) const;

  /// Sets [[a, b]] and the partner [[b, a]] implied by graded symmetry.
  void set_bracket(std::string_view a, std::string_view b, const std::vector<std::pair<std::string, Scalar>>& value);
  const ScalarVec& bracket(int a, int b) const { return table_[static_cast<std::size_t>(a) * size() + static_cast<std::size_t>(b)]; }
  ScalarVec bracket(const ScalarVec& x, const ScalarVec& y) const;

  std::string json() const;
  static AlgebraBasis from_json(const std::string& text);

  friend bool operator==(const AlgebraBasis& a, const AlgebraBasis& b);

 private:
  std::string name_;
  std::vector<BasisElement> elems_;
  std::vector<ScalarVec> table_;
};

/// The ten-dimensional algebra: K0 K+ K- L0 L+ L- P+ P- Q+ Q-.
const AlgebraBasis& z2_osp();
/// osp(1|2): H E+ E- F+ F-, Z2 grading embedded as [00] / [10].
const AlgebraBasis& osp12();

std::string scalar_vec_str(const AlgebraBasis& b, const ScalarVec& v);

// ---- verification reports ---------------------------------------------------

struct AxiomReport {
  AxiomReport(std::string w = {}) : what(std::move(w)) {}
  std::string what;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Three-term graded Jacobi sum for all ordered basis triples.
AxiomReport check_jacobi(const AlgebraBasis& b);
/// Graded (anti)symmetry and grading closure for all ordered pairs.
AxiomReport check_symmetry(const AlgebraBasis& b);
/// [[G, X]] = dim(X) X with G = K0/2 (or H/2).
AxiomReport check_dimensions(const AlgebraBasis& b, std::string_view cartan);
/// Closure of the subspace spanned by `names`.
AxiomReport check_closure(const AlgebraBasis& b, const std::vector<std::string>& names);

/// Loop algebra element lambda^n X keyed by (basis index, n).
using LoopKey = std::pair<int, int>;
using LoopVec = std::map<LoopKey, Scalar>;
LoopVec loop_bracket(const AlgebraBasis& b, const LoopVec& x, const LoopVec& y);
/// Jacobi and symmetry on the loop algebra with |n| <= window.
AxiomReport check_loop_axioms(const AlgebraBasis& b, int window);

// ---- elements with ring coefficients ------------------------------------------

/// Sum of coefficient * basis element, coefficients in the graded ring.
/// Loop elements carry powers of a spectral parameter inside the coefficients.
class AlgebraElement {
 public:
  explicit AlgebraElement(const AlgebraBasis* b) : basis_(b) {}
  AlgebraElement(const AlgebraBasis* b, std::string_view name, GradedPoly coef = GradedPoly(1));

  const AlgebraBasis& basis() const { return *basis_; }
  const std::map<int, GradedPoly>& coefficients() const { return coefs_; }
  GradedPoly coefficient(std::string_view name) const;
  bool is_zero() const { return coefs_.empty(); }
  /// True when coefficient grading + basis grading is the same on the support.
  bool is_homogeneous() const;
  GradeVec grade() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement operator-() const;
  /// Left multiplication by a ring element: p * (c X) = (p c) X.
  friend AlgebraElement operator*(const GradedPoly& p, const AlgebraElement& x);

  /// Applies f to every coefficient.
  AlgebraElement map(const std::function<GradedPoly(const GradedPoly&)>& f) const;
  std::string str() const;

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.basis_ == b.basis_ && a.coefs_ == b.coefs_;
  }

 private:
  void add(int k, const GradedPoly& c);
  const AlgebraBasis* basis_;
  std::map<int, GradedPoly> coefs_;
};

/// [[c X, d Y]] = sign(X, d) c d [[X, Y]], extended bilinearly over the
/// homogeneous parts of the coefficients. Throws on basis mismatch.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);
/// Derivative acting on the coefficients.
AlgebraElement apply_D(Deriv d, const AlgebraElement& x);

}  // namespace z2sl
