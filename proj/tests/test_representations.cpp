#include "doctest.h"
#include "z2sl/representations.hpp"

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

using namespace z2sl;

namespace {
std::string first(const AxiomReport& r) { return r.failures.empty() ? "" : r.failures.front(); }

Eigen::MatrixXcd numeric(const GradedMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Scalar c = m.at(i, j).constant_term();
      out(static_cast<long>(i), static_cast<long>(j)) = {c.real_double(), c.imag_double()};
    }
  return out;
}
}  // namespace

TEST_CASE("M-algebra") {
  const Scalar i = Scalar::i();
  CHECK(m_matrix(1) * m_matrix(2) == GradedPoly(i) * m_matrix(3));
  CHECK(m_matrix(2) * m_matrix(1) == GradedPoly(-i) * m_matrix(3));
  CHECK(m_matrix(0) * m_matrix(2) == m_matrix(2));
  auto r = check_m_algebra();
  CHECK(r.checked == 16);
  CHECK(r.ok());
  // independent floating-point oracle for the Pauli construction
  Eigen::Matrix2cd s1, s2, s3, id;
  s1 << 0, 1, 1, 0;
  s2 << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0;
  s3 << 1, 0, 0, -1;
  id.setIdentity();
  const Eigen::MatrixXcd ref[4] = {Eigen::kroneckerProduct(id, id).eval(), Eigen::kroneckerProduct(id, s1).eval(),
                                   Eigen::kroneckerProduct(s1, s2).eval(), Eigen::kroneckerProduct(s1, s3).eval()};
  for (int k = 0; k < 4; ++k) CHECK((numeric(m_matrix(k)) - ref[k]).norm() == 0.0);
}

TEST_CASE("fundamental osp(1|2)") {
  MatrixRep f = fundamental_osp();
  CHECK(f["H"] == GradedMatrix::from_scalars(3, 3, {-1, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(f["F-"].at(0, 1) == GradedPoly(-1));  // F- v1 = -v0
  CHECK(f["F-"].at(1, 2) == GradedPoly(1));   // F- v2 = v1
  CHECK(f["F+"] * f["F-"] + f["F-"] * f["F+"] == f["H"]);
  auto r = check_homomorphism(osp12(), f);
  CHECK(r.checked == 15);
  CHECK_MESSAGE(r.ok(), first(r));
}

TEST_CASE("tensor realization") {
  MatrixRep t = tensor_realization();
  const Scalar i = Scalar::i();
  CHECK(t["P+"] * t["Q+"] - t["Q+"] * t["P+"] == GradedPoly(Scalar(2) * i) * t["L+"]);
  CHECK(t["P+"] * t["P-"] + t["P-"] * t["P+"] == t["K0"]);
  CHECK((t["K0"] * t["L0"] - t["L0"] * t["K0"]).is_zero());
  auto r = check_homomorphism(z2_osp(), t);
  CHECK(r.checked == 55);
  CHECK_MESSAGE(r.ok(), first(r));
}

TEST_CASE("six-dimensional representation") {
  MatrixRep a = sixdim_from_action();
  CHECK(a["P+"].at(5, 3) == GradedPoly(-Scalar::i()));  // P+|4> = -i|6>
  CHECK(a["Q-"].at(3, 4) == GradedPoly(Scalar::i()));   // Q-|5> = i|4>
  CHECK(a["K0"] == GradedMatrix::from_scalars(6, 6, {1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0,
                                                      0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  auto h = check_homomorphism(z2_osp(), a);
  CHECK(h.checked == 55);
  CHECK_MESSAGE(h.ok(), first(h));
  auto p = compare_reps(a, sixdim_printed(), "action table vs printed blocks");
  CHECK_MESSAGE(p.ok(), first(p));
  auto t = compare_reps(a, sixdim_from_tensor(), "action table vs tensor action");
  CHECK_MESSAGE(t.ok(), first(t));
  auto g = check_grading_consistency(z2_osp(), a, sixdim_ket_grades());
  CHECK_MESSAGE(g.ok(), first(g));
}

TEST_CASE("floating-point oracle for the six-dimensional brackets") {
  MatrixRep a = sixdim_from_action();
  const auto& b = z2_osp();
  for (int x = 0; x < 10; ++x)
    for (int y = 0; y < 10; ++y) {
      Eigen::MatrixXcd A = numeric(a[b[x].name]), B = numeric(a[b[y].name]);
      Eigen::MatrixXcd lhs = grade_dot(b[x].grade, b[y].grade) ? Eigen::MatrixXcd(A * B + B * A)
                                                               : Eigen::MatrixXcd(A * B - B * A);
      Eigen::MatrixXcd rhs = Eigen::MatrixXcd::Zero(6, 6);
      for (const auto& [k, c] : b.bracket(x, y))
        rhs += std::complex<double>(c.real_double(), c.imag_double()) * numeric(a[b[k].name]);
      CHECK((lhs - rhs).norm() < 1e-12);
    }
}

TEST_CASE("graded representation of ring-valued elements") {
  const auto& b = z2_osp();
  MatrixRep a = sixdim_from_action();
  const auto& kets = sixdim_ket_grades();
  Field psi = declare_superfield("rpsi", kG10);
  Field chi = declare_superfield("rchi", kG01);
  Field w = declare_superfield("rw", kG11);
  std::vector<AlgebraElement> els{AlgebraElement(&b, "P+", jet(psi)), AlgebraElement(&b, "Q-", jet(chi)),
                                  AlgebraElement(&b, "K+", jet(w)), AlgebraElement(&b, "L0", jet(psi) * jet(chi)),
                                  AlgebraElement(&b, "P-", jet(w)), AlgebraElement(&b, "Q+", GradedPoly(1))};
  for (const auto& x : els)
    for (const auto& y : els) {
      GradedMatrix X = represent(x, a, kets), Y = represent(y, a, kets);
      GradedMatrix lhs = X * Y - GradedPoly(Scalar(grade_sign(x.grade(), y.grade()))) * (Y * X);
      CHECK(lhs == represent(bracket(x, y), a, kets));
    }
}
