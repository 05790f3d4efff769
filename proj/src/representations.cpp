#include "z2sl/representations.hpp"

#include "json.hpp"

#include <array>
#include <stdexcept>

namespace z2sl {

// ---------------------------------------------------------------------------
// GradedMatrix

GradedMatrix GradedMatrix::identity(std::size_t n) {
  GradedMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = GradedPoly(1);
  return m;
}

GradedMatrix GradedMatrix::from_scalars(std::size_t rows, std::size_t cols, const std::vector<Scalar>& v) {
  if (v.size() != rows * cols) throw std::invalid_argument("GradedMatrix::from_scalars: size mismatch");
  GradedMatrix m(rows, cols);
  for (std::size_t k = 0; k < v.size(); ++k) m.e_[k] = GradedPoly(v[k]);
  return m;
}

bool GradedMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

GradedMatrix& GradedMatrix::operator+=(const GradedMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("GradedMatrix: shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

GradedMatrix& GradedMatrix::operator-=(const GradedMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("GradedMatrix: shape mismatch");
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("GradedMatrix: shape mismatch in product");
  GradedMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const GradedPoly& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.cols_; ++k) {
        const GradedPoly& y = b.at(j, k);
        if (!y.is_zero()) r.at(i, k) += x * y;
      }
    }
  return r;
}

GradedMatrix operator*(const GradedPoly& s, GradedMatrix a) {
  for (auto& x : a.e_) x = s * x;
  return a;
}

GradedMatrix GradedMatrix::operator-() const { return GradedPoly(-1) * *this; }

GradedMatrix GradedMatrix::map(const std::function<GradedPoly(const GradedPoly&)>& f) const {
  GradedMatrix r = *this;
  for (auto& x : r.e_) x = f(x);
  return r;
}

std::string GradedMatrix::str() const {
  std::string s;
  for (std::size_t i = 0; i < rows_; ++i) {
    s += "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).str();
    s += "]\n";
  }
  return s;
}

std::string GradedMatrix::json() const {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t k = 0; k < cols_; ++k) row.push_back(at(i, k).str());
    j.push_back(row);
  }
  return j.dump();
}

GradedMatrix kron(const GradedMatrix& a, const GradedMatrix& b) {
  GradedMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
    }
  return r;
}

GradedMatrix graded_bracket(const GradedMatrix& a, GradeVec ga, const GradedMatrix& b, GradeVec gb) {
  return grade_dot(ga, gb) ? a * b + b * a : a * b - b * a;
}

// ---------------------------------------------------------------------------
// M-algebra

namespace {

const Scalar I = Scalar::i();

GradedMatrix two(Scalar a, Scalar b, Scalar c, Scalar d) { return GradedMatrix::from_scalars(2, 2, {a, b, c, d}); }

GradedMatrix id2() { return two(1, 0, 0, 1); }
GradedMatrix sig1() { return two(0, 1, 1, 0); }
GradedMatrix sig2() { return two(0, -I, I, 0); }
GradedMatrix sig3() { return two(1, 0, 0, -1); }
GradedMatrix sigp() { return two(0, 1, 0, 0); }
GradedMatrix sigm() { return two(0, 0, 1, 0); }
GradedMatrix s11() { return two(1, 0, 0, 0); }
GradedMatrix s22() { return two(0, 0, 0, 1); }

int levi(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((i == 1 && j == 2) || (i == 2 && j == 3) || (i == 3 && j == 1)) ? 1 : -1;
}

}  // namespace

GradedMatrix m_matrix(int k) {
  switch (k) {
    case 0: return kron(id2(), id2());
    case 1: return kron(id2(), sig1());
    case 2: return kron(sig1(), sig2());
    case 3: return kron(sig1(), sig3());
    default: throw std::out_of_range("m_matrix: index must be 0..3");
  }
}

AxiomReport check_m_algebra() {
  AxiomReport r{"M-algebra products"};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      GradedMatrix expect(4, 4);
      if (i == 0)
        expect = m_matrix(j);
      else if (j == 0)
        expect = m_matrix(i);
      else {
        if (i == j) expect = m_matrix(0);
        for (int k = 1; k <= 3; ++k)
          if (int e = levi(i, j, k)) expect += GradedPoly(I * Scalar(e)) * m_matrix(k);
      }
      ++r.checked;
      if (!(m_matrix(i) * m_matrix(j) == expect))
        r.failures.push_back("M" + std::to_string(i) + " M" + std::to_string(j));
    }
  return r;
}

// ---------------------------------------------------------------------------
// realizations

MatrixRep fundamental_osp() {
  auto m = [](std::vector<Scalar> v) { return GradedMatrix::from_scalars(3, 3, std::move(v)); };
  MatrixRep r;
  r["H"] = m({-1, 0, 0, 0, 0, 0, 0, 0, 1});
  r["F+"] = m({0, 0, 0, 1, 0, 0, 0, 1, 0});
  r["F-"] = m({0, -1, 0, 0, 0, 1, 0, 0, 0});
  // {F+, F+} = 2E+, {F-, F-} = -2E-
  r["E+"] = r["F+"] * r["F+"];
  r["E-"] = -(r["F-"] * r["F-"]);
  return r;
}

MatrixRep tensor_realization() {
  MatrixRep f = fundamental_osp();
  MatrixRep r;
  r["K0"] = kron(m_matrix(0), f["H"]);
  r["K+"] = kron(m_matrix(0), f["E+"]);
  r["K-"] = kron(m_matrix(0), f["E-"]);
  r["P+"] = kron(m_matrix(1), f["F+"]);
  r["P-"] = kron(m_matrix(1), f["F-"]);
  r["Q+"] = kron(m_matrix(2), f["F+"]);
  r["Q-"] = kron(m_matrix(2), f["F-"]);
  r["L0"] = kron(m_matrix(3), f["H"]);
  r["L+"] = kron(m_matrix(3), f["E+"]);
  r["L-"] = kron(m_matrix(3), f["E-"]);
  return r;
}

const std::vector<GradeVec>& sixdim_ket_grades() {
  static const std::vector<GradeVec> g{kG00, kG00, kG11, kG11, kG10, kG01};
  return g;
}

namespace {

using Image = std::pair<int, Scalar>;  // (ket 1..6, coefficient); ket 0 means zero

GradedMatrix from_images(const std::array<Image, 6>& images) {
  GradedMatrix m(6, 6);
  for (std::size_t col = 0; col < 6; ++col) {
    const auto& [ket, c] = images[col];
    if (ket == 0) continue;
    m.at(static_cast<std::size_t>(ket - 1), col) = GradedPoly(c);
  }
  return m;
}

/// 3x3 grid of 2x2 blocks; missing blocks are zero.
GradedMatrix from_blocks(const std::vector<std::vector<GradedMatrix>>& blocks) {
  GradedMatrix m(6, 6);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi)
    for (std::size_t bj = 0; bj < blocks[bi].size(); ++bj) {
      const GradedMatrix& b = blocks[bi][bj];
      if (b.rows() == 0) continue;
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) m.at(2 * bi + i, 2 * bj + j) = b.at(i, j);
    }
  return m;
}

}  // namespace

MatrixRep sixdim_from_action() {
  const Image z{0, 0};
  auto k = [](int n, Scalar c = 1) { return Image{n, c}; };
  MatrixRep r;
  r["K0"] = from_images({k(1), k(2, -1), k(3), k(4, -1), z, z});
  r["K+"] = from_images({z, k(1), z, k(3), z, z});
  r["K-"] = from_images({k(2), z, k(4), z, z, z});
  r["L0"] = from_images({k(3), k(4, -1), k(1), k(2, -1), z, z});
  r["L+"] = from_images({z, k(3), z, k(1), z, z});
  r["L-"] = from_images({k(4), z, k(2), z, z, z});
  r["P+"] = from_images({z, k(5), z, k(6, -I), k(1), k(3, I)});
  r["P-"] = from_images({k(5), z, k(6, -I), z, k(2, -1), k(4, -I)});
  r["Q+"] = from_images({z, k(6), z, k(5, I), k(3, -I), k(1)});
  r["Q-"] = from_images({k(6), z, k(5, I), z, k(4, I), k(2, -1)});
  return r;
}

MatrixRep sixdim_printed() {
  const GradedMatrix O;
  auto s = [](const GradedMatrix& m, Scalar c) { return GradedPoly(c) * m; };
  MatrixRep r;
  r["K0"] = GradedMatrix::from_scalars(6, 6, {1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0,
                                               0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  r["K+"] = from_blocks({{sigp(), O, O}, {O, sigp(), O}});
  r["K-"] = from_blocks({{sigm(), O, O}, {O, sigm(), O}});
  r["L0"] = from_blocks({{O, sig3(), O}, {sig3(), O, O}});
  r["L+"] = from_blocks({{O, sigp(), O}, {sigp(), O, O}});
  r["L-"] = from_blocks({{O, sigm(), O}, {sigm(), O, O}});
  r["P+"] = from_blocks({{O, O, s11()}, {O, O, s(sigp(), I)}, {sigp(), s(s22(), -I), O}});
  r["P-"] = from_blocks({{O, O, s(sigm(), -1)}, {O, O, s(s22(), -I)}, {s11(), s(sigm(), -I), O}});
  r["Q+"] = from_blocks({{O, O, sigp()}, {O, O, s(s11(), -I)}, {s22(), s(sigp(), I), O}});
  r["Q-"] = from_blocks({{O, O, s(s22(), -1)}, {O, O, s(sigm(), I)}, {sigm(), s(s11(), I), O}});
  return r;
}

MatrixRep sixdim_from_tensor() {
  // the 12-dim space is (M-algebra) x C^3; M_a acts by left multiplication
  // left multiplication on the M-algebra: M_a M_b = sum_c coef M_c
  std::array<std::array<std::pair<int, Scalar>, 4>, 4> mult{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      GradedMatrix p = m_matrix(a) * m_matrix(b);
      bool found = false;
      for (int c = 0; c < 4 && !found; ++c)
        for (Scalar coef : {Scalar(1), Scalar(-1), I, -I})
          if (p == GradedPoly(coef) * m_matrix(c)) {
            mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = {c, coef};
            found = true;
            break;
          }
      if (!found) throw std::logic_error("M-algebra product is not a multiple of a basis matrix");
    }
  MatrixRep f = fundamental_osp();
  // generator = M_a x X
  const std::map<std::string, std::pair<int, std::string>> gens{
      {"K0", {0, "H"}}, {"K+", {0, "E+"}}, {"K-", {0, "E-"}}, {"P+", {1, "F+"}}, {"P-", {1, "F-"}},
      {"Q+", {2, "F+"}}, {"Q-", {2, "F-"}}, {"L0", {3, "H"}}, {"L+", {3, "E+"}}, {"L-", {3, "E-"}}};
  // a vector is a map (m, n) -> coefficient
  using Vec = std::map<std::pair<int, int>, Scalar>;
  auto act = [&](const std::string& g, const Vec& v) {
    const auto& [a, x] = gens.at(g);
    const GradedMatrix& X = f.at(x);
    Vec out;
    for (const auto& [key, c] : v) {
      const auto& [m, n] = key;
      const auto& [mc, mcoef] = mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)];
      for (int row = 0; row < 3; ++row) {
        Scalar e = X.at(static_cast<std::size_t>(row), static_cast<std::size_t>(n)).constant_term();
        if (e.is_zero()) continue;
        Scalar& slot = out[{mc, row}];
        slot += c * mcoef * e;
        if (slot.is_zero()) out.erase({mc, row});
      }
    }
    return out;
  };
  const Vec v00{{{0, 0}, 1}}, v11{{{3, 0}, 1}};
  std::vector<Vec> kets{act("K+", v00), v00, act("L+", v00), v11, act("P+", v00), act("Q+", v00)};
  // kets are single basis vectors up to a scalar; invert that correspondence
  std::map<std::pair<int, int>, std::pair<int, Scalar>> where;
  for (std::size_t k = 0; k < kets.size(); ++k) {
    if (kets[k].size() != 1) throw std::logic_error("sixdim_from_tensor: ket is not a single basis vector");
    const auto& [key, c] = *kets[k].begin();
    where[key] = {static_cast<int>(k), c};
  }
  MatrixRep r;
  for (const auto& [g, unused] : gens) {
    GradedMatrix m(6, 6);
    for (std::size_t col = 0; col < 6; ++col) {
      for (const auto& [key, c] : act(g, kets[col])) {
        auto it = where.find(key);
        if (it == where.end()) throw std::logic_error("sixdim_from_tensor: image leaves the six-dimensional span");
        m.at(static_cast<std::size_t>(it->second.first), col) += GradedPoly(c / it->second.second);
      }
    }
    r[g] = m;
  }
  return r;
}

// ---------------------------------------------------------------------------
// checks

AxiomReport check_homomorphism(const AlgebraBasis& b, const MatrixRep& rep) {
  AxiomReport r{"homomorphism of " + b.name()};
  const int n = static_cast<int>(b.size());
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      const GradedMatrix& A = rep.at(b[x].name);
      const GradedMatrix& B = rep.at(b[y].name);
      GradedMatrix lhs = graded_bracket(A, b[x].grade, B, b[y].grade);
      GradedMatrix rhs(A.rows(), A.cols());
      for (const auto& [k, c] : b.bracket(x, y)) rhs += GradedPoly(c) * rep.at(b[k].name);
      ++r.checked;
      if (!(lhs == rhs)) r.failures.push_back("(" + b[x].name + ", " + b[y].name + ")");
    }
  return r;
}

AxiomReport check_grading_consistency(const AlgebraBasis& b, const MatrixRep& rep,
                                      const std::vector<GradeVec>& kets) {
  AxiomReport r{"grading consistency of " + b.name()};
  for (const auto& e : b.elements()) {
    const GradedMatrix& m = rep.at(e.name);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m.at(i, j).is_zero()) continue;
        ++r.checked;
        if (kets[i] != kets[j] + e.grade)
          r.failures.push_back(e.name + " maps ket " + std::to_string(j + 1) + " to ket " + std::to_string(i + 1));
      }
  }
  return r;
}

AxiomReport compare_reps(const MatrixRep& a, const MatrixRep& b, const std::string& what) {
  AxiomReport r{what};
  for (const auto& [name, m] : a) {
    auto it = b.find(name);
    ++r.checked;
    if (it == b.end()) {
      r.failures.push_back(name + " missing");
      continue;
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (!(m.at(i, j) == it->second.at(i, j)))
          r.failures.push_back(name + " entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               "): " + m.at(i, j).str() + " vs " + it->second.at(i, j).str());
  }
  return r;
}

GradedMatrix represent(const AlgebraElement& x, const MatrixRep& rep, const std::vector<GradeVec>& kets) {
  const AlgebraBasis& b = x.basis();
  std::size_t n = kets.size();
  GradedMatrix out(n, n);
  for (const auto& [k, c] : x.coefficients()) {
    const GradedMatrix& X = rep.at(b[k].name);
    for (const auto& [g, part] : c.homogeneous_parts())
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          const GradedPoly& e = X.at(i, j);
          if (!e.is_zero()) out.at(i, j) += GradedPoly(Scalar(grade_sign(g, kets[i]))) * part * e;
        }
  }
  return out;
}

}  // namespace z2sl
