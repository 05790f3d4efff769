#include "z2sl/algebra.hpp"

#include "json.hpp"

#include <algorithm>
#include <stdexcept>

namespace z2sl {

AlgebraBasis::AlgebraBasis(std::string name, std::vector<BasisElement> elems)
    : name_(std::move(name)), elems_(std::move(elems)), table_(elems_.size() * elems_.size()) {}

int AlgebraBasis::index(std::string_view n) const {
  for (std::size_t k = 0; k < elems_.size(); ++k)
    if (elems_[k].name == n) return static_cast<int>(k);
  throw std::out_of_range("unknown basis element '" + std::string(n) + "' in " + name_);
}

void AlgebraBasis::set_bracket(std::string_view a, std::string_view b,
                               const std::vector<std::pair<std::string, Scalar>>& value) {
  int ia = index(a), ib = index(b);
  ScalarVec v;
  for (const auto& [n, c] : value)
    if (!c.is_zero()) v[index(n)] += c;
  Scalar s(-grade_sign(elems_[ia].grade, elems_[ib].grade));
  ScalarVec w;
  for (const auto& [k, c] : v) w[k] = s * c;
  table_[static_cast<std::size_t>(ia) * size() + static_cast<std::size_t>(ib)] = v;
  table_[static_cast<std::size_t>(ib) * size() + static_cast<std::size_t>(ia)] = w;
}

namespace {

void add_into(ScalarVec& out, const ScalarVec& v, const Scalar& c) {
  for (const auto& [k, x] : v) {
    Scalar& slot = out[k];
    slot += c * x;
    if (slot.is_zero()) out.erase(k);
  }
}

}  // namespace

ScalarVec AlgebraBasis::bracket(const ScalarVec& x, const ScalarVec& y) const {
  ScalarVec out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) add_into(out, bracket(a, b), ca * cb);
  return out;
}

std::string scalar_vec_str(const AlgebraBasis& b, const ScalarVec& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : v) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")" + b[k].name;
  }
  return s;
}

bool operator==(const AlgebraBasis& a, const AlgebraBasis& b) {
  if (a.name_ != b.name_ || a.elems_.size() != b.elems_.size() || a.table_ != b.table_) return false;
  for (std::size_t k = 0; k < a.elems_.size(); ++k)
    if (a.elems_[k].name != b.elems_[k].name || a.elems_[k].grade != b.elems_[k].grade ||
        a.elems_[k].dim != b.elems_[k].dim)
      return false;
  return true;
}

std::string AlgebraBasis::json() const {
  using nlohmann::ordered_json;
  ordered_json j;
  j["name"] = name_;
  j["basis"] = ordered_json::array();
  for (const auto& e : elems_)
    j["basis"].push_back({{"name", e.name}, {"grade", e.grade.str()}, {"dim", e.dim.get_str()}});
  j["brackets"] = ordered_json::array();
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      const ScalarVec& v = table_[a * size() + b];
      if (v.empty()) continue;
      ordered_json val = ordered_json::object();
      for (const auto& [k, c] : v) val[elems_[static_cast<std::size_t>(k)].name] = c.str();
      j["brackets"].push_back({{"a", elems_[a].name}, {"b", elems_[b].name}, {"value", val}});
    }
  return j.dump(2);
}

AlgebraBasis AlgebraBasis::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<BasisElement> elems;
  for (const auto& e : j.at("basis")) {
    std::string g = e.at("grade").get<std::string>();
    if (g.size() != 2) throw std::invalid_argument("bad grade '" + g + "'");
    elems.push_back(BasisElement{e.at("name").get<std::string>(),
                                 GradeVec(static_cast<unsigned>(g[0] - '0'), static_cast<unsigned>(g[1] - '0')),
                                 mpq_class(e.at("dim").get<std::string>())});
    elems.back().dim.canonicalize();
  }
  AlgebraBasis b(j.at("name").get<std::string>(), std::move(elems));
  for (const auto& br : j.at("brackets")) {
    ScalarVec v;
    for (const auto& [n, c] : br.at("value").items()) v[b.index(n)] = Scalar::parse(c.get<std::string>());
    int ia = b.index(br.at("a").get<std::string>()), ib = b.index(br.at("b").get<std::string>());
    b.table_[static_cast<std::size_t>(ia) * b.size() + static_cast<std::size_t>(ib)] = std::move(v);
  }
  return b;
}

// ---------------------------------------------------------------------------
// the algebras

namespace {

using Terms = std::vector<std::pair<std::string, Scalar>>;

AlgebraBasis make_z2_osp() {
  const mpq_class half(1, 2);
  AlgebraBasis b("z2osp", {{"K0", kG00, 0},
                           {"K+", kG00, 1},
                           {"K-", kG00, -1},
                           {"L0", kG11, 0},
                           {"L+", kG11, 1},
                           {"L-", kG11, -1},
                           {"P+", kG10, half},
                           {"P-", kG10, -half},
                           {"Q+", kG01, half},
                           {"Q-", kG01, -half}});
  const Scalar i = Scalar::i();
  // g0-g0
  b.set_bracket("K0", "K+", {{"K+", 2}});
  b.set_bracket("K0", "K-", {{"K-", -2}});
  b.set_bracket("K+", "K-", {{"K0", 1}});
  b.set_bracket("L0", "L+", {{"K+", 2}});
  b.set_bracket("L0", "L-", {{"K-", -2}});
  b.set_bracket("L+", "L-", {{"K0", 1}});
  b.set_bracket("K0", "L+", {{"L+", 2}});
  b.set_bracket("K0", "L-", {{"L-", -2}});
  b.set_bracket("K+", "L-", {{"L0", 1}});
  b.set_bracket("K-", "L+", {{"L0", -1}});
  b.set_bracket("L0", "K+", {{"L+", 2}});
  b.set_bracket("L0", "K-", {{"L-", -2}});
  // g0-g1
  b.set_bracket("K0", "P+", {{"P+", 1}});
  b.set_bracket("K0", "P-", {{"P-", -1}});
  b.set_bracket("K+", "P-", {{"P+", -1}});
  b.set_bracket("K-", "P+", {{"P-", -1}});
  b.set_bracket("K0", "Q+", {{"Q+", 1}});
  b.set_bracket("K0", "Q-", {{"Q-", -1}});
  b.set_bracket("K+", "Q-", {{"Q+", -1}});
  b.set_bracket("K-", "Q+", {{"Q-", -1}});
  b.set_bracket("P+", "L0", {{"Q+", i}});
  b.set_bracket("P-", "L0", {{"Q-", -i}});
  b.set_bracket("P+", "L-", {{"Q-", -i}});
  b.set_bracket("P-", "L+", {{"Q+", -i}});
  b.set_bracket("Q+", "L0", {{"P+", -i}});
  b.set_bracket("Q-", "L0", {{"P-", i}});
  b.set_bracket("Q+", "L-", {{"P-", i}});
  b.set_bracket("Q-", "L+", {{"P+", i}});
  // g1-g1
  b.set_bracket("P+", "P+", {{"K+", 2}});
  b.set_bracket("P-", "P-", {{"K-", -2}});
  b.set_bracket("P+", "P-", {{"K0", 1}});
  b.set_bracket("P+", "Q+", {{"L+", Scalar(2) * i}});
  b.set_bracket("P-", "Q-", {{"L-", Scalar(-2) * i}});
  b.set_bracket("P+", "Q-", {{"L0", i}});
  b.set_bracket("P-", "Q+", {{"L0", i}});
  b.set_bracket("Q+", "Q+", {{"K+", 2}});
  b.set_bracket("Q-", "Q-", {{"K-", -2}});
  b.set_bracket("Q+", "Q-", {{"K0", 1}});
  return b;
}

AlgebraBasis make_osp12() {
  const mpq_class half(1, 2);
  AlgebraBasis b("osp12", {{"H", kG00, 0}, {"E+", kG00, 1}, {"E-", kG00, -1}, {"F+", kG10, half}, {"F-", kG10, -half}});
  b.set_bracket("H", "E+", {{"E+", 2}});
  b.set_bracket("H", "E-", {{"E-", -2}});
  b.set_bracket("E+", "E-", {{"H", 1}});
  b.set_bracket("H", "F+", {{"F+", 1}});
  b.set_bracket("H", "F-", {{"F-", -1}});
  b.set_bracket("F+", "F-", {{"H", 1}});
  b.set_bracket("F+", "F+", {{"E+", 2}});
  b.set_bracket("F-", "F-", {{"E-", -2}});
  b.set_bracket("E+", "F-", {{"F+", -1}});
  b.set_bracket("E-", "F+", {{"F-", -1}});
  return b;
}

}  // namespace

const AlgebraBasis& z2_osp() {
  static const AlgebraBasis b = make_z2_osp();
  return b;
}

const AlgebraBasis& osp12() {
  static const AlgebraBasis b = make_osp12();
  return b;
}

// ---------------------------------------------------------------------------
// axiom checks

namespace {

ScalarVec unit(int k) { return ScalarVec{{k, Scalar(1)}}; }

std::string triple_name(const AlgebraBasis& b, int x, int y, int z) {
  return "(" + b[x].name + ", " + b[y].name + ", " + b[z].name + ")";
}

}  // namespace

AxiomReport check_jacobi(const AlgebraBasis& b) {
  AxiomReport r{"graded Jacobi identity on " + b.name()};
  const int n = static_cast<int>(b.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        GradeVec ga = b[x].grade, gb = b[y].grade, gc = b[z].grade;
        ScalarVec sum;
        add_into(sum, b.bracket(unit(x), b.bracket(y, z)), Scalar(grade_sign(ga, gc)));
        add_into(sum, b.bracket(unit(y), b.bracket(z, x)), Scalar(grade_sign(gb, ga)));
        add_into(sum, b.bracket(unit(z), b.bracket(x, y)), Scalar(grade_sign(gc, gb)));
        ++r.checked;
        if (!sum.empty()) r.failures.push_back(triple_name(b, x, y, z) + " -> " + scalar_vec_str(b, sum));
      }
  return r;
}

AxiomReport check_symmetry(const AlgebraBasis& b) {
  AxiomReport r{"graded symmetry and grading closure on " + b.name()};
  const int n = static_cast<int>(b.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      ++r.checked;
      ScalarVec sum = b.bracket(x, y);
      add_into(sum, b.bracket(y, x), Scalar(grade_sign(b[x].grade, b[y].grade)));
      if (!sum.empty())
        r.failures.push_back("symmetry (" + b[x].name + ", " + b[y].name + ") -> " + scalar_vec_str(b, sum));
      for (const auto& [k, c] : b.bracket(x, y))
        if (b[k].grade != b[x].grade + b[y].grade)
          r.failures.push_back("closure (" + b[x].name + ", " + b[y].name + ") contains " + b[k].name);
    }
  return r;
}

AxiomReport check_dimensions(const AlgebraBasis& b, std::string_view cartan) {
  AxiomReport r{"scaling dimensions on " + b.name()};
  int g = b.index(cartan);
  for (int x = 0; x < static_cast<int>(b.size()); ++x) {
    ++r.checked;
    ScalarVec v = b.bracket(g, x);
    ScalarVec expect;
    add_into(expect, unit(x), Scalar(b[x].dim * 2));
    if (v != expect)
      r.failures.push_back(b[x].name + ": [[" + b[g].name + ", X]] = " + scalar_vec_str(b, v) + ", expected " +
                           scalar_vec_str(b, expect));
  }
  return r;
}

AxiomReport check_closure(const AlgebraBasis& b, const std::vector<std::string>& names) {
  AxiomReport r{"closure of {" + [&] {
    std::string s;
    for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
    return s;
  }() + "}"};
  std::vector<int> idx;
  for (const auto& n : names) idx.push_back(b.index(n));
  for (int x : idx)
    for (int y : idx) {
      ++r.checked;
      for (const auto& [k, c] : b.bracket(x, y))
        if (std::find(idx.begin(), idx.end(), k) == idx.end())
          r.failures.push_back("(" + b[x].name + ", " + b[y].name + ") leaves the span via " + b[k].name);
    }
  return r;
}

LoopVec loop_bracket(const AlgebraBasis& b, const LoopVec& x, const LoopVec& y) {
  LoopVec out;
  for (const auto& [ka, ca] : x)
    for (const auto& [kb, cb] : y)
      for (const auto& [k, c] : b.bracket(ka.first, kb.first)) {
        LoopKey key{k, ka.second + kb.second};
        Scalar& slot = out[key];
        slot += ca * cb * c;
        if (slot.is_zero()) out.erase(key);
      }
  return out;
}

AxiomReport check_loop_axioms(const AlgebraBasis& b, int window) {
  AxiomReport r{"loop algebra axioms on " + b.name() + ", |n| <= " + std::to_string(window)};
  std::vector<LoopKey> keys;
  for (int k = 0; k < static_cast<int>(b.size()); ++k)
    for (int n = -window; n <= window; ++n) keys.emplace_back(k, n);
  auto name = [&](const LoopKey& k) { return b[k.first].name + "_" + std::to_string(k.second); };
  auto add = [](LoopVec& out, const LoopVec& v, const Scalar& c) {
    for (const auto& [k, x] : v) {
      Scalar& slot = out[k];
      slot += c * x;
      if (slot.is_zero()) out.erase(k);
    }
  };
  for (const auto& x : keys)
    for (const auto& y : keys) {
      LoopVec ex{{x, Scalar(1)}}, ey{{y, Scalar(1)}};
      LoopVec xy = loop_bracket(b, ex, ey);
      LoopVec sym = xy;
      add(sym, loop_bracket(b, ey, ex), Scalar(grade_sign(b[x.first].grade, b[y.first].grade)));
      ++r.checked;
      if (!sym.empty()) r.failures.push_back("symmetry (" + name(x) + ", " + name(y) + ")");
      for (const auto& z : keys) {
        LoopVec ez{{z, Scalar(1)}};
        GradeVec ga = b[x.first].grade, gb = b[y.first].grade, gc = b[z.first].grade;
        LoopVec sum;
        add(sum, loop_bracket(b, ex, loop_bracket(b, ey, ez)), Scalar(grade_sign(ga, gc)));
        add(sum, loop_bracket(b, ey, loop_bracket(b, ez, ex)), Scalar(grade_sign(gb, ga)));
        add(sum, loop_bracket(b, ez, xy), Scalar(grade_sign(gc, gb)));
        ++r.checked;
        if (!sum.empty()) r.failures.push_back("Jacobi (" + name(x) + ", " + name(y) + ", " + name(z) + ")");
      }
    }
  return r;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement::AlgebraElement(const AlgebraBasis* b, std::string_view name, GradedPoly coef) : basis_(b) {
  add(b->index(name), coef);
}

void AlgebraElement::add(int k, const GradedPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coefs_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coefs_.erase(it);
  }
}

GradedPoly AlgebraElement::coefficient(std::string_view name) const {
  auto it = coefs_.find(basis_->index(name));
  return it == coefs_.end() ? GradedPoly() : it->second;
}

bool AlgebraElement::is_homogeneous() const {
  std::optional<GradeVec> g;
  for (const auto& [k, c] : coefs_)
    for (const auto& [cg, part] : c.homogeneous_parts()) {
      GradeVec t = cg + (*basis_)[k].grade;
      if (g && *g != t) return false;
      g = t;
    }
  return true;
}

GradeVec AlgebraElement::grade() const {
  if (coefs_.empty()) throw std::logic_error("AlgebraElement::grade: zero element");
  if (!is_homogeneous()) throw std::logic_error("AlgebraElement::grade: inhomogeneous element");
  const auto& [k, c] = *coefs_.begin();
  return c.homogeneous_parts().begin()->first + (*basis_)[k].grade;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (basis_ != o.basis_) throw std::invalid_argument("AlgebraElement: basis mismatch");
  for (const auto& [k, c] : o.coefs_) add(k, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (basis_ != o.basis_) throw std::invalid_argument("AlgebraElement: basis mismatch");
  for (const auto& [k, c] : o.coefs_) add(k, -c);
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r(basis_);
  for (const auto& [k, c] : coefs_) r.add(k, -c);
  return r;
}

AlgebraElement operator*(const GradedPoly& p, const AlgebraElement& x) {
  AlgebraElement r(x.basis_);
  for (const auto& [k, c] : x.coefs_) r.add(k, p * c);
  return r;
}

AlgebraElement AlgebraElement::map(const std::function<GradedPoly(const GradedPoly&)>& f) const {
  AlgebraElement r(basis_);
  for (const auto& [k, c] : coefs_) r.add(k, f(c));
  return r;
}

std::string AlgebraElement::str() const {
  if (coefs_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : coefs_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.str() + ")*" + (*basis_)[k].name;
  }
  return s;
}

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  if (&x.basis() != &y.basis()) throw std::invalid_argument("bracket: basis mismatch");
  const AlgebraBasis& b = x.basis();
  AlgebraElement r(&b);
  for (const auto& [ka, ca] : x.coefficients()) {
    for (const auto& [kb, cb] : y.coefficients()) {
      const ScalarVec& v = b.bracket(ka, kb);
      if (v.empty()) continue;
      for (const auto& [gd, d] : cb.homogeneous_parts()) {
        GradedPoly cd = ca * d * Scalar(grade_sign(b[ka].grade, gd));
        if (cd.is_zero()) continue;
        for (const auto& [k, s] : v) r += AlgebraElement(&b, b[k].name, cd * s);
      }
    }
  }
  return r;
}

AlgebraElement apply_D(Deriv d, const AlgebraElement& x) {
  return x.map([d](const GradedPoly& c) { return apply_D(d, c); });
}

}  // namespace z2sl
