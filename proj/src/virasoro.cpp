#include "z2sl/virasoro.hpp"

#include "z2sl/linear.hpp"
#include "z2sl/soldering.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace z2sl {

namespace {

GradedPoly prime(const GradedPoly& p, int n = 1) {
  GradedPoly out = p;
  for (int k = 0; k < n; ++k) out = apply_D(Deriv::PartialPlus, out);
  return out;
}

mpq_class binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return mpq_class(r);
}

int current_index(Current c) { return static_cast<int>(c); }

std::optional<Current> current_of(Field f) {
  for (Current c : kCurrents)
    if (current_field(c) == f) return c;
  return std::nullopt;
}

CheckResult check_zero(std::string id, std::string anchor, const GradedPoly& residual) {
  return {std::move(id), std::move(anchor), residual.is_zero(), residual.is_zero() ? "" : residual.str(), ""};
}

std::string pair_id(Current a, Current b) { return current_name(a) + "," + current_name(b); }

}  // namespace

GradeVec current_grade(Current c) {
  switch (c) {
    case Current::U00: return kG00;
    case Current::U11: return kG11;
    case Current::U10: return kG10;
    case Current::U01: return kG01;
  }
  return kG00;
}

std::string current_name(Current c) {
  switch (c) {
    case Current::U00: return "u00";
    case Current::U11: return "u11";
    case Current::U10: return "u10";
    case Current::U01: return "u01";
  }
  return "?";
}

Field current_field(Current c) {
  const auto& u = UFields::get();
  switch (c) {
    case Current::U00: return u.u00;
    case Current::U11: return u.u11;
    case Current::U10: return u.u10;
    case Current::U01: return u.u01;
  }
  return u.u00;
}

Field parameter_field(Current c) {
  const auto& u = UFields::get();
  switch (c) {
    case Current::U00: return u.v00;
    case Current::U11: return u.v11;
    case Current::U10: return u.v10;
    case Current::U01: return u.v01;
  }
  return u.v00;
}

// ---- DistExpr ------------------------------------------------------------

void DistExpr::add(int m, const GradedPoly& c) {
  if (m < 0) throw std::invalid_argument("negative delta order");
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

DistExpr DistExpr::flipped() const {
  DistExpr out;
  for (const auto& [m, c] : terms_) {
    GradedPoly d = c;
    for (int k = 0; k <= m; ++k) {
      mpq_class w = binom(m, k) * (m % 2 ? -1 : 1);
      out.add(m - k, Scalar(w) * d);
      d = prime(d);
    }
  }
  return out;
}

DistExpr& DistExpr::operator+=(const DistExpr& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

DistExpr operator*(const GradedPoly& s, const DistExpr& e) {
  DistExpr out;
  for (const auto& [m, c] : e.terms_) out.add(m, s * c);
  return out;
}

std::string DistExpr::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*delta";
    if (m) os << "^(" << m << ")";
  }
  return os.str();
}

GradedPoly smear(const GradedPoly& profile, const DistExpr& e) {
  GradedPoly out;
  for (const auto& [m, c] : e.terms()) {
    GradedPoly t = prime(profile * c, m);
    out += m % 2 ? -t : t;
  }
  return out;
}

// ---- Ansatz --------------------------------------------------------------

const std::vector<std::string>& ansatz_unknowns() {
  static const std::vector<std::string> names{"k1", "k2", "k3", "k4", "a1", "a2", "a3", "a4", "a5", "a6", "a7",
                                              "a8", "a9", "b1", "b2", "b3", "b4", "b5", "b6", "b7", "c1", "c2",
                                              "c3", "d1", "d2"};
  return names;
}

CoefficientTable symbolic_coefficients() {
  CoefficientTable t;
  for (const auto& n : ansatz_unknowns()) t[n] = param(n);
  return t;
}

CoefficientTable printed_coefficients() {
  const Scalar i = Scalar::i();
  const Scalar h = Scalar::rational(1, 2), h3 = Scalar::rational(3, 2);
  std::map<std::string, Scalar> v{{"k1", i},       {"k2", i},       {"k3", i},      {"k4", -i},      {"a1", -1},
                                  {"a2", -2},      {"a3", -h},      {"a4", -1},     {"a5", -2},      {"a6", -1},
                                  {"a7", -h3},     {"a8", -1},      {"a9", -h3},    {"b1", -1},      {"b2", -2},
                                  {"b3", -h},      {"b4", -1},      {"b5", -h3},    {"b6", -1},      {"b7", -h3},
                                  {"c1", -h * i},  {"c2", -h * i},  {"c3", h * i},  {"d1", h * i},   {"d2", h * i}};
  CoefficientTable t;
  for (const auto& [k, s] : v) t[k] = GradedPoly(s);
  return t;
}

const std::vector<std::pair<Current, Current>>& CurrentAlgebra::ansatz_pairs() {
  using C = Current;
  static const std::vector<std::pair<Current, Current>> p{
      {C::U00, C::U00}, {C::U11, C::U00}, {C::U10, C::U00}, {C::U01, C::U00}, {C::U11, C::U11},
      {C::U10, C::U11}, {C::U01, C::U11}, {C::U10, C::U10}, {C::U01, C::U10}, {C::U01, C::U01}};
  return p;
}

CurrentAlgebra::CurrentAlgebra(CoefficientTable coefficients) : coef_(std::move(coefficients)) {
  for (const auto& n : ansatz_unknowns())
    if (!coef_.count(n)) throw std::invalid_argument("missing coefficient " + n);
  using C = Current;
  auto u = [](Current c, int n = 0) { return jet(current_field(c), n); };
  auto k = [&](const char* n) { return coef_.at(n); };
  // a u'(y) delta + b u(y) delta'
  auto primary = [&](Current c, const char* x, const char* y) {
    DistExpr e;
    e.add(0, k(x) * u(c, 1));
    e.add(1, k(y) * u(c));
    return e;
  };
  DistExpr e;
  e = primary(C::U00, "a1", "a2");
  e.add(3, k("a3"));
  table_[{C::U00, C::U00}] = e;
  table_[{C::U11, C::U00}] = primary(C::U11, "a4", "a5");
  table_[{C::U10, C::U00}] = primary(C::U10, "a6", "a7");
  table_[{C::U01, C::U00}] = primary(C::U01, "a8", "a9");
  e = primary(C::U00, "b1", "b2");
  e.add(3, k("b3"));
  table_[{C::U11, C::U11}] = e;
  table_[{C::U10, C::U11}] = primary(C::U01, "b4", "b5");
  table_[{C::U01, C::U11}] = primary(C::U10, "b6", "b7");
  e = DistExpr();
  e.add(0, k("c1") * u(C::U00));
  e.add(2, k("c2"));
  table_[{C::U10, C::U10}] = e;
  e = DistExpr();
  e.add(0, k("c3") * u(C::U11));
  table_[{C::U01, C::U10}] = e;
  e = DistExpr();
  e.add(0, k("d1") * u(C::U00));
  e.add(2, k("d2"));
  table_[{C::U01, C::U01}] = e;
}

DistExpr CurrentAlgebra::bracket(Current a, Current b) const {
  if (auto it = table_.find({a, b}); it != table_.end()) return it->second;
  const DistExpr& e = table_.at({b, a});
  return GradedPoly(-grade_sign(current_grade(a), current_grade(b))) * e.flipped();
}

GradedPoly CurrentAlgebra::transformation(Current b) const {
  static const char* ks[4] = {"k1", "k2", "k3", "k4"};
  GradedPoly out;
  for (Current j : kCurrents)
    out += smear(coef_.at(ks[current_index(j)]) * jet(parameter_field(j)), bracket(j, b));
  return out;
}

GradedPoly printed_transformation(Current b) {
  auto p = printed_u_transformations();  // {u10, u00, u01, u11}
  switch (b) {
    case Current::U00: return p[1];
    case Current::U11: return p[3];
    case Current::U10: return p[0];
    case Current::U01: return p[2];
  }
  return {};
}

// ---- solving -------------------------------------------------------------

namespace {

std::string product_key(const std::vector<std::string>& names) {
  std::vector<std::string> s = names;
  std::sort(s.begin(), s.end(), [](const std::string& a, const std::string& b) {
    bool ka = a[0] == 'k', kb = b[0] == 'k';
    if (ka != kb) return ka;
    return a < b;
  });
  std::string out;
  for (const auto& n : s) out += (out.empty() ? "" : "*") + n;
  return out;
}

}  // namespace

AnsatzSolution solve_ansatz() {
  AnsatzSolution sol;
  CurrentAlgebra sym(symbolic_coefficients());
  // equation key: (target current, monomial without parameters)
  std::map<std::pair<int, Monomial>, std::map<std::string, Scalar>> eqs;
  std::map<std::pair<int, Monomial>, Scalar> rhs;
  std::set<std::string> products;
  for (Current b : kCurrents) {
    GradedPoly lhs = sym.transformation(b);
    for (const auto& [m, c] : lhs.terms()) {
      Monomial rest;
      std::vector<std::string> names;
      for (const auto& f : m) {
        if (f.gen.kind == GenKind::Param) {
          for (int e = 0; e < f.exp; ++e) names.push_back(f.gen.param->name);
        } else {
          rest.push_back(f);
        }
      }
      std::string key = product_key(names);
      products.insert(key);
      eqs[{current_index(b), rest}][key] += c;
    }
    GradedPoly target = printed_transformation(b);
    for (const auto& [m, c] : target.terms()) {
      eqs[{current_index(b), m}];
      rhs[{current_index(b), m}] += c;
    }
  }
  std::vector<std::string> cols(products.begin(), products.end());
  std::map<std::string, std::size_t> col_of;
  for (std::size_t k = 0; k < cols.size(); ++k) col_of[cols[k]] = k;
  std::vector<std::vector<Scalar>> rows;
  for (const auto& [key, row] : eqs) {
    std::vector<Scalar> r(cols.size() + 1);
    for (const auto& [p, c] : row) r[col_of.at(p)] += c;
    if (auto it = rhs.find(key); it != rhs.end()) r[cols.size()] = it->second;
    rows.push_back(std::move(r));
  }
  sol.equations = rows.size();
  sol.unknown_products = cols.size();
  LinearResult lr = row_reduce(rows, cols.size());
  sol.consistent = lr.consistent;
  sol.unique = lr.consistent && lr.rank == cols.size();
  for (std::size_t k = 0; k < cols.size(); ++k)
    if (lr.values[k]) sol.products[cols[k]] = *lr.values[k];
  if (!sol.unique) {
    sol.notes.push_back("linear system in the products has rank " + std::to_string(lr.rank) + " of " +
                        std::to_string(cols.size()));
    return sol;
  }
  // factor products k_j * x with the normalization k1 = i
  sol.values["k1"] = Scalar::i();
  sol.notes.push_back("normalization k1 = i; the conditions fix only the products k_j x");
  bool progress = true;
  while (progress) {
    progress = false;
    for (const auto& [key, v] : sol.products) {
      auto star = key.find('*');
      if (star == std::string::npos) continue;
      std::string k = key.substr(0, star), x = key.substr(star + 1);
      bool hk = sol.values.count(k), hx = sol.values.count(x);
      if (hk && !hx && !sol.values[k].is_zero()) {
        sol.values[x] = v / sol.values[k];
        progress = true;
      } else if (hx && !hk && !sol.values[x].is_zero()) {
        sol.values[k] = v / sol.values[x];
        progress = true;
      }
    }
  }
  sol.factorizes = sol.values.size() == ansatz_unknowns().size();
  for (const auto& [key, v] : sol.products) {
    auto star = key.find('*');
    if (star == std::string::npos) {
      sol.factorizes = false;
      continue;
    }
    std::string k = key.substr(0, star), x = key.substr(star + 1);
    if (!sol.values.count(k) || !sol.values.count(x) || !(sol.values[k] * sol.values[x] == v)) {
      sol.factorizes = false;
      sol.notes.push_back("product " + key + " does not factor");
    }
  }
  return sol;
}

std::vector<CheckResult> verify_ansatz() {
  std::vector<CheckResult> out;
  AnsatzSolution s = solve_ansatz();
  out.push_back({"ansatz.consistent", "Ansatz", s.consistent, "", std::to_string(s.equations) + " equations"});
  out.push_back({"ansatz.unique_products", "Ansatz", s.unique, "",
                 std::to_string(s.unknown_products) + " products k_j x"});
  out.push_back({"ansatz.factorizes", "Ansatz", s.factorizes, "", ""});
  auto printed = printed_coefficients();
  for (const auto& n : ansatz_unknowns()) {
    Scalar want = printed.at(n).constant_term();
    bool ok = s.values.count(n) && s.values.at(n) == want;
    out.push_back({"ansatz.value." + n, "Ansatz", ok, ok || !s.values.count(n) ? "" : s.values.at(n).str(),
                   "printed " + want.str()});
  }
  // printed condition table: sign * k x = value
  const Scalar i = Scalar::i();
  const Scalar h = Scalar::rational(1, 2), h3 = Scalar::rational(3, 2);
  struct Cond {
    int sign;
    const char* product;
    Scalar value;
  };
  const std::vector<Cond> conds{
      {1, "k1*a2", -2 * i},  {1, "k2*a5", -2 * i}, {1, "k1*a1", -i},      {1, "k2*a4", -i},      {1, "k1*a3", -h * i},
      {-1, "k3*a7", h3 * i}, {1, "k4*a9", h3 * i}, {-1, "k3*a6", i},      {1, "k4*a8", i},       {1, "k1*a5", -2 * i},
      {1, "k2*b2", -2 * i},  {1, "k1*a4", -i},     {1, "k2*b1", -i},      {1, "k2*b3", -h * i},  {-1, "k3*b5", h3 * i},
      {1, "k4*b7", h3 * i},  {-1, "k3*b4", i},     {1, "k4*b6", i},       {1, "k1*a7", -h3 * i}, {1, "k2*b5", -h3 * i},
      {1, "k1*a6", -i},      {1, "k2*b4", -i},     {1, "k3*c1", h},       {1, "k3*c2", h},       {1, "k4*c3", h},
      {1, "k1*a9", -h3 * i}, {1, "k2*b7", -h3 * i}, {1, "k1*a8", -i},     {1, "k2*b6", -i},      {-1, "k3*c3", h},
      {1, "k4*d1", h},       {1, "k4*d2", h}};
  bool all = true;
  std::string bad;
  for (const auto& c : conds) {
    auto it = s.products.find(c.product);
    if (it == s.products.end() || !(Scalar(c.sign) * it->second == c.value)) {
      all = false;
      bad += std::string(bad.empty() ? "" : " ") + c.product;
    }
  }
  out.push_back({"ansatz.conditions", "Ansatz", all, bad, std::to_string(conds.size()) + " printed conditions"});
  bool pinned_all = true;
  for (const auto& c : conds)
    if (!s.products.count(c.product)) pinned_all = false;
  out.push_back({"ansatz.conditions_cover_system", "Ansatz", pinned_all && conds.size() == s.products.size(), "",
                 std::to_string(s.products.size()) + " products in the system"});
  if (s.values.size() == ansatz_unknowns().size()) {
    bool audit = s.values.at("k1") * s.values.at("a5") == -2 * i && s.values.at("k2") * s.values.at("b2") == -2 * i;
    out.push_back({"ansatz.audit.k1a5_k2b2", "Ansatz", audit, "", ""});
  } else {
    out.push_back({"ansatz.audit.k1a5_k2b2", "Ansatz", false, "", "unsolved"});
  }
  CurrentAlgebra alg(printed);
  for (Current b : kCurrents)
    out.push_back(check_zero("ansatz.reproduces." + current_name(b), "TransbyGen",
                             alg.transformation(b) - printed_transformation(b)));
  // one-parameter freedom: k -> t k, brackets -> brackets / t
  CoefficientTable scaled;
  for (const auto& [n, v] : printed) scaled[n] = n[0] == 'k' ? Scalar(3) * v : Scalar::rational(1, 3) * v;
  CurrentAlgebra alt(scaled);
  GradedPoly diff;
  for (Current b : kCurrents) diff += alt.transformation(b) - printed_transformation(b);
  out.push_back(check_zero("ansatz.scaling_freedom", "TransbyGen", diff));
  return out;
}

namespace {

DistExpr printed_current_bracket(Current a, Current b) {
  using C = Current;
  const Scalar i = Scalar::i();
  const Scalar h = Scalar::rational(1, 2), h3 = Scalar::rational(3, 2);
  auto u = [](Current c, int n = 0) { return jet(current_field(c), n); };
  auto prim = [&](Current c, Scalar w) {
    DistExpr e;
    e.add(0, -u(c, 1));
    e.add(1, w * u(c));
    return e;
  };
  DistExpr e;
  if (a == C::U00 && b == C::U00) {
    e = prim(C::U00, -2);
    e.add(3, GradedPoly(-h));
  } else if (a == C::U11 && b == C::U00) {
    e = prim(C::U11, -2);
  } else if (a == C::U10 && b == C::U00) {
    e = prim(C::U10, -h3);
  } else if (a == C::U01 && b == C::U00) {
    e = prim(C::U01, -h3);
  } else if (a == C::U11 && b == C::U11) {
    e = prim(C::U00, -2);
    e.add(3, GradedPoly(-h));
  } else if (a == C::U10 && b == C::U11) {
    e = prim(C::U01, -h3);
  } else if (a == C::U01 && b == C::U11) {
    e = prim(C::U10, -h3);
  } else if (a == C::U10 && b == C::U10) {
    e.add(0, -h * i * u(C::U00));
    e.add(2, GradedPoly(-h * i));
  } else if (a == C::U01 && b == C::U10) {
    e.add(0, h * i * u(C::U11));
  } else if (a == C::U01 && b == C::U01) {
    e.add(0, h * i * u(C::U00));
    e.add(2, GradedPoly(h * i));
  } else {
    throw std::invalid_argument("not a printed bracket");
  }
  return e;
}

CheckResult check_dist(std::string id, std::string anchor, const DistExpr& got, const DistExpr& want) {
  DistExpr diff = got + GradedPoly(-1) * want;
  return {std::move(id), std::move(anchor), diff.is_zero(), diff.is_zero() ? "" : diff.str(), ""};
}

CoefficientTable solved_table() {
  AnsatzSolution s = solve_ansatz();
  if (s.values.size() != ansatz_unknowns().size()) throw std::runtime_error("ansatz has no unique solution");
  CoefficientTable t;
  for (const auto& [n, v] : s.values) t[n] = GradedPoly(v);
  return t;
}

}  // namespace

std::vector<CheckResult> verify_current_algebra() {
  std::vector<CheckResult> out;
  CurrentAlgebra alg(solved_table());
  for (const auto& [a, b] : CurrentAlgebra::ansatz_pairs())
    out.push_back(check_dist("current_algebra." + pair_id(a, b), "SuperVirCurAlg", alg.bracket(a, b),
                             printed_current_bracket(a, b)));
  // symmetry classification from the grading against the printed list
  const std::set<std::pair<Current, Current>> printed_symmetric{
      {Current::U10, Current::U11}, {Current::U01, Current::U11}, {Current::U10, Current::U10}, {Current::U01, Current::U01}};
  bool cls = true;
  for (const auto& [a, b] : CurrentAlgebra::ansatz_pairs()) {
    bool symmetric = grade_sign(current_grade(a), current_grade(b)) == -1;
    if (symmetric != (printed_symmetric.count({a, b}) > 0)) cls = false;
  }
  out.push_back({"current_algebra.symmetry_classification", "PB_def", cls, "", "4 symmetric, 6 antisymmetric"});
  // diagonal brackets must reproduce themselves under the flip
  for (Current a : kCurrents) {
    DistExpr e = alg.bracket(a, a);
    DistExpr f = GradedPoly(-grade_sign(current_grade(a), current_grade(a))) * e.flipped();
    out.push_back(check_dist("current_algebra.self_flip." + current_name(a), "PB_def", f, e));
  }
  bool involution = true;
  for (Current a : kCurrents)
    for (Current b : kCurrents) {
      DistExpr e = alg.bracket(a, b);
      if (!(e.flipped().flipped() == e)) involution = false;
      DistExpr back = GradedPoly(-grade_sign(current_grade(a), current_grade(b))) * alg.bracket(b, a).flipped();
      if (!(back == e)) involution = false;
    }
  out.push_back({"current_algebra.graded_antisymmetry", "PB_def", involution, "", "16 ordered pairs"});
  // N=1 subalgebras
  for (Current odd : {Current::U10, Current::U01}) {
    bool closed = true;
    for (Current a : {Current::U00, odd})
      for (Current b : {Current::U00, odd}) {
        DistExpr e = alg.bracket(a, b);
        for (const auto& [m, c] : e.terms())
          for (const auto& [mono, coef] : c.terms())
            for (const auto& f : mono)
              if (f.gen.kind != GenKind::Jet || (f.gen.field != current_field(Current::U00) && f.gen.field != current_field(odd)))
                closed = false;
      }
    out.push_back({"current_algebra.subalgebra.u00_" + current_name(odd), "SuperVirCurAlg", closed, "", ""});
  }
  return out;
}

// ---- modes ---------------------------------------------------------------

std::string sector_name(Sector s) {
  switch (s) {
    case Sector::RRR: return "rrr";
    case Sector::RNSNS: return "rnsns";
    case Sector::NSNSR: return "nsnsr";
  }
  return "?";
}

Sector parse_sector(std::string_view s) {
  std::string l;
  for (char c : s)
    if (c != '/' && c != '-' && c != '_') l += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (l == "rrr") return Sector::RRR;
  if (l == "rnsns") return Sector::RNSNS;
  if (l == "nsnsr") return Sector::NSNSR;
  throw std::invalid_argument("unknown sector: " + std::string(s));
}

bool half_integer(Sector s, Current c) {
  switch (s) {
    case Sector::RRR: return false;
    case Sector::RNSNS: return c == Current::U10 || c == Current::U01;
    case Sector::NSNSR: return c == Current::U11 || c == Current::U10;
  }
  return false;
}

std::string mode_name(const Mode& m) {
  static const char* names[4] = {"L", "H", "G", "F"};
  std::string idx = m.twice % 2 ? std::to_string(m.twice) + "/2" : std::to_string(m.twice / 2);
  return std::string(names[current_index(m.family)]) + "[" + idx + "]";
}

void ModeVec::add(const Mode& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = modes.find(m);
  if (it == modes.end()) {
    modes.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) modes.erase(it);
}

std::string ModeVec::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : modes) {
    os << (first ? "" : " + ") << "(" << c.str() << ")" << mode_name(m);
    first = false;
  }
  if (!central.is_zero()) os << (first ? "" : " + ") << "(" << central.str() << ")";
  return os.str();
}

namespace {

Scalar half(int twice) { return Scalar(mpq_class(twice, 2)); }

Scalar power(const Scalar& s, int n) {
  Scalar r(1);
  for (int k = 0; k < n; ++k) r *= s;
  return r;
}

/// Flattened term c * u^(j)(y) delta^(m)(y - x); target empty for constants.
struct ModeTerm {
  std::optional<Current> target;
  int j = 0;
  int m = 0;
  Scalar coef;
};

}  // namespace

struct ModeTable {
  std::array<std::array<std::vector<ModeTerm>, 4>, 4> cells;
};

namespace {

ModeTable flatten(const CurrentAlgebra& alg) {
  ModeTable t;
  for (Current a : kCurrents)
    for (Current b : kCurrents) {
      DistExpr e = alg.bracket(a, b);
      for (const auto& [m, c] : e.terms())
        for (const auto& [mono, coef] : c.terms()) {
          ModeTerm term;
          term.m = m;
          term.coef = coef;
          if (!mono.empty()) {
            if (mono.size() != 1 || mono[0].exp != 1 || mono[0].gen.kind != GenKind::Jet)
              throw std::invalid_argument("bracket is not linear in the currents");
            auto cur = current_of(mono[0].gen.field);
            if (!cur) throw std::invalid_argument("unknown current in bracket");
            term.target = *cur;
            term.j = mono[0].gen.dplus_count;
          }
          t.cells[current_index(a)][current_index(b)].push_back(term);
        }
    }
  return t;
}

ModeVec eval_bracket(const ModeTable& t, const Mode& a, const Mode& b) {
  ModeVec out;
  const int sum = a.twice + b.twice;
  const Scalar i = Scalar::i();
  const Scalar nb = half(b.twice), ns = half(sum);
  for (const auto& term : t.cells[current_index(a.family)][current_index(b.family)]) {
    Scalar w = term.coef * power(-i * nb, term.m);
    if (term.target) {
      out.add(Mode{*term.target, sum}, w * power(i * ns, term.j));
    } else if (sum == 0) {
      out.central += w;
    }
  }
  return out;
}

ModeVec combine(ModeVec acc, const ModeVec& v, const Scalar& s) {
  for (const auto& [m, c] : v.modes) acc.add(m, s * c);
  acc.central += s * v.central;
  return acc;
}

}  // namespace

ModeAlgebra::ModeAlgebra(const CurrentAlgebra& currents, Sector sector)
    : table_(std::make_shared<ModeTable>(flatten(currents))), sector_(sector) {}

ModeVec ModeAlgebra::bracket(const Mode& a, const Mode& b) const { return eval_bracket(*table_, a, b); }

ModeVec ModeAlgebra::bracket(const ModeVec& a, const Mode& b) const {
  ModeVec out;
  for (const auto& [m, c] : a.modes) out = combine(std::move(out), bracket(m, b), c);
  return out;
}

ModeVec ModeAlgebra::bracket(const Mode& a, const ModeVec& b) const {
  ModeVec out;
  for (const auto& [m, c] : b.modes) out = combine(std::move(out), bracket(a, m), c);
  return out;
}

bool ModeAlgebra::in_domain(const Mode& m) const { return (m.twice % 2 != 0) == half_integer(sector_, m.family); }

std::vector<Mode> ModeAlgebra::window_modes(int window) const {
  std::vector<Mode> out;
  for (Current c : kCurrents)
    for (int t = -2 * window; t <= 2 * window; ++t) {
      Mode m{c, t};
      if (in_domain(m)) out.push_back(m);
    }
  return out;
}

ModeVec printed_mode_bracket(const Mode& a, const Mode& b) {
  using C = Current;
  const Scalar i = Scalar::i();
  const Scalar h = Scalar::rational(1, 2);
  const Scalar x = half(a.twice), y = half(b.twice);
  const int sum = a.twice + b.twice;
  ModeVec out;
  auto central = [&](const Scalar& c) {
    if (sum == 0) out.central += c;
  };
  if (a.family == C::U00 && b.family == C::U00) {
    out.add({C::U00, sum}, i * (y - x));
    central(h * i * power(x, 3));
  } else if (a.family == C::U11 && b.family == C::U00) {
    out.add({C::U11, sum}, i * (y - x));
  } else if (a.family == C::U10 && b.family == C::U00) {
    out.add({C::U10, sum}, i * (h * y - x));
  } else if (a.family == C::U01 && b.family == C::U00) {
    out.add({C::U01, sum}, i * (h * y - x));
  } else if (a.family == C::U11 && b.family == C::U11) {
    out.add({C::U00, sum}, i * (y - x));
    central(h * i * power(x, 3));
  } else if (a.family == C::U10 && b.family == C::U11) {
    out.add({C::U01, sum}, i * (h * y - x));
  } else if (a.family == C::U01 && b.family == C::U11) {
    out.add({C::U10, sum}, i * (h * y - x));
  } else if (a.family == C::U10 && b.family == C::U10) {
    out.add({C::U00, sum}, -h * i);
    central(h * i * power(x, 2));
  } else if (a.family == C::U01 && b.family == C::U10) {
    out.add({C::U11, sum}, h * i);
  } else if (a.family == C::U01 && b.family == C::U01) {
    out.add({C::U00, sum}, h * i);
    central(-h * i * power(x, 2));
  } else {
    throw std::invalid_argument("not a printed mode bracket");
  }
  return out;
}

std::vector<CheckResult> verify_mode_algebra(Sector sector, int window) {
  std::vector<CheckResult> out;
  CurrentAlgebra alg(solved_table());
  ModeAlgebra modes(alg, sector);
  auto ms = modes.window_modes(window);
  const std::string tag = "modes." + sector_name(sector) + ".";
  for (const auto& [fa, fb] : CurrentAlgebra::ansatz_pairs()) {
    std::string bad;
    std::size_t n = 0;
    for (const auto& a : ms)
      for (const auto& b : ms) {
        if (a.family != fa || b.family != fb) continue;
        ++n;
        ModeVec got = modes.bracket(a, b), want = printed_mode_bracket(a, b);
        if (!(got == want) && bad.empty()) bad = mode_name(a) + "," + mode_name(b) + ": " + got.str() + " vs " + want.str();
      }
    out.push_back({tag + pair_id(fa, fb), "mode algebra", bad.empty() && n > 0, bad, std::to_string(n) + " index pairs"});
  }
  bool closure = true, anti = true, central_ok = true;
  std::set<Current> with_central;
  std::string bad;
  for (const auto& a : ms)
    for (const auto& b : ms) {
      ModeVec v = modes.bracket(a, b);
      for (const auto& [m, c] : v.modes)
        if (!modes.in_domain(m)) {
          closure = false;
          if (bad.empty()) bad = mode_name(a) + "," + mode_name(b) + " -> " + mode_name(m);
        }
      if (!v.central.is_zero()) {
        if (a.family != b.family) central_ok = false;
        with_central.insert(a.family);
      }
      ModeVec w = modes.bracket(b, a);
      if (!(combine(v, w, Scalar(grade_sign(current_grade(a.family), current_grade(b.family)))).is_zero())) anti = false;
    }
  out.push_back({tag + "index_closure", "mode algebra", closure, bad, ""});
  out.push_back({tag + "graded_antisymmetry", "PB_def", anti, "", ""});
  out.push_back({tag + "central_terms_diagonal", "mode algebra", central_ok && with_central.size() == 4, "",
                 std::to_string(with_central.size()) + " families with central terms"});
  ModeVec l = modes.bracket(Mode{Current::U00, 2}, Mode{Current::U00, -2});
  ModeVec want;
  want.add({Current::U00, 0}, -2 * Scalar::i());
  want.central = Scalar::rational(1, 2) * Scalar::i();
  out.push_back({tag + "L1_Lm1", "mode algebra", l == want, l == want ? "" : l.str(), ""});
  if (half_integer(sector, Current::U10)) {
    ModeVec g = modes.bracket(Mode{Current::U10, 1}, Mode{Current::U10, -1});
    ModeVec gw;
    gw.add({Current::U00, 0}, Scalar::rational(-1, 2) * Scalar::i());
    gw.central = Scalar::rational(1, 8) * Scalar::i();
    out.push_back({tag + "G_half", "mode algebra", g == gw, g == gw ? "" : g.str(), ""});
  }
  return out;
}

JacobiReport check_mode_jacobi(Sector sector, int window) {
  if (window < 2) throw std::invalid_argument("window must be at least 2");
  JacobiReport rep;
  rep.sector = sector;
  rep.window = window;
  CurrentAlgebra alg(solved_table());
  ModeTable table = flatten(alg);
  int mode_deg = 0, central_deg = 0;
  for (const auto& row : table.cells)
    for (const auto& cell : row)
      for (const auto& t : cell) {
        if (t.target) mode_deg = std::max(mode_deg, t.j + t.m);
        else central_deg = std::max(central_deg, t.m);
      }
  rep.degree_bound = mode_deg + std::max(mode_deg, central_deg);
  ModeAlgebra modes(alg, sector);
  const auto ms = modes.window_modes(window);
  auto sign = [](const Mode& a, const Mode& b) {
    return Scalar(grade_sign(current_grade(a.family), current_grade(b.family)));
  };
  auto vbr = [&](const ModeVec& v, const Mode& b) {
    ModeVec out;
    for (const auto& [m, c] : v.modes) out = combine(std::move(out), eval_bracket(table, m, b), c);
    return out;
  };
  auto brv = [&](const Mode& a, const ModeVec& v) {
    ModeVec out;
    for (const auto& [m, c] : v.modes) out = combine(std::move(out), eval_bracket(table, a, m), c);
    return out;
  };
  unsigned threads = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("Z2L_THREADS")) threads = static_cast<unsigned>(std::max(1, std::atoi(env)));
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(ms.size())));
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  auto worker = [&] {
    std::vector<std::string> local;
    for (std::size_t ia; (ia = next.fetch_add(1)) < ms.size();) {
      const Mode& a = ms[ia];
      for (const auto& b : ms)
        for (const auto& c : ms) {
          ModeVec lhs = brv(a, eval_bracket(table, b, c));
          ModeVec r1 = vbr(eval_bracket(table, a, b), c);
          ModeVec r2 = brv(b, eval_bracket(table, a, c));
          ModeVec j = combine(combine(lhs, r1, Scalar(-1)), r2, -sign(a, b));
          if (!j.is_zero() && local.size() < 20)
            local.push_back(mode_name(a) + "," + mode_name(b) + "," + mode_name(c) + ": " + j.str());
        }
    }
    std::lock_guard<std::mutex> g(mu);
    rep.failures.insert(rep.failures.end(), local.begin(), local.end());
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::sort(rep.failures.begin(), rep.failures.end());
  rep.triples = ms.size() * ms.size() * ms.size();
  return rep;
}

}  // namespace z2sl
