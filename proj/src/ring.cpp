#include "z2sl/ring.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace z2sl {

// ---------------------------------------------------------------------------
// registries

namespace {

struct Registry {
  std::mutex mu;
  std::deque<FieldInfo> fields;
  std::unordered_map<std::string, const FieldInfo*> field_by_name;
  std::deque<ParamInfo> params;
  std::unordered_map<std::string, const ParamInfo*> param_by_name;
  std::deque<NamedPoly> named;
  std::unordered_map<std::string, const NamedPoly*> named_by_name;
};

Registry& registry() {
  static Registry r;
  return r;
}

Field declare(FieldInfo info) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (auto it = r.field_by_name.find(info.name); it != r.field_by_name.end()) {
    const FieldInfo& old = *it->second;
    if (old.grade != info.grade || old.kind != info.kind || old.space != info.space ||
        old.chirality != info.chirality)
      throw std::invalid_argument("field '" + info.name + "' redeclared with different attributes");
    return Field(it->second);
  }
  r.fields.push_back(std::move(info));
  const FieldInfo* p = &r.fields.back();
  r.field_by_name.emplace(p->name, p);
  return Field(p);
}

}  // namespace

std::strong_ordering operator<=>(Field a, Field b) {
  if (a.info_ == b.info_) return std::strong_ordering::equal;
  if (!a.info_) return std::strong_ordering::less;
  if (!b.info_) return std::strong_ordering::greater;
  int c = a.info_->name.compare(b.info_->name);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Field declare_superfield(std::string_view name, GradeVec grade, Chirality chirality, Superspace space) {
  return declare(FieldInfo{std::string(name), grade, FieldKind::Superfield, space, chirality});
}

Field declare_component(std::string_view name, GradeVec grade, Chirality chirality) {
  return declare(FieldInfo{std::string(name), grade, FieldKind::Component, Superspace::Standard, chirality});
}

std::optional<Field> find_field(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  if (auto it = r.field_by_name.find(std::string(name)); it != r.field_by_name.end())
    return Field(it->second);
  return std::nullopt;
}

const ParamInfo* intern_param(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mu);
  std::string key(name);
  if (auto it = r.param_by_name.find(key); it != r.param_by_name.end()) return it->second;
  r.params.push_back(ParamInfo{key});
  const ParamInfo* p = &r.params.back();
  r.param_by_name.emplace(key, p);
  return p;
}

const NamedPoly* register_invertible(std::string_view name, const GradedPoly& value) {
  if (!value.is_zero() && value.grade() != kG00)
    throw std::invalid_argument("register_invertible: value must be [00]-graded");
  if (value.constant_term().is_zero())
    throw std::invalid_argument("register_invertible: value needs a nonzero constant term");
  auto& r = registry();
  std::lock_guard lock(r.mu);
  std::string key(name);
  if (auto it = r.named_by_name.find(key); it != r.named_by_name.end()) {
    if (!(it->second->value == value))
      throw std::invalid_argument("register_invertible: '" + key + "' already registered with another value");
    return it->second;
  }
  r.named.push_back(NamedPoly{key, value});
  const NamedPoly* p = &r.named.back();
  r.named_by_name.emplace(key, p);
  return p;
}

// ---------------------------------------------------------------------------
// coordinates and derivatives

GradeVec coord_grade(OddCoord c) { return c == OddCoord::Theta01 ? kG01 : kG10; }

std::string coord_name(OddCoord c) {
  switch (c) {
    case OddCoord::ThetaPlus: return "th+";
    case OddCoord::ThetaMinus: return "th-";
    case OddCoord::Theta10: return "th10";
    case OddCoord::Theta01: return "th01";
  }
  return "?";
}

GradeVec deriv_grade(Deriv d) {
  switch (d) {
    case Deriv::DPlus:
    case Deriv::DMinus:
    case Deriv::D10: return kG10;
    case Deriv::D01: return kG01;
    default: return kG00;
  }
}

bool deriv_is_odd(Deriv d) { return d != Deriv::PartialPlus && d != Deriv::PartialMinus; }

bool deriv_is_plus(Deriv d) { return d == Deriv::DPlus || d == Deriv::PartialPlus || d == Deriv::D10; }

std::string deriv_name(Deriv d) {
  switch (d) {
    case Deriv::DPlus: return "D+";
    case Deriv::DMinus: return "D-";
    case Deriv::PartialPlus: return "d+";
    case Deriv::PartialMinus: return "d-";
    case Deriv::D10: return "D10";
    case Deriv::D01: return "D01";
  }
  return "?";
}

Deriv parse_deriv(std::string_view n) {
  if (n == "D+" || n == "D" || n == "Dp") return Deriv::DPlus;
  if (n == "D-" || n == "Dbar" || n == "Dm") return Deriv::DMinus;
  if (n == "d+" || n == "dp" || n == "partial+") return Deriv::PartialPlus;
  if (n == "d-" || n == "dm" || n == "partial-") return Deriv::PartialMinus;
  if (n == "D10") return Deriv::D10;
  if (n == "D01") return Deriv::D01;
  throw std::invalid_argument("unknown derivative '" + std::string(n) + "'");
}

namespace {

GradeVec odd_plus_grade(Superspace) { return kG10; }
GradeVec odd_minus_grade(Superspace s) { return s == Superspace::Standard ? kG10 : kG01; }

OddCoord coord_of(Deriv d) {
  switch (d) {
    case Deriv::DPlus: return OddCoord::ThetaPlus;
    case Deriv::DMinus: return OddCoord::ThetaMinus;
    case Deriv::D10: return OddCoord::Theta10;
    case Deriv::D01: return OddCoord::Theta01;
    default: throw std::logic_error("coord_of: even derivative");
  }
}

Superspace space_of(Deriv d) {
  return (d == Deriv::D10 || d == Deriv::D01) ? Superspace::Alternative : Superspace::Standard;
}

}  // namespace

// ---------------------------------------------------------------------------
// LinearArg

LinearArg::LinearArg(std::initializer_list<std::pair<Field, mpq_class>> terms) : terms_(terms) {
  normalize();
}

void LinearArg::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<Field, mpq_class>> out;
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const auto& t) { return sgn(t.second) == 0; });
  terms_ = std::move(out);
}

mpq_class LinearArg::coefficient(Field f) const {
  for (const auto& [g, c] : terms_)
    if (g == f) return c;
  return 0;
}

GradeVec LinearArg::grade() const {
  if (terms_.empty()) return kG00;
  GradeVec g = terms_.front().first.grade();
  for (const auto& t : terms_)
    if (t.first.grade() != g) throw std::invalid_argument("LinearArg: mixed gradings in " + str());
  return g;
}

bool LinearArg::leading_negative() const { return !terms_.empty() && sgn(terms_.front().second) < 0; }

LinearArg LinearArg::operator+(const LinearArg& o) const {
  LinearArg r = *this;
  r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
  r.normalize();
  return r;
}

LinearArg LinearArg::operator-(const LinearArg& o) const { return *this + (-o); }

LinearArg LinearArg::operator-() const { return scaled(-1); }

LinearArg LinearArg::scaled(const mpq_class& c) const {
  LinearArg r = *this;
  for (auto& t : r.terms_) t.second *= c;
  r.normalize();
  return r;
}

std::strong_ordering operator<=>(const LinearArg& a, const LinearArg& b) {
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (auto c = a.terms_[k].first <=> b.terms_[k].first; c != 0) return c;
    int q = cmp(a.terms_[k].second, b.terms_[k].second);
    if (q != 0) return q < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string LinearArg::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [f, c] : terms_) {
    mpq_class mag = abs(c);
    if (sgn(c) < 0)
      s += first ? "-" : "-";
    else if (!first)
      s += "+";
    if (mag != 1) s += mag.get_str() + "*";
    s += f.name();
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Generator

std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
  if (a.kind != b.kind) return a.kind <=> b.kind;
  switch (a.kind) {
    case GenKind::OddCoord: return a.coord <=> b.coord;
    case GenKind::Jet: {
      if (auto c = a.field <=> b.field; c != 0) return c;
      if (auto c = a.dplus_count <=> b.dplus_count; c != 0) return c;
      if (auto c = a.dminus_count <=> b.dminus_count; c != 0) return c;
      if (auto c = a.odd_plus <=> b.odd_plus; c != 0) return c;
      return a.odd_minus <=> b.odd_minus;
    }
    case GenKind::Param: {
      if (a.param == b.param) return std::strong_ordering::equal;
      int c = a.param->name.compare(b.param->name);
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    case GenKind::Inv: {
      if (a.inv == b.inv) return std::strong_ordering::equal;
      int c = a.inv->name.compare(b.inv->name);
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    default: return *a.arg <=> *b.arg;
  }
}

std::string Generator::str() const {
  switch (kind) {
    case GenKind::OddCoord: return coord_name(coord);
    case GenKind::Jet: {
      std::string prefix;
      bool alt = field.space() == Superspace::Alternative && !field.is_component();
      if (dplus_count) prefix += dplus_count == 1 ? "d+" : "d+^" + std::to_string(dplus_count);
      if (dminus_count) prefix += dminus_count == 1 ? "d-" : "d-^" + std::to_string(dminus_count);
      if (odd_plus) prefix += alt ? "D10" : "D+";
      if (odd_minus) prefix += alt ? "D01" : "D-";
      return prefix.empty() ? field.name() : prefix + "(" + field.name() + ")";
    }
    case GenKind::Param: return param->name;
    case GenKind::Inv: return "inv(" + inv->name + ")";
    case GenKind::Exp: return "exp(" + arg->str() + ")";
    case GenKind::Cosh: return "cosh(" + arg->str() + ")";
    case GenKind::Sinh: return "sinh(" + arg->str() + ")";
  }
  return "?";
}

namespace {

Generator make_jet_gen(Field f, int a, int b, bool e1, bool e2) {
  Generator g;
  g.kind = GenKind::Jet;
  g.field = f;
  g.dplus_count = static_cast<std::uint8_t>(a);
  g.dminus_count = static_cast<std::uint8_t>(b);
  g.odd_plus = e1;
  g.odd_minus = e2;
  GradeVec gr = f.grade();
  if (e1) gr += odd_plus_grade(f.space());
  if (e2) gr += odd_minus_grade(f.space());
  g.grade = gr;
  return g;
}

Generator make_func_gen(GenKind kind, LinearArg arg) {
  Generator g;
  g.kind = kind;
  g.grade = kind == GenKind::Sinh ? kG11 : kG00;
  g.arg = std::make_shared<const LinearArg>(std::move(arg));
  return g;
}

GradeVec scaled_grade(GradeVec g, int exp) { return (exp & 1) ? g : kG00; }

}  // namespace

GradeVec monomial_grade(const Monomial& m) {
  GradeVec g;
  for (const auto& f : m) g += scaled_grade(f.gen.grade, f.exp);
  return g;
}

std::string monomial_str(const Monomial& m) {
  std::string s;
  for (const auto& f : m) {
    if (!s.empty()) s += "*";
    s += f.gen.str();
    if (f.exp != 1) s += "^" + std::to_string(f.exp);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// multiplication kernel

namespace {

struct Term {
  Scalar coef;
  Monomial mono;
};

/// Normalizes a hyperbolic factor: returns (sign, generator) or (value, nullopt)
/// for a zero argument.
std::pair<Scalar, std::optional<Generator>> normalized_hyp(GenKind kind, LinearArg arg) {
  if (arg.empty()) return {kind == GenKind::Cosh ? Scalar(1) : Scalar(0), std::nullopt};
  Scalar sign = 1;
  if (arg.leading_negative()) {
    arg = -arg;
    if (kind == GenKind::Sinh) sign = -1;
  }
  return {sign, make_func_gen(kind, std::move(arg))};
}

/// Multiplies two lists of normalized hyperbolic factors (each a single
/// optional factor) via product-to-sum.
std::vector<std::pair<Scalar, std::optional<Generator>>> hyp_product(
    const std::vector<std::pair<Scalar, std::optional<Generator>>>& acc, const Generator& h) {
  std::vector<std::pair<Scalar, std::optional<Generator>>> out;
  const Scalar half = Scalar::rational(1, 2);
  for (const auto& [c, g] : acc) {
    if (!g) {
      out.emplace_back(c, h);
      continue;
    }
    const LinearArg& a = *g->arg;
    const LinearArg& b = *h.arg;
    bool ca = g->kind == GenKind::Cosh, cb = h.kind == GenKind::Cosh;
    GenKind sum_kind = (ca == cb) ? GenKind::Cosh : GenKind::Sinh;
    Scalar diff_sign;
    if (ca && cb)
      diff_sign = 1;  // cosh a cosh b = (cosh(a+b) + cosh(a-b))/2
    else if (ca && !cb)
      diff_sign = -1;  // cosh a sinh b = (sinh(a+b) - sinh(a-b))/2
    else if (!ca && cb)
      diff_sign = 1;  // sinh a cosh b = (sinh(a+b) + sinh(a-b))/2
    else
      diff_sign = -1;  // sinh a sinh b = (cosh(a+b) - cosh(a-b))/2
    auto [s1, g1] = normalized_hyp(sum_kind, a + b);
    auto [s2, g2] = normalized_hyp(sum_kind, a - b);
    if (!s1.is_zero()) out.emplace_back(c * half * s1, g1);
    if (!s2.is_zero()) out.emplace_back(c * half * diff_sign * s2, g2);
  }
  return out;
}

/// Merges two normalized monomials; appends resulting terms (scaled by coef).
void multiply_monomials(const Monomial& a, const Monomial& b, const Scalar& coef, std::vector<Term>& out) {
  // suffix grades of a for the sign of moving b-factors left past a-factors
  std::vector<GradeVec> suffix(a.size() + 1);
  for (std::size_t k = a.size(); k-- > 0;) suffix[k] = suffix[k + 1] + scaled_grade(a[k].gen.grade, a[k].exp);

  int sign = 1;
  Monomial merged;
  merged.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      merged.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      merged.push_back(b[j++]);
      continue;
    }
    auto c = a[i].gen <=> b[j].gen;
    if (c < 0) {
      merged.push_back(a[i++]);
    } else if (c > 0) {
      sign *= grade_sign(scaled_grade(b[j].gen.grade, b[j].exp), suffix[i]);
      merged.push_back(b[j++]);
    } else {
      // b[j] moves past a[i+1..] and joins a[i]
      sign *= grade_sign(scaled_grade(b[j].gen.grade, b[j].exp), suffix[i + 1]);
      Factor f = a[i];
      f.exp += b[j].exp;
      merged.push_back(std::move(f));
      ++i;
      ++j;
    }
  }

  Monomial result;
  result.reserve(merged.size());
  std::optional<LinearArg> exp_arg;
  std::vector<Generator> hyps;
  for (auto& f : merged) {
    switch (f.gen.kind) {
      case GenKind::Exp:
        exp_arg = exp_arg ? *exp_arg + f.gen.arg->scaled(f.exp) : f.gen.arg->scaled(f.exp);
        break;
      case GenKind::Cosh:
      case GenKind::Sinh:
        for (int k = 0; k < f.exp; ++k) hyps.push_back(f.gen);
        break;
      case GenKind::Param:
        if (f.exp != 0) result.push_back(std::move(f));
        break;
      default:
        if (f.exp >= 2 && f.gen.nilpotent()) return;
        result.push_back(std::move(f));
    }
  }
  if (exp_arg && !exp_arg->empty()) result.push_back(Factor{make_func_gen(GenKind::Exp, *exp_arg), 1});

  if (hyps.empty()) {
    out.push_back(Term{coef * Scalar(sign), std::move(result)});
    return;
  }
  std::vector<std::pair<Scalar, std::optional<Generator>>> acc{{Scalar(1), std::nullopt}};
  for (const auto& h : hyps) acc = hyp_product(acc, h);
  for (auto& [c, g] : acc) {
    Monomial m = result;
    if (g) m.push_back(Factor{*g, 1});
    out.push_back(Term{coef * Scalar(sign) * c, std::move(m)});
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// GradedPoly

GradedPoly::GradedPoly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

GradedPoly GradedPoly::from_generator(Generator g, int exp) {
  if (exp == 0) return GradedPoly(1);
  if (g.kind == GenKind::Exp || g.kind == GenKind::Cosh || g.kind == GenKind::Sinh) {
    // route through multiplication to merge powers
    GradedPoly base = from_monomial(Monomial{Factor{g, 1}});
    return base.pow(exp);
  }
  if (exp >= 2 && g.nilpotent()) return GradedPoly();
  return from_monomial(Monomial{Factor{std::move(g), exp}});
}

GradedPoly GradedPoly::from_monomial(const Monomial& m, const Scalar& c) {
  GradedPoly p;
  p.add_term(m, c);
  return p;
}

void GradedPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar GradedPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool GradedPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  GradeVec g = monomial_grade(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (monomial_grade(m) != g) return false;
  return true;
}

GradeVec GradedPoly::grade() const {
  if (terms_.empty()) throw std::logic_error("GradedPoly::grade: zero polynomial has no grading");
  if (!is_homogeneous()) throw std::logic_error("GradedPoly::grade: inhomogeneous " + str());
  return monomial_grade(terms_.begin()->first);
}

std::map<GradeVec, GradedPoly> GradedPoly::homogeneous_parts() const {
  std::map<GradeVec, GradedPoly> out;
  for (const auto& [m, c] : terms_) out[monomial_grade(m)].terms_.emplace(m, c);
  return out;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

GradedPoly& GradedPoly::operator*=(const GradedPoly& o) { return *this = mul(*this, o); }

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) { return mul(a, b); }

GradedPoly GradedPoly::operator-() const {
  GradedPoly r = *this;
  r *= Scalar(-1);
  return r;
}

GradedPoly GradedPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("GradedPoly::pow: negative exponent");
  GradedPoly r(1);
  for (int k = 0; k < n; ++k) {
    r = mul(r, *this);
    if (r.is_zero()) break;
  }
  return r;
}

std::string GradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    std::string term;
    std::string cs = c.str();
    bool complex = !c.is_real() && sgn(c.re()) != 0;
    if (m.empty()) {
      term = complex ? "(" + cs + ")" : cs;
    } else if (c.is_one()) {
      term = monomial_str(m);
    } else if (c == Scalar(-1)) {
      term = "-" + monomial_str(m);
    } else {
      term = (complex ? "(" + cs + ")" : cs) + "*" + monomial_str(m);
    }
    if (s.empty())
      s = term;
    else if (term.front() == '-')
      s += " - " + term.substr(1);
    else
      s += " + " + term;
  }
  return s;
}

GradedPoly mul(const GradedPoly& p, const GradedPoly& q) {
  GradedPoly r;
  std::vector<Term> buf;
  for (const auto& [ma, ca] : p.terms()) {
    for (const auto& [mb, cb] : q.terms()) {
      buf.clear();
      multiply_monomials(ma, mb, ca * cb, buf);
      for (const auto& t : buf) r.add_term(t.mono, t.coef);
    }
  }
  return r;
}

bool is_zero(const GradedPoly& p) { return p.is_zero(); }

std::ostream& operator<<(std::ostream& os, const GradedPoly& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// constructors

GradedPoly jet(Field f, int dplus, int dminus, bool odd_plus, bool odd_minus) {
  if (!f.valid()) throw std::invalid_argument("jet: invalid field");
  if (dplus < 0 || dminus < 0 || dplus > 250 || dminus > 250) throw std::invalid_argument("jet: bad derivative count");
  if (f.is_component() && (odd_plus || odd_minus))
    throw std::invalid_argument("jet: component field '" + f.name() + "' has no odd jets");
  if (f.chirality() == Chirality::PlusOnly && (dminus > 0 || odd_minus)) return GradedPoly();
  if (f.chirality() == Chirality::MinusOnly && (dplus > 0 || odd_plus)) return GradedPoly();
  return GradedPoly::from_generator(make_jet_gen(f, dplus, dminus, odd_plus, odd_minus));
}

GradedPoly theta(OddCoord c) {
  Generator g;
  g.kind = GenKind::OddCoord;
  g.coord = c;
  g.grade = coord_grade(c);
  return GradedPoly::from_generator(g);
}

GradedPoly param(std::string_view name, int exp) {
  if (exp == 0) return GradedPoly(1);
  Generator g;
  g.kind = GenKind::Param;
  g.param = intern_param(name);
  g.grade = kG00;
  return GradedPoly::from_monomial(Monomial{Factor{g, exp}});
}

GradedPoly exp_of(const LinearArg& arg) {
  if (arg.empty()) return GradedPoly(1);
  if (arg.grade() != kG00) throw std::invalid_argument("exp_of: argument must be [00]-graded: " + arg.str());
  return GradedPoly::from_generator(make_func_gen(GenKind::Exp, arg));
}

GradedPoly cosh_of(const LinearArg& arg) {
  if (!arg.empty() && arg.grade() != kG11)
    throw std::invalid_argument("cosh_of: argument must be [11]-graded: " + arg.str());
  auto [s, g] = normalized_hyp(GenKind::Cosh, arg);
  return g ? GradedPoly::from_generator(*g) * s : GradedPoly(s);
}

GradedPoly sinh_of(const LinearArg& arg) {
  if (!arg.empty() && arg.grade() != kG11)
    throw std::invalid_argument("sinh_of: argument must be [11]-graded: " + arg.str());
  auto [s, g] = normalized_hyp(GenKind::Sinh, arg);
  return g ? GradedPoly::from_generator(*g) * s : GradedPoly(s);
}

GradedPoly cosh_even(const LinearArg& arg) {
  return (exp_of(arg) + exp_of(-arg)) * Scalar::rational(1, 2);
}

GradedPoly sinh_even(const LinearArg& arg) {
  return (exp_of(arg) - exp_of(-arg)) * Scalar::rational(1, 2);
}

GradedPoly inv_of(const NamedPoly* p, int exp) {
  if (!p) throw std::invalid_argument("inv_of: null");
  if (exp < 0) throw std::invalid_argument("inv_of: negative exponent");
  if (exp == 0) return GradedPoly(1);
  Generator g;
  g.kind = GenKind::Inv;
  g.inv = p;
  g.grade = kG00;
  return GradedPoly::from_monomial(Monomial{Factor{g, exp}});
}

// ---------------------------------------------------------------------------
// derivations

namespace {

GradedPoly d_generator(Deriv d, const Generator& g);

GradedPoly d_linear(Deriv d, const LinearArg& arg) {
  GradedPoly r;
  for (const auto& [f, c] : arg.terms()) r += d_generator(d, make_jet_gen(f, 0, 0, false, false)) * Scalar(c);
  return r;
}

GradedPoly d_jet(Deriv d, const Generator& g) {
  const Field f = g.field;
  bool plus = deriv_is_plus(d);
  if (f.chirality() == Chirality::PlusOnly && !plus) return GradedPoly();
  if (f.chirality() == Chirality::MinusOnly && plus) return GradedPoly();
  int a = g.dplus_count, b = g.dminus_count;
  if (!deriv_is_odd(d)) {
    return plus ? jet(f, a + 1, b, g.odd_plus, g.odd_minus) : jet(f, a, b + 1, g.odd_plus, g.odd_minus);
  }
  if (f.is_component()) {
    GradedPoly dx = plus ? jet(f, a + 1, b) : jet(f, a, b + 1);
    return theta(coord_of(d)) * dx * Scalar::i();
  }
  if (space_of(d) != f.space())
    throw std::invalid_argument("apply_D: " + deriv_name(d) + " does not act on superfield '" + f.name() + "'");
  if (plus) {
    if (!g.odd_plus) return jet(f, a, b, true, g.odd_minus);
    return jet(f, a + 1, b, false, g.odd_minus) * Scalar::i();
  }
  Scalar coef = 1;
  if (g.odd_plus) coef = Scalar(grade_sign(odd_plus_grade(f.space()), odd_minus_grade(f.space())));
  if (!g.odd_minus) return jet(f, a, b, g.odd_plus, true) * coef;
  return jet(f, a, b + 1, g.odd_plus, false) * (coef * Scalar::i());
}

GradedPoly d_generator(Deriv d, const Generator& g) {
  switch (g.kind) {
    case GenKind::Jet: return d_jet(d, g);
    case GenKind::OddCoord:
      return (deriv_is_odd(d) && coord_of(d) == g.coord) ? GradedPoly(1) : GradedPoly();
    case GenKind::Param: return GradedPoly();
    case GenKind::Inv: {
      GradedPoly dp = apply_D(d, g.inv->value);
      if (dp.is_zero()) return dp;
      return -(dp * GradedPoly::from_monomial(Monomial{Factor{g, 2}}));
    }
    case GenKind::Exp: return d_linear(d, *g.arg) * GradedPoly::from_generator(g);
    case GenKind::Cosh: return d_linear(d, *g.arg) * GradedPoly::from_generator(make_func_gen(GenKind::Sinh, *g.arg));
    case GenKind::Sinh: return d_linear(d, *g.arg) * GradedPoly::from_generator(make_func_gen(GenKind::Cosh, *g.arg));
  }
  return GradedPoly();
}

/// D(g^k): nilpotent generators have k = 1; otherwise k (Dg) g^{k-1}.
GradedPoly d_factor(Deriv d, const Factor& f) {
  GradedPoly dg = d_generator(d, f.gen);
  if (dg.is_zero() || f.exp == 1) return dg;
  if (f.exp < 0) {
    // parameters only; they are constants
    return GradedPoly();
  }
  return dg * GradedPoly::from_monomial(Monomial{Factor{f.gen, f.exp - 1}}) * Scalar(f.exp);
}

}  // namespace

GradedPoly apply_D(Deriv d, const GradedPoly& p) {
  GradedPoly result;
  const GradeVec dgrade = deriv_grade(d);
  for (const auto& [m, c] : p.terms()) {
    GradeVec prefix_grade;
    for (std::size_t i = 0; i < m.size(); ++i) {
      GradedPoly df = d_factor(d, m[i]);
      if (!df.is_zero()) {
        Monomial pre(m.begin(), m.begin() + static_cast<long>(i));
        Monomial post(m.begin() + static_cast<long>(i) + 1, m.end());
        GradedPoly term = GradedPoly::from_monomial(pre, c * Scalar(grade_sign(dgrade, prefix_grade))) * df;
        if (!post.empty()) term = term * GradedPoly::from_monomial(post);
        result += term;
      }
      prefix_grade += scaled_grade(m[i].gen.grade, m[i].exp);
    }
  }
  return result;
}

GradedPoly apply_D(std::string_view name, const GradedPoly& p) { return apply_D(parse_deriv(name), p); }

GradedPoly apply_chain(std::initializer_list<Deriv> ds, const GradedPoly& p) {
  GradedPoly r = p;
  for (Deriv d : ds) r = apply_D(d, r);
  return r;
}

// ---------------------------------------------------------------------------
// structural utilities

GradedPoly map_generators(const GradedPoly& p,
                          const std::function<std::optional<GradedPoly>(const Generator&)>& f) {
  GradedPoly result;
  for (const auto& [m, c] : p.terms()) {
    bool changed = false;
    std::vector<std::optional<GradedPoly>> repl(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      repl[i] = f(m[i].gen);
      changed = changed || repl[i].has_value();
    }
    if (!changed) {
      result.add_term(m, c);
      continue;
    }
    GradedPoly acc(c);
    Monomial run;  // consecutive unchanged factors, already ordered
    for (std::size_t i = 0; i < m.size() && !acc.is_zero(); ++i) {
      if (!repl[i]) {
        run.push_back(m[i]);
        continue;
      }
      if (!run.empty()) {
        acc = acc * GradedPoly::from_monomial(run);
        run.clear();
      }
      if (m[i].exp < 0) throw std::logic_error("map_generators: cannot replace a negative power");
      acc = acc * repl[i]->pow(m[i].exp);
    }
    if (!run.empty() && !acc.is_zero()) acc = acc * GradedPoly::from_monomial(run);
    result += acc;
  }
  return result;
}

namespace {

constexpr int kMaxSeries = 64;

/// Returns (even part, odd part) of exp(n) = sum n^k / k!; n nilpotent.
std::pair<GradedPoly, GradedPoly> exp_series(const GradedPoly& n) {
  GradedPoly even(1), odd;
  GradedPoly power(1);
  mpz_class fact = 1;
  for (int k = 1; k <= kMaxSeries; ++k) {
    power = power * n;
    if (power.is_zero()) return {even, odd};
    fact *= k;
    GradedPoly term = power * Scalar(mpq_class(1, fact));
    if (k % 2 == 0)
      even += term;
    else
      odd += term;
  }
  throw std::runtime_error("substitute: replacement is not nilpotent");
}

GradedPoly linear_poly(const LinearArg& a) {
  GradedPoly r;
  for (const auto& [f, c] : a.terms()) r += jet(f) * Scalar(c);
  return r;
}

}  // namespace

GradedPoly substitute(const GradedPoly& p, Field field, const Replacement& r) {
  const GradedPoly full = linear_poly(r.body) + r.nil;
  auto fn = [&](const Generator& g) -> std::optional<GradedPoly> {
    switch (g.kind) {
      case GenKind::Jet: {
        if (g.field != field) return std::nullopt;
        bool alt = field.space() == Superspace::Alternative;
        GradedPoly v = full;
        if (g.odd_minus) v = apply_D(alt ? Deriv::D01 : Deriv::DMinus, v);
        if (g.odd_plus) v = apply_D(alt ? Deriv::D10 : Deriv::DPlus, v);
        for (int k = 0; k < g.dminus_count; ++k) v = apply_D(Deriv::PartialMinus, v);
        for (int k = 0; k < g.dplus_count; ++k) v = apply_D(Deriv::PartialPlus, v);
        return v;
      }
      case GenKind::Exp:
      case GenKind::Cosh:
      case GenKind::Sinh: {
        mpq_class mu = g.arg->coefficient(field);
        if (sgn(mu) == 0) return std::nullopt;
        LinearArg rest = *g.arg - LinearArg::of(field, mu) + r.body.scaled(mu);
        GradedPoly n = r.nil * Scalar(mu);
        auto [ev, od] = exp_series(n);
        if (g.kind == GenKind::Exp) return exp_of(rest) * (ev + od);
        if (g.kind == GenKind::Cosh) return cosh_of(rest) * ev + sinh_of(rest) * od;
        return sinh_of(rest) * ev + cosh_of(rest) * od;
      }
      case GenKind::Inv: {
        // registered inverses are not rewritten
        return std::nullopt;
      }
      default: return std::nullopt;
    }
  };
  return map_generators(p, fn);
}

GradedPoly set_zero(const GradedPoly& p, std::initializer_list<Field> fields) {
  GradedPoly r = p;
  for (Field f : fields) r = substitute(r, f, Replacement{});
  return r;
}

std::map<std::vector<OddCoord>, GradedPoly> theta_sectors(const GradedPoly& p) {
  std::map<std::vector<OddCoord>, GradedPoly> out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<OddCoord> key;
    std::size_t k = 0;
    while (k < m.size() && m[k].gen.kind == GenKind::OddCoord) key.push_back(m[k++].gen.coord);
    Monomial rest(m.begin() + static_cast<long>(k), m.end());
    out[key].add_term(rest, c);
  }
  return out;
}

std::map<int, GradedPoly> param_powers(const GradedPoly& p, std::string_view name) {
  std::map<int, GradedPoly> out;
  for (const auto& [m, c] : p.terms()) {
    int e = 0;
    Monomial rest;
    for (const auto& f : m) {
      if (f.gen.kind == GenKind::Param && f.gen.param->name == name)
        e = f.exp;
      else
        rest.push_back(f);
    }
    out[e].add_term(rest, c);
  }
  return out;
}

std::pair<GradedPoly, int> clear_denominator(const GradedPoly& p, const NamedPoly* np) {
  int kmax = 0;
  for (const auto& [m, c] : p.terms())
    for (const auto& f : m)
      if (f.gen.kind == GenKind::Inv && f.gen.inv == np) kmax = std::max(kmax, f.exp);
  std::vector<GradedPoly> powers{GradedPoly(1)};
  for (int k = 1; k <= kmax; ++k) powers.push_back(powers.back() * np->value);
  GradedPoly result;
  for (const auto& [m, c] : p.terms()) {
    int e = 0;
    Monomial rest;
    for (const auto& f : m) {
      if (f.gen.kind == GenKind::Inv && f.gen.inv == np)
        e = f.exp;
      else
        rest.push_back(f);
    }
    result += GradedPoly::from_monomial(rest, c) * powers[static_cast<std::size_t>(kmax - e)];
  }
  return {result, kmax};
}

std::optional<Scalar> proportionality(const GradedPoly& a, const GradedPoly& b) {
  if (a.is_zero()) return Scalar(0);
  if (b.is_zero()) return std::nullopt;
  const auto& [m, cb] = *b.terms().begin();
  auto it = a.terms().find(m);
  if (it == a.terms().end()) return std::nullopt;
  Scalar c = it->second / cb;
  if ((a - b * c).is_zero()) return c;
  return std::nullopt;
}

std::complex<double> evaluate(const GradedPoly& p, const std::map<std::string, double>& values) {
  auto lookup = [&](const std::string& n) {
    auto it = values.find(n);
    if (it == values.end()) throw std::invalid_argument("evaluate: no value for '" + n + "'");
    return it->second;
  };
  auto lin = [&](const LinearArg& a) {
    double s = 0;
    for (const auto& [f, c] : a.terms()) s += c.get_d() * lookup(f.name());
    return s;
  };
  std::complex<double> total = 0;
  for (const auto& [m, c] : p.terms()) {
    std::complex<double> t(c.real_double(), c.imag_double());
    for (const auto& f : m) {
      const Generator& g = f.gen;
      double v = 0;
      switch (g.kind) {
        case GenKind::Jet:
          if (g.dplus_count || g.dminus_count || g.odd_plus || g.odd_minus)
            throw std::invalid_argument("evaluate: derivative jets are not numeric");
          v = lookup(g.field.name());
          break;
        case GenKind::Param: v = lookup(g.param->name); break;
        case GenKind::Exp: v = std::exp(lin(*g.arg)); break;
        case GenKind::Cosh: v = std::cosh(lin(*g.arg)); break;
        case GenKind::Sinh: v = std::sinh(lin(*g.arg)); break;
        case GenKind::Inv: t /= std::pow(evaluate(g.inv->value, values), f.exp); continue;
        case GenKind::OddCoord: throw std::invalid_argument("evaluate: odd coordinate");
      }
      t *= std::pow(v, f.exp);
    }
    total += t;
  }
  return total;
}

}  // namespace z2sl
