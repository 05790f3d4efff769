#include "z2sl/lax.hpp"

#include "z2sl/linear.hpp"
#include "z2sl/reduce.hpp"
#include "z2sl/soldering.hpp"

#include <cctype>
#include <stdexcept>

namespace z2sl {

namespace {

const AlgebraBasis* g() { return &z2_osp(); }

AlgebraElement el(std::string_view name, const GradedPoly& c = GradedPoly(1)) { return AlgebraElement(g(), name, c); }

GradedPoly ex(Field f, mpq_class c) { return exp_of(LinearArg::of(f, std::move(c))); }
GradedPoly ch(Field f, mpq_class c) { return cosh_of(LinearArg::of(f, std::move(c))); }
GradedPoly sh(Field f, mpq_class c) { return sinh_of(LinearArg::of(f, std::move(c))); }

CheckResult check_poly(std::string id, std::string anchor, const GradedPoly& r, std::string note = "") {
  return {std::move(id), std::move(anchor), r.is_zero(), r.is_zero() ? "" : r.str(), std::move(note)};
}

CheckResult check_element(std::string id, std::string anchor, const AlgebraElement& r, std::string note = "") {
  return {std::move(id), std::move(anchor), r.is_zero(), r.is_zero() ? "" : r.str(), std::move(note)};
}

AlgebraElement reduce_element(const AlgebraElement& x, const RewriteSystem& rs) {
  return x.map([&](const GradedPoly& p) { return rs.reduce(p); });
}

RewriteSystem superspace_eom() {
  const auto& f = LaxFields::get();
  GradedPoly e = ex(f.Phi00, 1);
  RewriteSystem rs;
  rs.second_order(f.Phi00, e * ch(f.Phi11, 1));
  rs.second_order(f.Phi11, e * sh(f.Phi11, 1));
  return rs;
}

RewriteSystem alternative_eom() {
  const auto& f = LaxFields::get();
  GradedPoly e = GradedPoly(Scalar::i()) * ex(f.tPhi00, 1);
  RewriteSystem rs;
  rs.second_order(f.tPhi00, e * sh(f.tPhi11, 1));
  rs.second_order(f.tPhi11, e * ch(f.tPhi11, 1));
  return rs;
}

GradedPoly a00(Field p00, Field p11) { return ex(p00, mpq_class(1, 2)) * ch(p11, mpq_class(1, 2)); }
GradedPoly a11(Field p00, Field p11) { return ex(p00, mpq_class(1, 2)) * sh(p11, mpq_class(1, 2)); }

AlgebraElement cartan(Field p00, Field p11) {
  GradedPoly h(Scalar::rational(1, 2));
  return el("K0", h * var(p00)) + el("L0", h * var(p11));
}

}  // namespace

std::string variant_name(LaxVariant v) {
  switch (v) {
    case LaxVariant::Superspace: return "superspace";
    case LaxVariant::Alternative: return "alternative";
    case LaxVariant::Spectral: return "spectral";
  }
  return "?";
}

LaxVariant parse_variant(std::string_view s) {
  std::string l;
  for (char c : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (l == "superspace") return LaxVariant::Superspace;
  if (l == "alternative") return LaxVariant::Alternative;
  if (l == "spectral") return LaxVariant::Spectral;
  throw std::invalid_argument("unknown Lax variant: " + std::string(s));
}

const LaxFields& LaxFields::get() {
  static const LaxFields f{declare_superfield("Phi00", kG00), declare_superfield("Phi11", kG11),
                           declare_superfield("tPhi00", kG00, Chirality::Both, Superspace::Alternative),
                           declare_superfield("tPhi11", kG11, Chirality::Both, Superspace::Alternative)};
  return f;
}

GradedPoly lambda_pow(int n) { return n == 0 ? GradedPoly(1) : param(kLambda, n); }

AdjointExp adjoint_exp(Field phi00, Field phi11, int s, std::string_view x) {
  AdjointExp out{AlgebraElement(g())};
  AlgebraElement X = el(x);
  const GradedPoly h(Scalar::rational(1, 2));
  AlgebraElement A = bracket(el("K0", h * var(phi00)), X);
  AlgebraElement Z = bracket(el("L0"), X);
  AlgebraElement B = bracket(el("L0", h * var(phi11)), X);
  // weight of X under K0
  mpq_class w = 0;
  for (int sign : {1, -1})
    if (A == el(x, GradedPoly(Scalar(mpq_class(sign, 2))) * var(phi00))) w = sign;
  out.cartan_scalar = w != 0 && bracket(el("K0"), Z) == GradedPoly(Scalar(w)) * Z;
  AlgebraElement B2 = bracket(el("L0", h * var(phi11)), B);
  out.two_step = B2 == el(x, GradedPoly(Scalar::rational(1, 4)) * var(phi11) * var(phi11));
  if (!out.cartan_scalar || !out.two_step) throw std::logic_error("adjoint_exp: series does not close");
  mpq_class half(s, 2);
  GradedPoly e = ex(phi00, w * half);
  out.value = el(x, e * ch(phi11, half)) + (e * sh(phi11, half)) * Z;
  return out;
}

LaxPair build_lax(LaxVariant v, const std::optional<LambdaChoice>& lambda) {
  const auto& f = LaxFields::get();
  LaxPair lp{v, AlgebraElement(g()), AlgebraElement(g())};
  const GradedPoly I(Scalar::i());
  switch (v) {
    case LaxVariant::Superspace: {
      AlgebraElement phi = cartan(f.Phi00, f.Phi11);
      GradedPoly A0 = a00(f.Phi00, f.Phi11), A1 = a11(f.Phi00, f.Phi11);
      lp.first = -apply_D(Deriv::DPlus, phi) + el("P+", A0) + el("Q+", I * A1);
      lp.second = apply_D(Deriv::DMinus, phi) + el("P-", A0) + el("Q-", I * A1);
      break;
    }
    case LaxVariant::Alternative: {
      AlgebraElement phi = cartan(f.tPhi00, f.tPhi11);
      GradedPoly A0 = a00(f.tPhi00, f.tPhi11), A1 = a11(f.tPhi00, f.tPhi11);
      lp.first = -apply_D(Deriv::D10, phi) + el("P+", A0) + el("Q+", I * A1);
      lp.second = apply_D(Deriv::D01, phi) + el("Q-", A0) - el("P-", I * A1);
      break;
    }
    case LaxVariant::Spectral: {
      if (!lambda) throw std::invalid_argument("spectral Lax pair needs Lambda10, Lambda01");
      const auto& c = ComponentFields::get();
      GradedPoly l2 = lambda_pow(2), l1 = lambda_pow(1), m2 = lambda_pow(-2), m1 = lambda_pow(-1);
      lp.first = el("K0", -jet(c.phi00, 1, 0)) + el("L0", -jet(c.phi11, 1, 0)) + el("K+", -I * l2) +
                 el("K-", -I * l2) + el("P+", var(c.psib10) * l1) + el("Q+", I * var(c.psib01) * l1);
      GradedPoly e = ex(c.phi00, 1), e2 = ex(c.phi00, 2);
      lp.second = el("K-", I * e2 * ch(c.phi11, 2) * m2) + el("L-", I * e2 * sh(c.phi11, 2) * m2) +
                  el("P-", e * lambda->l10 * m1) + el("Q-", I * e * lambda->l01 * m1);
      break;
    }
  }
  return lp;
}

AlgebraElement zero_curvature_residual(const LaxPair& lp) {
  switch (lp.variant) {
    case LaxVariant::Superspace:
      return apply_D(Deriv::DPlus, lp.second) + apply_D(Deriv::DMinus, lp.first) - bracket(lp.first, lp.second);
    case LaxVariant::Alternative:
      return apply_D(Deriv::D10, lp.second) - apply_D(Deriv::D01, lp.first) - bracket(lp.first, lp.second);
    case LaxVariant::Spectral:
      return apply_D(Deriv::PartialMinus, lp.first) - apply_D(Deriv::PartialPlus, lp.second) +
             bracket(lp.first, lp.second);
  }
  return AlgebraElement(g());
}

std::map<int, AlgebraElement> by_lambda_power(const AlgebraElement& x) {
  std::map<int, AlgebraElement> out;
  for (const auto& [k, c] : x.coefficients())
    for (const auto& [n, part] : param_powers(c, kLambda)) {
      auto it = out.try_emplace(n, &x.basis()).first;
      it->second += AlgebraElement(&x.basis(), x.basis()[k].name, part);
    }
  return out;
}

std::vector<CheckResult> verify_a_identities() {
  const auto& f = LaxFields::get();
  std::vector<CheckResult> out;
  GradedPoly A0 = a00(f.Phi00, f.Phi11), A1 = a11(f.Phi00, f.Phi11);
  GradedPoly h(Scalar::rational(1, 2));
  for (Deriv d : {Deriv::DPlus, Deriv::DMinus}) {
    std::string s = d == Deriv::DPlus ? "plus" : "minus";
    GradedPoly d00 = apply_D(d, var(f.Phi00)), d11 = apply_D(d, var(f.Phi11));
    out.push_back(check_poly("a_identity.A00." + s, "A-equations", apply_D(d, A0) - h * (d00 * A0 + d11 * A1)));
    out.push_back(check_poly("a_identity.A11." + s, "A-equations", apply_D(d, A1) - h * (d00 * A1 + d11 * A0)));
    GradedPoly e = ex(f.Phi00, mpq_class(1, 2));
    out.push_back(check_poly("a_identity.bosonic." + s, "A-equations", apply_D(d, e) - h * d00 * e));
  }
  out.push_back(check_poly("a_identity.hyperbolic", "DefA", A0 * A0 - A1 * A1 - ex(f.Phi00, 1)));
  return out;
}

namespace {

std::vector<CheckResult> verify_superspace() {
  const auto& f = LaxFields::get();
  std::vector<CheckResult> out;
  for (auto [x, s] : {std::pair{"P+", 1}, std::pair{"P-", -1}}) {
    AdjointExp a = adjoint_exp(f.Phi00, f.Phi11, s, x);
    std::string q = x[1] == '+' ? "Q+" : "Q-";
    AlgebraElement want = el(x, a00(f.Phi00, f.Phi11)) + el(q, GradedPoly(Scalar::i()) * a11(f.Phi00, f.Phi11));
    out.push_back(check_element(std::string("superspace.adjoint.") + x, "LaxOps", a.value - want));
  }
  LaxPair lp = build_lax(LaxVariant::Superspace);
  out.push_back({"superspace.grading", "LaxOps",
                 lp.first.is_homogeneous() && lp.second.is_homogeneous() && lp.first.grade() == kG10 &&
                     lp.second.grade() == kG10,
                 "", ""});
  AlgebraElement R = zero_curvature_residual(lp);
  out.push_back(check_element("superspace.on_shell", "ZeroCurv", reduce_element(R, superspace_eom())));
  // off-shell: K0 and L0 carry the equations of motion, nothing else survives
  GradedPoly e = ex(f.Phi00, 1);
  GradedPoly eom00 = jet(f.Phi00, 0, 0, true, true) - e * ch(f.Phi11, 1);
  GradedPoly eom11 = jet(f.Phi11, 0, 0, true, true) - e * sh(f.Phi11, 1);
  for (auto [name, eom] : {std::pair{"K0", &eom00}, std::pair{"L0", &eom11}}) {
    auto k = proportionality(R.coefficient(name), *eom);
    out.push_back({std::string("superspace.off_shell.") + name, "Z22SLeq", k && !k->is_zero(),
                   k ? "" : R.coefficient(name).str(), k ? "factor " + k->str() : ""});
  }
  AlgebraElement rest = R - el("K0", R.coefficient("K0")) - el("L0", R.coefficient("L0"));
  out.push_back(check_element("superspace.off_shell.other_components", "A-equations", rest));
  AlgebraElement vac = R.map([&](const GradedPoly& p) { return set_zero(p, {f.Phi00, f.Phi11}); });
  out.push_back(check_element("superspace.vacuum", "ZeroCurv", vac + el("K0")));
  return out;
}

std::vector<CheckResult> verify_alternative() {
  const auto& f = LaxFields::get();
  std::vector<CheckResult> out;
  {
    AdjointExp a = adjoint_exp(f.tPhi00, f.tPhi11, 1, "P+");
    AlgebraElement want = el("P+", a00(f.tPhi00, f.tPhi11)) + el("Q+", GradedPoly(Scalar::i()) * a11(f.tPhi00, f.tPhi11));
    out.push_back(check_element("alternative.adjoint.P+", "LaxOps", a.value - want));
    // the second operator needs e^{-Phi} Q- e^{Phi}; P+ there would give a [10] operator
    AdjointExp b = adjoint_exp(f.tPhi00, f.tPhi11, -1, "Q-");
    AlgebraElement wantb = el("Q-", a00(f.tPhi00, f.tPhi11)) - el("P-", GradedPoly(Scalar::i()) * a11(f.tPhi00, f.tPhi11));
    out.push_back(check_element("alternative.adjoint.Q-", "LaxOps", b.value - wantb,
                                "printed e^{-Phi} P+ e^{Phi} replaced by Q-"));
  }
  LaxPair lp = build_lax(LaxVariant::Alternative);
  out.push_back({"alternative.grading", "LaxOps",
                 lp.first.is_homogeneous() && lp.second.is_homogeneous() && lp.first.grade() == kG10 &&
                     lp.second.grade() == kG01,
                 "", ""});
  // the printed second form D10 Phi gives an inhomogeneous operator
  AlgebraElement alt = apply_D(Deriv::D10, cartan(f.tPhi00, f.tPhi11)) + el("Q-", a00(f.tPhi00, f.tPhi11));
  out.push_back({"alternative.uses_D01", "LaxOps", !alt.is_homogeneous(), "",
                 "printed '= D10 Phi + ...' is not [01]-graded; D01 used"});
  AlgebraElement R = zero_curvature_residual(lp);
  out.push_back(check_element("alternative.on_shell", "SLalternative", reduce_element(R, alternative_eom())));
  GradedPoly e = GradedPoly(Scalar::i()) * ex(f.tPhi00, 1);
  GradedPoly eom00 = jet(f.tPhi00, 0, 0, true, true) - e * sh(f.tPhi11, 1);
  GradedPoly eom11 = jet(f.tPhi11, 0, 0, true, true) - e * ch(f.tPhi11, 1);
  bool found00 = false, found11 = false;
  AlgebraElement rest(g());
  for (const auto& [k, c] : R.coefficients()) {
    auto p00 = proportionality(c, eom00), p11 = proportionality(c, eom11);
    if (p00 && !p00->is_zero()) found00 = true;
    else if (p11 && !p11->is_zero()) found11 = true;
    else rest += el(g()->operator[](k).name, c);
  }
  out.push_back({"alternative.off_shell.eom00", "SLalternative", found00, "", ""});
  out.push_back({"alternative.off_shell.eom11", "SLalternative", found11, "", ""});
  out.push_back(check_element("alternative.off_shell.other_components", "SLalternative", rest,
                              "no counterpart of the A-equations"));
  // component expansion
  const auto& c = ComponentFields::get();
  GradedPoly t10 = theta(OddCoord::Theta10), t01 = theta(OddCoord::Theta01), I(Scalar::i());
  auto expand = [&](const GradedPoly& eq) {
    GradedPoly x = substitute(eq, f.tPhi00,
                              {LinearArg::of(c.phi00), t10 * var(c.psi10) + I * t01 * var(c.psib01) - I * t10 * t01 * var(c.F11)});
    x = substitute(x, f.tPhi11,
                   {LinearArg::of(c.phi11), t10 * var(c.psi01) + I * t01 * var(c.psib10) - I * t10 * t01 * var(c.F00)});
    return theta_sectors(x);
  };
  PrintedComponents pc = printed_components();
  const std::vector<std::pair<std::string, const GradedPoly*>> printed{
      {"box00", &pc.box00}, {"dbar_psi10", &pc.dpsi10}, {"d_psibar10", &pc.dpsib10}, {"aux00", &pc.aux00},
      {"box11", &pc.box11}, {"dbar_psi01", &pc.dpsi01}, {"d_psibar01", &pc.dpsib01}, {"aux11", &pc.aux11}};
  std::map<std::string, std::string> matched;
  std::size_t sectors = 0;
  bool every_sector = true;
  for (const auto* eq : {&eom00, &eom11})
    for (const auto& [sec, poly] : expand(*eq)) {
      ++sectors;
      bool hit = false;
      for (const auto& [name, pr] : printed)
        if (auto k = proportionality(poly, *pr); k && !k->is_zero()) {
          matched[name] = k->str();
          hit = true;
        }
      if (!hit) every_sector = false;
    }
  out.push_back({"alternative.components.sectors", "CompEq", every_sector && sectors == 8, "",
                 std::to_string(sectors) + " theta sectors"});
  for (const auto& [name, pr] : printed)
    out.push_back({"alternative.components." + name, "CompEq", matched.count(name) > 0, "",
                   matched.count(name) ? "factor " + matched[name] : "not reproduced"});
  return out;
}

}  // namespace

std::vector<CheckResult> verify_lax(LaxVariant v) {
  switch (v) {
    case LaxVariant::Superspace: {
      auto out = verify_superspace();
      auto a = verify_a_identities();
      out.insert(out.end(), a.begin(), a.end());
      return out;
    }
    case LaxVariant::Alternative: return verify_alternative();
    case LaxVariant::Spectral: return verify_spectral_matrices();
  }
  return {};
}

// ---- spectral ----------------------------------------------------------------

namespace {

struct Candidate {
  std::string name;
  Field field;
};

std::vector<Candidate> fermions() {
  const auto& c = ComponentFields::get();
  return {{"psi10", c.psi10}, {"psibar10", c.psib10}, {"psi01", c.psi01}, {"psibar01", c.psib01}};
}

const std::vector<std::pair<std::string, Scalar>>& phases() {
  static const std::vector<std::pair<std::string, Scalar>> p{
      {"", Scalar(1)}, {"-", Scalar(-1)}, {"i*", Scalar::i()}, {"-i*", -Scalar::i()}};
  return p;
}

GradedPoly swap_light_cone(const GradedPoly& p) {
  return map_generators(p, [](const Generator& g) -> std::optional<GradedPoly> {
    if (g.kind != GenKind::Jet || !g.field.is_component()) return std::nullopt;
    if (g.dplus_count == g.dminus_count) return std::nullopt;
    return jet(g.field, g.dminus_count, g.dplus_count);
  });
}

LambdaChoice ansatz_lambda(std::vector<std::string>& unknowns) {
  const auto& c = ComponentFields::get();
  GradedPoly chp = ch(c.phi11, 1), shp = sh(c.phi11, 1);
  const std::vector<GradedPoly> b10{var(c.psi10), var(c.psib10), chp * var(c.psi10), chp * var(c.psib10),
                                    shp * var(c.psi01), shp * var(c.psib01)};
  const std::vector<GradedPoly> b01{var(c.psi01), var(c.psib01), chp * var(c.psi01), chp * var(c.psib01),
                                    shp * var(c.psi10), shp * var(c.psib10)};
  LambdaChoice out{GradedPoly(), GradedPoly(), "ansatz"};
  for (std::size_t k = 0; k < b10.size(); ++k) {
    unknowns.push_back("lam10_" + std::to_string(k));
    out.l10 += param(unknowns.back()) * b10[k];
    unknowns.push_back("lam01_" + std::to_string(k));
    out.l01 += param(unknowns.back()) * b01[k];
  }
  return out;
}

GradedPoly fix_params(const GradedPoly& p, const std::map<std::string, Scalar>& v) {
  return map_generators(p, [&](const Generator& g) -> std::optional<GradedPoly> {
    if (g.kind != GenKind::Param) return std::nullopt;
    auto it = v.find(g.param->name);
    if (it == v.end()) return std::nullopt;
    return GradedPoly(it->second);
  });
}

GradedMatrix matrix(std::size_t n, const std::vector<std::tuple<int, int, GradedPoly>>& entries) {
  GradedMatrix m(n, n);
  for (const auto& [i, j, v] : entries) m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = v;
  return m;
}

}  // namespace

SpectralSearch search_lambda() {
  SpectralSearch out;
  for (Orientation o : {Orientation::XPlus, Orientation::XMinus}) {
    for (const auto& a : fermions())
      for (const auto& [pa, sa] : phases())
        for (const auto& b : fermions())
          for (const auto& [pb, sb] : phases()) {
            std::string label = "Lambda10=" + pa + a.name + ", Lambda01=" + pb + b.name + " (" + orientation_name(o) + ")";
            out.candidates.push_back(label);
            if (a.field.grade() != kG10 || b.field.grade() != kG01) continue;
            LambdaChoice c{GradedPoly(sa) * var(a.field), GradedPoly(sb) * var(b.field), label};
            if (spectral_on_shell_residual(c, o).is_zero()) out.survivors.push_back(label);
          }
    std::vector<std::string> unknowns;
    LambdaChoice sym = ansatz_lambda(unknowns);
    std::vector<GradedPoly> ids;
    AlgebraElement r = spectral_on_shell_residual(sym, o);
    for (const auto& [k, p] : r.coefficients()) ids.push_back(p);
    ParamSolution sol = solve_affine(ids, unknowns);
    LambdaAnsatz la{o, sol.consistent, sol.unique, std::nullopt};
    if (sol.unique) {
      LambdaChoice c{fix_params(sym.l10, sol.values), fix_params(sym.l01, sol.values), ""};
      c.label = "Lambda10=" + c.l10.str() + ", Lambda01=" + c.l01.str() + " (" + orientation_name(o) + ")";
      la.solution = c;
    }
    out.ansatz.push_back(la);
  }
  return out;
}

std::pair<GradedMatrix, GradedMatrix> printed_spectral_matrices(const LambdaChoice& lc) {
  const auto& c = ComponentFields::get();
  const GradedPoly I(Scalar::i());
  GradedPoly l = lambda_pow(1), l2 = lambda_pow(2), m1 = lambda_pow(-1), m2 = lambda_pow(-2);
  GradedPoly d00 = jet(c.phi00, 1, 0), d11 = jet(c.phi11, 1, 0);
  GradedPoly b10 = var(c.psib10), b01 = var(c.psib01);
  GradedMatrix plus = matrix(6, {{0, 0, -d00},        {0, 1, -I * l2},     {0, 2, -d11},        {0, 4, l * b10},
                                 {0, 5, I * l * b01}, {1, 0, -I * l2},     {1, 1, d00},         {1, 3, d11},
                                 {2, 0, -d11},        {2, 2, -d00},        {2, 3, -I * l2},     {2, 4, -(l * b01)},
                                 {2, 5, -I * l * b10}, {3, 1, d11},        {3, 2, -I * l2},     {3, 3, d00},
                                 {4, 1, -(l * b10)},  {4, 3, -(l * b01)},  {5, 1, -I * l * b01}, {5, 3, -I * l * b10}});
  GradedPoly e = ex(c.phi00, 1), e2 = ex(c.phi00, 2);
  GradedPoly f00 = e2 * ch(c.phi11, 2), f11 = e2 * sh(c.phi11, 2);
  GradedPoly L10 = e * lc.l10, L01 = e * lc.l01;
  GradedMatrix minus =
      matrix(6, {{1, 0, I * m2 * f00},  {1, 2, I * m2 * f11},  {1, 4, -(m1 * L10)},  {1, 5, -I * m1 * L01},
                 {3, 0, I * m2 * f11},  {3, 2, I * m2 * f00},  {3, 4, m1 * L01},     {3, 5, I * m1 * L10},
                 {4, 0, -(m1 * L10)},   {4, 2, -(m1 * L01)},   {5, 0, -I * m1 * L01}, {5, 2, -I * m1 * L10}});
  return {plus, minus};
}

std::string orientation_name(Orientation o) { return o == Orientation::XPlus ? "x=x+" : "x=x-"; }

AlgebraElement spectral_on_shell_residual(const LambdaChoice& c, Orientation o) {
  LaxPair lp = build_lax(LaxVariant::Spectral, c);
  RewriteSystem rs = component_equations();
  return zero_curvature_residual(lp).map([&](const GradedPoly& p) {
    return rs.reduce(o == Orientation::XPlus ? p : swap_light_cone(p));
  });
}

std::vector<CheckResult> verify_spectral_matrices() {
  std::vector<CheckResult> out;
  SpectralSearch s = search_lambda();
  std::string surv;
  for (const auto& x : s.survivors) surv += (surv.empty() ? "" : "; ") + x;
  out.push_back({"spectral.single_field_lambda", "LaxOps", true, "",
                 std::to_string(s.candidates.size()) + " candidates, survivors: " + (surv.empty() ? "none" : surv)});
  std::optional<LambdaChoice> choice;
  std::optional<Orientation> orient;
  for (const auto& a : s.ansatz) {
    std::string note = a.solution ? a.solution->label : (a.consistent ? "not unique" : "no solution");
    out.push_back({"spectral.lambda_ansatz." + orientation_name(a.orientation), "LaxOps", true, "", note});
    if (a.solution && !choice) {
      choice = a.solution;
      orient = a.orientation;
    }
  }
  out.push_back({"spectral.lambda_identification", "LaxOps", choice.has_value(), "",
                 choice ? choice->label : "no identification closes the zero-curvature condition"});
  const auto& c = ComponentFields::get();
  LambdaChoice used = choice ? *choice : LambdaChoice{var(c.psi10), var(c.psi01), "Lambda10=psi10, Lambda01=psi01"};
  LaxPair lp = build_lax(LaxVariant::Spectral, used);
  out.push_back({"spectral.grading", "LaxOps",
                 lp.first.is_homogeneous() && lp.second.is_homogeneous() && lp.first.grade() == kG00 &&
                     lp.second.grade() == kG00,
                 "", ""});
  MatrixRep rep = sixdim_from_action();
  const auto& kets = sixdim_ket_grades();
  auto [pp, pm] = printed_spectral_matrices(used);
  GradedMatrix rp = represent(lp.first, rep, kets), rm = represent(lp.second, rep, kets);
  auto cmp = [&](const std::string& id, const GradedMatrix& a, const GradedMatrix& b) {
    std::string bad;
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        if (!(a.at(i, j) == b.at(i, j)) && bad.empty())
          bad = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + a.at(i, j).str() + " vs " +
                b.at(i, j).str();
    out.push_back({id, "spectral matrices", bad.empty(), bad, ""});
  };
  cmp("spectral.matrix.L_plus", rp, pp);
  cmp("spectral.matrix.L_minus", rm, pm);
  RewriteSystem rs = component_equations();
  Orientation o = orient.value_or(Orientation::XPlus);
  auto powers = by_lambda_power(zero_curvature_residual(lp));
  for (const auto& [n, part] : powers) {
    AlgebraElement r = part.map([&](const GradedPoly& p) { return rs.reduce(o == Orientation::XPlus ? p : swap_light_cone(p)); });
    out.push_back(check_element("spectral.residual.lambda^" + std::to_string(n), "ComponentEq2", r, used.label));
  }
  return out;
}

}  // namespace z2sl
