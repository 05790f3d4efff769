#include "z2sl/soldering.hpp"

#include <algorithm>
#include <stdexcept>

namespace z2sl {

// ---------------------------------------------------------------------------
// M-algebra valued quantities

const std::array<GradeVec, 4>& MAlgebra::row_grades() {
  static const std::array<GradeVec, 4> g{kG00, kG10, kG11, kG01};
  return g;
}

GradedMatrix MAlgebra::make(const std::array<GradedPoly, 4>& c) const {
  GradedMatrix out(4, 4);
  for (int k = 0; k < 4; ++k) {
    if (c[static_cast<std::size_t>(k)].is_zero()) continue;
    GradedMatrix mk = m_matrix(k);
    for (const auto& [g, part] : c[static_cast<std::size_t>(k)].homogeneous_parts())
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          if (mk.at(i, j).is_zero()) continue;
          int s = conv_ == MConvention::Graded ? grade_sign(g, row_grades()[i]) : 1;
          out.at(i, j) += GradedPoly(Scalar(s)) * part * mk.at(i, j);
        }
  }
  return out;
}

std::array<GradedPoly, 4> MAlgebra::coords(const GradedMatrix& m) const {
  // row 0 is [00]-graded, so its entries carry no convention sign
  static const std::array<std::pair<std::size_t, Scalar>, 4> pivot{
      {{0, Scalar(1)}, {1, Scalar(1)}, {3, -Scalar::i()}, {2, Scalar(1)}}};
  std::array<GradedPoly, 4> c;
  for (std::size_t k = 0; k < 4; ++k) c[k] = m.at(0, pivot[k].first) * pivot[k].second.inverse();
  if (!(make(c) == m)) throw std::invalid_argument("MAlgebra::coords: matrix is not M-algebra valued");
  return c;
}

GradedMatrix MAlgebra::D(Deriv d, const GradedMatrix& m) const {
  GradedMatrix out = m.map([d](const GradedPoly& p) { return apply_D(d, p); });
  if (conv_ == MConvention::Graded)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (grade_sign(deriv_grade(d), row_grades()[i]) == 1) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = -out.at(i, j);
    }
  return out;
}

GradedMatrix MAlgebra::D12(Deriv d, const GradedMatrix& m) const {
  GradedMatrix out = m.map([d](const GradedPoly& p) { return apply_D(d, p); });
  if (conv_ == MConvention::Graded)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (grade_sign(deriv_grade(d), row_grades()[i / 3]) == 1) continue;
      for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = -out.at(i, j);
    }
  return out;
}

// ---------------------------------------------------------------------------
// group element and currents

const SolderingFields& SolderingFields::get() {
  static const SolderingFields f{declare_superfield("alpha00", kG00), declare_superfield("alpha11", kG11),
                                 declare_superfield("lambda10", kG10), declare_superfield("lambda01", kG01),
                                 declare_superfield("beta00", kG00),  declare_superfield("beta11", kG11),
                                 declare_superfield("mu10", kG10),     declare_superfield("mu01", kG01),
                                 declare_superfield("gamma00", kG00), declare_superfield("gamma11", kG11)};
  return f;
}

GroupCoords group_coords(const MAlgebra& M) {
  const auto& s = SolderingFields::get();
  return GroupCoords{M.make({jet(s.a00), 0, 0, jet(s.a11)}), M.make({0, jet(s.l10), jet(s.l01), 0}),
                     M.make({jet(s.b00), 0, 0, jet(s.b11)}), M.make({0, jet(s.m10), jet(s.m01), 0}),
                     M.make({jet(s.c00), 0, 0, jet(s.c11)})};
}

GradedMatrix exp_cartan(const MAlgebra& M, int k) {
  const auto& s = SolderingFields::get();
  GradedPoly e = exp_of(LinearArg::of(s.b00, k));
  LinearArg w = LinearArg::of(s.b11, k);
  return M.make({e * cosh_of(w), 0, 0, e * sinh_of(w)});
}

namespace {

GradedMatrix place(const GradedMatrix& mval, const char* osp) { return kron(mval, fundamental_osp().at(osp)); }

GradedMatrix block(const GradedMatrix& m12, std::size_t k, std::size_t l) {
  GradedMatrix b(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) b.at(i, j) = m12.at(3 * i + k, 3 * j + l);
  return b;
}

/// exp(c x H) = diag(e^{-c}, 1, e^{c}) in the v-index.
GradedMatrix cartan_factor(const MAlgebra& M, int sign) {
  GradedMatrix out(12, 12);
  GradedMatrix em = exp_cartan(M, -sign), ep = exp_cartan(M, sign), one = M.scalar(1);
  const GradedMatrix* blocks[3] = {&em, &one, &ep};
  for (std::size_t n = 0; n < 3; ++n)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) out.at(3 * i + n, 3 * j + n) = blocks[n]->at(i, j);
  return out;
}

struct Decomposed {
  CurrentComponents c;
  bool ok = true;
};

Decomposed decompose(const MAlgebra& M, const GradedMatrix& J) {
  Decomposed r;
  r.c.pp = block(J, 2, 0);
  r.c.p = block(J, 1, 0);
  r.c.zero = block(J, 2, 2);
  r.c.m = block(J, 1, 2);
  r.c.mm = block(J, 0, 2);
  r.ok = block(J, 2, 1) == r.c.p && block(J, 0, 0) == -r.c.zero && block(J, 1, 1).is_zero() &&
         block(J, 0, 1) == -r.c.m;
  try {
    for (const GradedMatrix* x : {&r.c.pp, &r.c.p, &r.c.zero, &r.c.m, &r.c.mm}) (void)M.coords(*x);
  } catch (const std::invalid_argument&) {
    r.ok = false;
  }
  return r;
}

}  // namespace

Currents derive_wznw_currents(const MAlgebra& M) {
  GroupCoords g = group_coords(M);
  GradedMatrix id = GradedMatrix::identity(12);
  std::vector<GradedMatrix> fac{id + place(g.a, "E+"), id + place(g.b, "F+"), cartan_factor(M, 1),
                                id + place(g.d, "F-"), id + place(g.f, "E-")};
  std::vector<GradedMatrix> inv{id - place(g.a, "E+"), id - place(g.b, "F+"), cartan_factor(M, -1),
                                id - place(g.d, "F-"), id - place(g.f, "E-")};
  GradedMatrix G = id, Ginv = id;
  for (std::size_t k = 0; k < fac.size(); ++k) {
    G = G * fac[k];
    Ginv = inv[k] * Ginv;
  }
  Currents out;
  auto j = decompose(M, M.D12(Deriv::DPlus, G) * Ginv);
  auto jb = decompose(M, Ginv * M.D12(Deriv::DMinus, G));
  out.J = j.c;
  out.Jbar = jb.c;
  out.residue_ok = j.ok && jb.ok && (G * Ginv == id);
  return out;
}

CurrentComponents displayed_currents(const MAlgebra& M, bool holomorphic) {
  GroupCoords g = group_coords(M);
  GradedMatrix em1 = exp_cartan(M, -1), em2 = exp_cartan(M, -2);
  GradedPoly two(2);
  CurrentComponents c;
  if (holomorphic) {
    auto D = [&](const GradedMatrix& x) { return M.D(Deriv::DPlus, x); };
    GradedMatrix K = D(g.f) - D(g.d) * g.d;
    c.pp = -(two * (em2 * K * g.a * g.a)) - two * (em1 * D(g.d) * g.a * g.b) - two * (D(g.c) * g.a) + D(g.b) * g.b +
           D(g.a);
    c.p = -(em2 * K * g.a * g.b) - em1 * D(g.d) * g.a - D(g.c) * g.b + D(g.b);
    c.zero = em2 * K * g.a + em1 * D(g.d) * g.b + D(g.c);
    c.m = em2 * K * g.b + em1 * D(g.d);
    c.mm = K * em2;
  } else {
    auto D = [&](const GradedMatrix& x) { return M.D(Deriv::DMinus, x); };
    GradedMatrix K = D(g.a) + g.b * D(g.b);
    c.pp = em2 * K;
    c.p = -(em2 * K * g.d) + em1 * D(g.b);
    c.zero = -(em2 * K * g.f) - em1 * D(g.b) * g.d + D(g.c);
    c.m = -(em2 * K * g.f * g.d) + em1 * D(g.b) * g.f - D(g.c) * g.d + D(g.d);
    c.mm = -(em2 * K * g.f * g.f) - two * (em1 * D(g.b) * g.f * g.d) - two * (D(g.c) * g.f) + D(g.d) * g.d + D(g.f);
  }
  return c;
}


CurrentComponents closed_form_currents(const MAlgebra& M, bool holomorphic) {
  GroupCoords g = group_coords(M);
  GradedMatrix em1 = exp_cartan(M, -1), em2 = exp_cartan(M, -2);
  GradedPoly two(2);
  CurrentComponents c;
  if (holomorphic) {
    auto D = [&](const GradedMatrix& x) { return M.D(Deriv::DPlus, x); };
    GradedMatrix K = D(g.f) + D(g.d) * g.d;
    c.pp = -(em2 * K * g.a * g.a) + two * (em1 * D(g.d) * g.a * g.b) - two * (D(g.c) * g.a) - D(g.b) * g.b + D(g.a);
    c.p = -(em2 * K * g.a * g.b) - em1 * D(g.d) * g.a - D(g.c) * g.b + D(g.b);
    c.zero = em2 * K * g.a - em1 * D(g.d) * g.b + D(g.c);
    c.m = em2 * K * g.b + em1 * D(g.d);
    c.mm = K * em2;
  } else {
    auto D = [&](const GradedMatrix& x) { return M.D(Deriv::DMinus, x); };
    GradedMatrix K = D(g.a) - g.b * D(g.b);
    c.pp = em2 * K;
    c.p = -(em2 * K * g.d) + em1 * D(g.b);
    c.zero = em2 * K * g.f + em1 * D(g.b) * g.d + D(g.c);
    c.m = -(em2 * K * g.f * g.d) + em1 * D(g.b) * g.f - D(g.c) * g.d + D(g.d);
    c.mm = -(em2 * K * g.f * g.f) - two * (em1 * D(g.b) * g.f * g.d) - two * (D(g.c) * g.f) - D(g.d) * g.d + D(g.f);
  }
  return c;
}

std::string m_text(const MAlgebra& M, const GradedMatrix& m) {
  std::array<GradedPoly, 4> c;
  try {
    c = M.coords(m);
  } catch (const std::invalid_argument&) {
    return "not M-valued: " + m.str();
  }
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    if (c[k].is_zero()) continue;
    if (!out.empty()) out += " ; ";
    out += "M" + std::to_string(k) + ": " + c[k].str();
  }
  return out.empty() ? "0" : out;
}

namespace {

CheckResult check_matrix(std::string id, std::string anchor, const MAlgebra& M, const GradedMatrix& lhs,
                         const GradedMatrix& rhs) {
  CheckResult r{std::move(id), std::move(anchor), lhs == rhs, "", ""};
  if (!r.pass) r.residual = m_text(M, lhs - rhs);
  return r;
}

CheckResult check_poly(std::string id, std::string anchor, const GradedPoly& residual) {
  CheckResult r{std::move(id), std::move(anchor), residual.is_zero(), "", ""};
  if (!r.pass) r.residual = residual.str();
  return r;
}

const char* const kCompNames[5] = {"pp", "p", "0", "m", "mm"};

std::array<const GradedMatrix*, 5> parts(const CurrentComponents& c) {
  return {&c.pp, &c.p, &c.zero, &c.m, &c.mm};
}

}  // namespace

std::vector<CheckResult> verify_currents(MConvention conv) {
  MAlgebra M(conv);
  std::vector<CheckResult> out;
  Currents cur = derive_wznw_currents(M);
  out.push_back({"currents.decomposition", "DEF:current", cur.residue_ok, cur.residue_ok ? "" : "block structure", ""});
  for (bool h : {true, false}) {
    std::string base = h ? "currents.J" : "currents.Jbar";
    auto derived = parts(h ? cur.J : cur.Jbar);
    CurrentComponents printed = displayed_currents(M, h), closed = closed_form_currents(M, h);
    auto pr = parts(printed), cl = parts(closed);
    for (std::size_t k = 0; k < 5; ++k) {
      if (!cur.residue_ok) {
        out.push_back({base + "." + kCompNames[k] + ".printed", "CurrentOspbasis", false, "decomposition failed", ""});
        continue;
      }
      out.push_back(check_matrix(base + "." + kCompNames[k] + ".printed", "CurrentOspbasis", M, *derived[k], *pr[k]));
      out.push_back(check_matrix(base + "." + kCompNames[k] + ".closed_form", "CurrentOspbasis", M, *derived[k], *cl[k]));
    }
  }
  // a = b = d = f = 0 leaves the Cartan part only
  if (cur.residue_ok) {
    const auto& s = SolderingFields::get();
    auto kill = [&](const GradedMatrix& m) {
      return m.map([&](const GradedPoly& p) { return set_zero(p, {s.a00, s.a11, s.l10, s.l01, s.m10, s.m01, s.c00, s.c11}); });
    };
    GroupCoords g = group_coords(M);
    GradedMatrix dc = kill(M.D(Deriv::DPlus, g.c));
    bool ok = kill(cur.J.zero) == dc && kill(cur.J.pp).is_zero() && kill(cur.J.p).is_zero() && kill(cur.J.m).is_zero() &&
              kill(cur.J.mm).is_zero();
    out.push_back({"currents.cartan_only", "DEF:current", ok, ok ? "" : m_text(M, kill(cur.J.zero) - dc), ""});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hamiltonian constraints and the master equation

namespace {

/// Rules X -> coords(m) for the odd derivative d of the four coordinate fields.
void add_rules(RewriteSystem& rs, const MAlgebra& M, Deriv d, const std::array<Field, 2>& fields,
               const std::array<int, 2>& slots, const GradedMatrix& m) {
  auto c = M.coords(m);
  for (std::size_t k = 0; k < 2; ++k) rs.first_order(fields[k], d, c[static_cast<std::size_t>(slots[k])]);
}

GradedMatrix reduce_m(const RewriteSystem& rs, const GradedMatrix& m) {
  return m.map([&](const GradedPoly& p) { return rs.reduce(p); });
}

}  // namespace

std::vector<CheckResult> verify_master_equation(MConvention conv) {
  MAlgebra M(conv);
  const auto& s = SolderingFields::get();
  GroupCoords g = group_coords(M);
  std::vector<CheckResult> out;
  GradedMatrix M1 = M.scalar(1) * m_matrix(1), e_c = exp_cartan(M, 1), em_c = exp_cartan(M, -1);
  GradedMatrix sol1 = -(g.b * M1), sol2 = e_c * M1;
  const std::array<int, 2> even_slots{0, 3}, odd_slots{1, 2};

  Currents cur = derive_wznw_currents(M);
  if (!cur.residue_ok) {
    out.push_back({"constraints.decomposition", "RductionConstraints", false, "currents do not decompose", ""});
  } else {
    // J_{--} = 0 and J_- = M1 fix D f and D d
    RewriteSystem hol;
    add_rules(hol, M, Deriv::DPlus, {s.m10, s.m01}, odd_slots, e_c * M1);
    add_rules(hol, M, Deriv::DPlus, {s.c00, s.c11}, even_slots, -(M.D(Deriv::DPlus, g.d) * g.d));
    out.push_back(check_matrix("constraints.J_mm", "RductionConstraints", M, reduce_m(hol, cur.J.mm), GradedMatrix(4, 4)));
    out.push_back(check_matrix("constraints.J_m", "RductionConstraints", M, reduce_m(hol, cur.J.m), M1));
    out.push_back(check_matrix("constraints.J_0_gives_Sol1", "Sol1", M, reduce_m(hol, cur.J.zero),
                               M.D(Deriv::DPlus, g.c) - sol1));
    add_rules(hol, M, Deriv::DPlus, {s.b00, s.b11}, even_slots, sol1);
    out.push_back(check_matrix("constraints.Sol1_solves_J_0", "Sol1", M, reduce_m(hol, cur.J.zero), GradedMatrix(4, 4)));

    RewriteSystem anti;
    add_rules(anti, M, Deriv::DMinus, {s.l10, s.l01}, odd_slots, sol2);
    add_rules(anti, M, Deriv::DMinus, {s.a00, s.a11}, even_slots, g.b * M.D(Deriv::DMinus, g.b));
    out.push_back(check_matrix("constraints.Jbar_pp", "RductionConstraints2", M, reduce_m(anti, cur.Jbar.pp),
                               GradedMatrix(4, 4)));
    out.push_back(check_matrix("constraints.Jbar_p_gives_Sol2", "Sol2", M, reduce_m(anti, cur.Jbar.p), M1));
    add_rules(anti, M, Deriv::DMinus, {s.b00, s.b11}, even_slots, -(M1 * g.d));
    out.push_back(check_matrix("constraints.Jbar_0", "RductionConstraints2", M, reduce_m(anti, cur.Jbar.zero),
                               GradedMatrix(4, 4)));
  }

  // D Dbar c = e^c from Sol1 and Sol2
  RewriteSystem rs;
  add_rules(rs, M, Deriv::DPlus, {s.b00, s.b11}, even_slots, sol1);
  add_rules(rs, M, Deriv::DMinus, {s.l10, s.l01}, odd_slots, sol2);
  GradedMatrix ddc = reduce_m(rs, M.D(Deriv::DPlus, M.D(Deriv::DMinus, g.c)));
  out.push_back(check_matrix("master.DDbar_c", "SLsol", M, ddc, e_c));
  auto c = M.coords(ddc);
  GradedPoly e = exp_of(LinearArg::of(s.b00));
  out.push_back(check_poly("master.SLsol.00", "SLsol", c[0] - e * cosh_of(LinearArg::of(s.b11))));
  out.push_back(check_poly("master.SLsol.11", "SLsol", c[3] - e * sinh_of(LinearArg::of(s.b11))));
  out.push_back(check_poly("master.liouville_limit", "SLsol", set_zero(c[0] - e, {s.b11})));
  out.push_back(check_matrix("master.exp_c_inverse", "SLsol", M, e_c * em_c, M.scalar(1)));
  return out;
}

// ---------------------------------------------------------------------------
// components

const ComponentFields& ComponentFields::get() {
  static const ComponentFields f{declare_component("phi00", kG00), declare_component("psi10", kG10),
                                 declare_component("psibar10", kG10), declare_component("F00", kG00),
                                 declare_component("phi11", kG11), declare_component("psi01", kG01),
                                 declare_component("psibar01", kG01), declare_component("F11", kG11)};
  return f;
}

PrintedComponents printed_components() {
  const auto& f = ComponentFields::get();
  GradedPoly e = exp_of(LinearArg::of(f.phi00)), e2 = exp_of(LinearArg::of(f.phi00, 2));
  GradedPoly ch = cosh_of(LinearArg::of(f.phi11)), sh = sinh_of(LinearArg::of(f.phi11));
  GradedPoly ch2 = cosh_of(LinearArg::of(f.phi11, 2)), sh2 = sinh_of(LinearArg::of(f.phi11, 2));
  GradedPoly p10 = var(f.psi10), pb10 = var(f.psib10), p01 = var(f.psi01), pb01 = var(f.psib01);
  GradedPoly F00 = var(f.F00), F11 = var(f.F11), I(Scalar::i());
  GradedPoly even = p10 * pb10 - p01 * pb01, odd = p10 * pb01 - p01 * pb10;
  PrintedComponents p;
  p.box00 = jet(f.phi00, 1, 1) - e * (ch * (even - F00) + sh * (odd - F11));
  p.dpsi10 = I * jet(f.psi10, 0, 1) - e * (-(ch * pb10) + sh * pb01);
  p.dpsib10 = I * jet(f.psib10, 1, 0) - e * (ch * p10 - sh * p01);
  p.aux00 = F00 + e * ch;
  p.box11 = jet(f.phi11, 1, 1) - e * (ch * (odd - F11) + sh * (even - F00));
  p.dpsi01 = I * jet(f.psi01, 0, 1) - e * (-(ch * pb01) + sh * pb10);
  p.dpsib01 = I * jet(f.psib01, 1, 0) - e * (ch * p01 - sh * p10);
  p.aux11 = F11 + e * sh;
  p.box00_elim = jet(f.phi00, 1, 1) - e2 * ch2 - e * (ch * even + sh * odd);
  p.box11_elim = jet(f.phi11, 1, 1) - e2 * sh2 - e * (ch * odd + sh * even);
  return p;
}

GradedPoly eliminate_aux(const GradedPoly& p) {
  const auto& f = ComponentFields::get();
  GradedPoly e = exp_of(LinearArg::of(f.phi00));
  GradedPoly f00 = -(e * cosh_of(LinearArg::of(f.phi11))), f11 = -(e * sinh_of(LinearArg::of(f.phi11)));
  return map_generators(p, [&](const Generator& g) -> std::optional<GradedPoly> {
    if (g.kind != GenKind::Jet) return std::nullopt;
    if (g.field == f.F00 || g.field == f.F11) {
      if (g.dplus_count || g.dminus_count) throw std::logic_error("eliminate_aux: derivative of an auxiliary field");
      return g.field == f.F00 ? f00 : f11;
    }
    return std::nullopt;
  });
}

namespace {

/// Superfield equation with beta00, beta11 expanded into components, split by theta sector.
std::map<std::vector<OddCoord>, GradedPoly> expand(const GradedPoly& eq) {
  const auto& s = SolderingFields::get();
  const auto& f = ComponentFields::get();
  GradedPoly th = theta(OddCoord::ThetaPlus), tb = theta(OddCoord::ThetaMinus);
  GradedPoly x = substitute(eq, s.b00, {LinearArg::of(f.phi00), th * var(f.psi10) + tb * var(f.psib10) + th * tb * var(f.F00)});
  x = substitute(x, s.b11, {LinearArg::of(f.phi11), th * var(f.psi01) + tb * var(f.psib01) + th * tb * var(f.F11)});
  return theta_sectors(x);
}

std::string sector_name(const std::vector<OddCoord>& s) {
  if (s.empty()) return "1";
  std::string out;
  for (OddCoord c : s) out += coord_name(c);
  return out;
}

}  // namespace

std::vector<CheckResult> verify_components() {
  const auto& s = SolderingFields::get();
  const auto& f = ComponentFields::get();
  PrintedComponents p = printed_components();
  GradedPoly e = exp_of(LinearArg::of(s.b00));
  std::vector<CheckResult> out;
  struct Job {
    std::string id;
    GradedPoly eq;
    std::vector<std::pair<std::string, const GradedPoly*>> printed;
  };
  std::vector<Job> jobs{
      {"components.beta00", jet(s.b00, 0, 0, true, true) - e * cosh_of(LinearArg::of(s.b11)),
       {{"box", &p.box00}, {"dbar_psi", &p.dpsi10}, {"d_psibar", &p.dpsib10}, {"aux", &p.aux00}}},
      {"components.beta11", jet(s.b11, 0, 0, true, true) - e * sinh_of(LinearArg::of(s.b11)),
       {{"box", &p.box11}, {"dbar_psi", &p.dpsi01}, {"d_psibar", &p.dpsib01}, {"aux", &p.aux11}}}};
  for (const Job& j : jobs) {
    auto sectors = expand(j.eq);
    for (const auto& [name, pr] : j.printed) {
      CheckResult r{j.id + "." + name, "CompEq", false, "", ""};
      for (const auto& [sec, poly] : sectors)
        if (auto k = proportionality(poly, *pr); k && !k->is_zero()) {
          r.pass = true;
          r.note = "theta sector " + sector_name(sec) + ", factor " + k->str();
        }
      if (!r.pass) r.residual = "no theta sector proportional to " + pr->str();
      out.push_back(r);
    }
    if (sectors.size() != 4) out.push_back({j.id + ".sector_count", "CompEq", false, std::to_string(sectors.size()), ""});
  }
  out.push_back(check_poly("components.eliminated.00", "ComponentEq2", eliminate_aux(p.box00) - p.box00_elim));
  out.push_back(check_poly("components.eliminated.11", "ComponentEq2", eliminate_aux(p.box11) - p.box11_elim));
  // reductions
  GradedPoly sl = set_zero(p.box00_elim, {f.phi11, f.psi01, f.psib01});
  GradedPoly e2 = exp_of(LinearArg::of(f.phi00, 2));
  out.push_back(check_poly("components.super_liouville", "ComponentEq2",
                           sl - (jet(f.phi00, 1, 1) - e2 - exp_of(LinearArg::of(f.phi00)) * var(f.psi10) * var(f.psib10))));
  out.push_back(check_poly("components.super_liouville_11_branch", "ComponentEq2",
                           set_zero(p.box11_elim, {f.phi11, f.psi10, f.psib10})));
  out.push_back(check_poly("components.liouville", "ComponentEq2",
                           set_zero(p.box00_elim, {f.phi11, f.psi10, f.psib10, f.psi01, f.psib01}) -
                               (jet(f.phi00, 1, 1) - e2)));
  return out;
}

RewriteSystem component_equations() {
  const auto& f = ComponentFields::get();
  PrintedComponents p = printed_components();
  GradedPoly mi(-Scalar::i());
  RewriteSystem rs;
  rs.component(f.phi00, 1, 1, jet(f.phi00, 1, 1) - p.box00_elim);
  rs.component(f.phi11, 1, 1, jet(f.phi11, 1, 1) - p.box11_elim);
  rs.component(f.psi10, 0, 1, mi * eliminate_aux(jet(f.psi10, 0, 1) * GradedPoly(Scalar::i()) - p.dpsi10));
  rs.component(f.psib10, 1, 0, mi * eliminate_aux(jet(f.psib10, 1, 0) * GradedPoly(Scalar::i()) - p.dpsib10));
  rs.component(f.psi01, 0, 1, mi * eliminate_aux(jet(f.psi01, 0, 1) * GradedPoly(Scalar::i()) - p.dpsi01));
  rs.component(f.psib01, 1, 0, mi * eliminate_aux(jet(f.psib01, 1, 0) * GradedPoly(Scalar::i()) - p.dpsib01));
  return rs;
}

// ---------------------------------------------------------------------------
// current variations and gauge reduction

const UFields& UFields::get() {
  static const UFields f{declare_component("u00", kG00, Chirality::PlusOnly), declare_component("u11", kG11, Chirality::PlusOnly),
                         declare_component("u10", kG10, Chirality::PlusOnly), declare_component("u01", kG01, Chirality::PlusOnly),
                         declare_component("veps00", kG00, Chirality::PlusOnly), declare_component("veps11", kG11, Chirality::PlusOnly),
                         declare_component("veps10", kG10, Chirality::PlusOnly), declare_component("veps01", kG01, Chirality::PlusOnly)};
  return f;
}

std::array<GradedPoly, 4> printed_u_transformations() {
  const auto& f = UFields::get();
  auto d = [](Field x, int n = 0) { return jet(x, n); };
  GradedPoly I(Scalar::i()), h(Scalar::rational(1, 2)), h3(Scalar::rational(3, 2)), two(2);
  GradedPoly du00 = I * (two * d(f.v00, 1) * d(f.u00) + d(f.v00) * d(f.u00, 1) + h * d(f.v00, 3)) +
                    I * (two * d(f.v11, 1) * d(f.u11) + d(f.v11) * d(f.u11, 1)) +
                    I * (h3 * d(f.v10, 1) * d(f.u10) + h * d(f.v10) * d(f.u10, 1)) -
                    I * (h3 * d(f.v01, 1) * d(f.u01) + h * d(f.v01) * d(f.u01, 1));
  GradedPoly du11 = I * (two * d(f.v11, 1) * d(f.u00) + d(f.v11) * d(f.u00, 1) + h * d(f.v11, 3)) +
                    I * (two * d(f.v00, 1) * d(f.u11) + d(f.v00) * d(f.u11, 1)) +
                    I * (h3 * d(f.v10, 1) * d(f.u01) + h * d(f.v10) * d(f.u01, 1)) -
                    I * (h3 * d(f.v01, 1) * d(f.u10) + h * d(f.v01) * d(f.u10, 1));
  GradedPoly du10 = I * (h3 * d(f.v00, 1) * d(f.u10) + d(f.v00) * d(f.u10, 1)) -
                    I * (h3 * d(f.v11, 1) * d(f.u01) + d(f.v11) * d(f.u01, 1)) +
                    h * (d(f.v10) * d(f.u00) + d(f.v01) * d(f.u11) + d(f.v10, 2));
  GradedPoly du01 = I * (h3 * d(f.v00, 1) * d(f.u01) + d(f.v00) * d(f.u01, 1)) -
                    I * (h3 * d(f.v11, 1) * d(f.u10) + d(f.v11) * d(f.u10, 1)) +
                    h * (d(f.v01) * d(f.u00) + d(f.v10) * d(f.u11) + d(f.v01, 2));
  return {du10, du00, du01, du11};
}

namespace {

struct MPair {
  Field even, odd;  // coefficient fields of (M0, M3) or (M1, M2)
};

/// Holomorphic M-valued superfield on span(M0, M3) or span(M1, M2).
GradedMatrix m_field(const MAlgebra& M, const MPair& f, bool diagonal) {
  if (diagonal) return M.make({var(f.even), 0, 0, var(f.odd)});
  return M.make({0, var(f.even), var(f.odd), 0});
}

MPair declare_pair(const std::string& name, GradeVec g0, GradeVec g3, const char* s0, const char* s3) {
  return {declare_superfield(name + s0, g0, Chirality::PlusOnly), declare_superfield(name + s3, g3, Chirality::PlusOnly)};
}

struct VariationFields {
  std::array<MPair, 5> J, eps;  // ++, +, 0, -, --
  static const VariationFields& get() {
    static const VariationFields v = [] {
      VariationFields r;
      const char* n[5] = {"pp", "p", "0", "m", "mm"};
      for (std::size_t k = 0; k < 5; ++k) {
        bool diag = k % 2 == 0;
        r.J[k] = diag ? declare_pair(std::string("J") + n[k] + "_", kG10, kG01, "10", "01")
                      : declare_pair(std::string("J") + n[k] + "_", kG00, kG11, "00", "11");
        r.eps[k] = diag ? declare_pair(std::string("eps") + n[k] + "_", kG00, kG11, "00", "11")
                        : declare_pair(std::string("eps") + n[k] + "_", kG10, kG01, "10", "01");
      }
      return r;
    }();
    return v;
  }
};

const char* const kOsp[5] = {"E+", "F+", "H", "F-", "E-"};

GradedMatrix assemble(const std::array<GradedMatrix, 5>& c) {
  GradedMatrix out(12, 12);
  for (std::size_t k = 0; k < 5; ++k) out += kron(c[k], fundamental_osp().at(kOsp[k]));
  return out;
}

std::array<GradedMatrix, 5> components(const GradedMatrix& J) {
  CurrentComponents c;
  c.pp = block(J, 2, 0);
  c.p = block(J, 1, 0);
  c.zero = block(J, 2, 2);
  c.m = block(J, 1, 2);
  c.mm = block(J, 0, 2);
  return {c.pp, c.p, c.zero, c.m, c.mm};
}

/// delta J = D eps + eps J - J eps, to first order.
std::array<GradedMatrix, 5> vary(const MAlgebra& M, const std::array<GradedMatrix, 5>& J,
                                 const std::array<GradedMatrix, 5>& eps) {
  GradedMatrix j = assemble(J), e = assemble(eps);
  GradedMatrix dj = M.D12(Deriv::DPlus, e) + e * j - j * e;
  if (!(assemble(components(dj)) == dj)) throw std::logic_error("vary: variation leaves osp(1|2)");
  return components(dj);
}

/// The printed component variation table.
std::array<GradedMatrix, 5> printed_variation(const MAlgebra& M, const std::array<GradedMatrix, 5>& J,
                                              const std::array<GradedMatrix, 5>& e) {
  auto D = [&](const GradedMatrix& x) { return M.D(Deriv::DPlus, x); };
  GradedPoly two(2);
  return {-(two * (e[0] * J[2])) + two * (e[1] * J[1]) + two * (e[2] * J[0]) + D(e[0]),
          -(e[0] * J[3]) + e[1] * J[2] + e[2] * J[1] - e[3] * J[0] + D(e[1]),
          e[0] * J[4] + e[1] * J[3] + e[3] * J[1] - e[4] * J[0] + D(e[2]),
          -(e[1] * J[4]) - e[2] * J[3] - e[3] * J[2] - e[4] * J[1] + D(e[3]),
          -(two * (e[2] * J[4])) - two * (e[3] * J[3]) + two * (e[4] * J[2]) + D(e[4])};
}

/// Scaling dimension in halves: [x] = -2, [theta] = -1, d/dx = +2, D = +1.
std::optional<int> scaling_dimension(const Monomial& m, const std::map<Field, int>& dims) {
  int total = 0;
  for (const Factor& f : m) {
    const Generator& g = f.gen;
    if (g.kind == GenKind::OddCoord) {
      total -= f.exp;
    } else if (g.kind == GenKind::Jet) {
      auto it = dims.find(g.field);
      if (it == dims.end()) return std::nullopt;
      total += f.exp * (it->second + 2 * (g.dplus_count + g.dminus_count) + g.odd_plus + g.odd_minus);
    } else {
      return std::nullopt;
    }
  }
  return total;
}

}  // namespace

std::vector<CheckResult> verify_current_variation() {
  MAlgebra M(MConvention::Graded);
  const auto& v = VariationFields::get();
  std::array<GradedMatrix, 5> J, eps, zero;
  for (std::size_t k = 0; k < 5; ++k) {
    J[k] = m_field(M, v.J[k], k % 2 == 0);
    eps[k] = m_field(M, v.eps[k], k % 2 == 0);
    zero[k] = GradedMatrix(4, 4);
  }
  std::vector<CheckResult> out;
  auto derived = vary(M, J, eps), printed = printed_variation(M, J, eps);
  for (std::size_t k = 0; k < 5; ++k)
    out.push_back(check_matrix(std::string("variation.delta_J_") + kCompNames[k], "deltaJ", M, derived[k], printed[k]));
  // rows with the eps_pm J_{0}, eps_pm J_{pm pm} signs that the realization produces
  auto D = [&](const GradedMatrix& x) { return M.D(Deriv::DPlus, x); };
  const auto& e = eps;
  out.push_back(check_matrix("variation.delta_J_p.closed_form", "deltaJ", M, derived[1],
                             -(e[0] * J[3]) - e[1] * J[2] + e[2] * J[1] + e[3] * J[0] + D(e[1])));
  out.push_back(check_matrix("variation.delta_J_m.closed_form", "deltaJ", M, derived[3],
                             e[1] * J[4] - e[2] * J[3] + e[3] * J[2] - e[4] * J[1] + D(e[3])));
  auto none = vary(M, J, zero);
  bool ok = std::all_of(none.begin(), none.end(), [](const GradedMatrix& m) { return m.is_zero(); });
  out.push_back({"variation.zero_parameter", "deltaJ", ok, ok ? "" : "nonzero", ""});
  // only eps_0: delta J_{++} = 2 eps_0 J_{++}
  std::array<GradedMatrix, 5> only0 = zero;
  only0[2] = eps[2];
  out.push_back(check_matrix("variation.only_eps0", "deltaJ", M, vary(M, J, only0)[0],
                             GradedPoly(2) * (eps[2] * J[0])));
  return out;
}

std::vector<CheckResult> verify_gauge_reduction() {
  MAlgebra M(MConvention::Graded);
  const auto& v = VariationFields::get();
  auto D = [&](const GradedMatrix& x) { return M.D(Deriv::DPlus, x); };
  auto P = [&](const GradedMatrix& x) { return M.D(Deriv::PartialPlus, x); };
  GradedMatrix M1 = m_matrix(1), Jpp = m_field(M, v.J[0], true), emm = m_field(M, v.eps[4], true);
  GradedPoly half(Scalar::rational(1, 2)), ihalf(Scalar(0, mpq_class(1, 2)));
  std::array<GradedMatrix, 5> J{Jpp, GradedMatrix(4, 4), GradedMatrix(4, 4), M1, GradedMatrix(4, 4)};
  // k: coefficient of eps_{--} D J_{++} in eps_{++}
  auto params = [&](const GradedPoly& k) {
    return std::array<GradedMatrix, 5>{half * (D(emm) * Jpp) + k * (emm * D(Jpp)) + half * P(P(emm)),
                                       emm * Jpp * M1 - ihalf * (D(P(emm)) * M1), ihalf * P(emm),
                                       half * (D(emm) * M1), emm};
  };
  std::vector<CheckResult> out;
  const char* kept[4] = {"p", "0", "m", "mm"};
  auto printed_dj = vary(M, J, params(half));
  for (std::size_t k = 1; k < 5; ++k)
    out.push_back(check_matrix(std::string("gauge.printed_parameters.preserve_J_") + kept[k - 1], "gaugefixing", M,
                               printed_dj[k], GradedMatrix(4, 4)));
  auto eps = params(GradedPoly(1));
  auto dj = vary(M, J, eps);
  for (std::size_t k = 1; k < 5; ++k) {
    auto r = check_matrix(std::string("gauge.preserve_J_") + kept[k - 1], "gaugefixing", M, dj[k], GradedMatrix(4, 4));
    r.note = "eps_{++} with unit coefficient on eps_{--} D J_{++}";
    out.push_back(r);
  }
  out.push_back(check_matrix("gauge.eps0", "gaugefixing", M, eps[2], ihalf * P(emm)));
  GradedPoly three_i_half(Scalar(0, mpq_class(3, 2))), I(Scalar::i());
  GradedMatrix printed_pp = three_i_half * (P(emm) * Jpp) + D(emm) * D(Jpp) + I * (emm * P(Jpp)) + half * D(P(P(emm)));
  out.push_back(check_matrix("gauge.delta_J_pp", "deltaJpp", M, dj[0], printed_pp));
  GradedMatrix half_pp = three_i_half * (P(emm) * Jpp) + half * (D(emm) * D(Jpp)) + I * (emm * P(Jpp)) + half * D(P(P(emm)));
  out.push_back(check_matrix("gauge.delta_J_pp.half_DD", "deltaJpp", M, dj[0], half_pp));

  // M0 / M3 split
  const Field J10 = v.J[0].even, J01 = v.J[0].odd, e00 = v.eps[4].even, e11 = v.eps[4].odd;
  auto c = M.coords(dj[0]);
  auto p = [](Field f, int dx, bool D) { return jet(f, dx, 0, D); };
  GradedPoly h3(Scalar(0, mpq_class(3, 2)));
  GradedPoly tr1 = h3 * (p(e00, 1, false) * var(J10) - p(e11, 1, false) * var(J01)) +
                   half * (p(e00, 0, true) * p(J10, 0, true) + p(e11, 0, true) * p(J01, 0, true)) +
                   I * var(e00) * p(J10, 1, false) - I * var(e11) * p(J01, 1, false) + half * p(e00, 2, true);
  GradedPoly tr2 = h3 * (p(e00, 1, false) * var(J01) - p(e11, 1, false) * var(J10)) +
                   half * (p(e00, 0, true) * p(J01, 0, true) + p(e11, 0, true) * p(J10, 0, true)) +
                   I * var(e00) * p(J01, 1, false) - I * var(e11) * p(J10, 1, false) + half * p(e11, 2, true);
  out.push_back(check_poly("gauge.tr3_1", "tr3:1", c[0] - tr1));
  out.push_back(check_poly("gauge.tr3_2", "tr3:2", c[3] - tr2));

  // constant parameters
  auto constant = [&](const GradedPoly& x) {
    return map_generators(x, [&](const Generator& g) -> std::optional<GradedPoly> {
      if (g.kind == GenKind::Jet && (g.field == e00 || g.field == e11) &&
          (g.dplus_count || g.dminus_count || g.odd_plus || g.odd_minus))
        return GradedPoly();
      return std::nullopt;
    });
  };
  out.push_back(check_poly("gauge.constant_parameter", "tr3:1",
                           constant(c[0]) - (I * var(e00) * p(J10, 1, false) - I * var(e11) * p(J01, 1, false))));

  // scaling dimensions: [J] = 3/2, [eps] = -1, every term of delta J carries 3/2
  std::map<Field, int> dims{{J10, 3}, {J01, 3}, {e00, -2}, {e11, -2}};
  bool dims_ok = true;
  std::string bad;
  for (const GradedPoly* x : {&c[0], &c[3], &tr1, &tr2})
    for (const auto& [m, coef] : x->terms()) {
      auto d = scaling_dimension(m, dims);
      if (!d || *d != 3) {
        dims_ok = false;
        GradedPoly t;
        t.add_term(m, coef);
        bad = t.str();
      }
    }
  out.push_back({"gauge.scaling_dimension", "tr3:1", dims_ok, bad, ""});

  // components u, varepsilon
  const auto& u = UFields::get();
  GradedPoly th = theta(OddCoord::ThetaPlus);
  auto expand_c = [&](const GradedPoly& x) {
    GradedPoly y = substitute(x, J10, {LinearArg(), var(u.u10) + th * var(u.u00)});
    y = substitute(y, J01, {LinearArg(), var(u.u01) + th * var(u.u11)});
    y = substitute(y, e00, {LinearArg::of(u.v00), th * var(u.v10)});
    y = substitute(y, e11, {LinearArg::of(u.v11), th * var(u.v01)});
    return theta_sectors(y);
  };
  auto d10 = expand_c(c[0]), d01 = expand_c(c[3]);
  std::vector<OddCoord> s0, s1{OddCoord::ThetaPlus};
  auto printed = printed_u_transformations();
  out.push_back(check_poly("gauge.Utransf.u10", "Utransf2", d10[s0] - printed[0]));
  out.push_back(check_poly("gauge.Utransf.u00", "Utransf1", d10[s1] - printed[1]));
  out.push_back(check_poly("gauge.Utransf.u01", "Utransf2", d01[s0] - printed[2]));
  out.push_back(check_poly("gauge.Utransf.u11", "Utransf1", d01[s1] - printed[3]));
  std::map<Field, int> udims{{u.u00, 4}, {u.u11, 4}, {u.u10, 3}, {u.u01, 3}, {u.v00, -2}, {u.v11, -2}, {u.v10, -1}, {u.v01, -1}};
  bool udims_ok = true;
  const int expect[4] = {3, 4, 3, 4};
  for (std::size_t k = 0; k < 4; ++k)
    for (const auto& [m, coef] : printed[k].terms()) {
      auto d = scaling_dimension(m, udims);
      if (!d || *d != expect[k]) udims_ok = false;
    }
  out.push_back({"gauge.Utransf.scaling_dimension", "Utransf1", udims_ok, "", ""});
  return out;
}

}  // namespace z2sl
