#include "z2sl/solutions.hpp"

#include <stdexcept>

namespace z2sl {

namespace {

const Scalar I = Scalar::i();

CheckResult check_poly(std::string id, std::string anchor, const GradedPoly& r, std::string note = "") {
  return {std::move(id), std::move(anchor), r.is_zero(), r.is_zero() ? "" : r.str(), std::move(note)};
}

Deriv odd(bool plus) { return plus ? Deriv::DPlus : Deriv::DMinus; }
std::string sfx(bool plus) { return plus ? "+" : "-"; }

/// exp(f+ - f-) raised to the power n.
GradedPoly e_pow(int n) {
  const auto& cd = ChiralData::get();
  return exp_of(LinearArg({{cd.plus.f, n}, {cd.minus.f, -n}}));
}

GradedPoly cleared(const GradedPoly& p) { return clear_denominator(p, SolutionExpr::get().invU).first; }

/// Rational multiple of one undifferentiated field.
LinearArg as_linear(const GradedPoly& c) {
  if (c.size() != 1) throw std::invalid_argument("sixdim_exp: coefficient must be a multiple of one field");
  const auto& [m, s] = *c.terms().begin();
  if (m.size() != 1 || m[0].exp != 1 || m[0].gen.kind != GenKind::Jet) throw std::invalid_argument("sixdim_exp: coefficient must be a multiple of one field");
  const Generator& g = m[0].gen;
  if (g.dplus_count || g.dminus_count || g.odd_plus || g.odd_minus || !s.is_real())
    throw std::invalid_argument("sixdim_exp: coefficient must be a rational multiple of an undifferentiated field");
  return LinearArg::of(g.field, s.re());
}

bool has_nilpotent_square(const GradedPoly& p) {
  for (const auto& [m, c] : p.terms())
    for (const auto& f : m)
      if (f.exp >= 2 && f.gen.nilpotent()) return true;
  return false;
}

}  // namespace

const ChiralData& ChiralData::get() {
  static const ChiralData d = [] {
    auto side = [](bool plus) {
      Chirality c = plus ? Chirality::PlusOnly : Chirality::MinusOnly;
      std::string s = sfx(plus);
      return ChiralSide{declare_superfield("f" + s, kG00, c),     declare_superfield("g" + s, kG11, c),
                        declare_superfield("q" + s, kG00, c),     declare_superfield("r" + s, kG11, c),
                        declare_superfield("alpha" + s, kG10, c), declare_superfield("beta" + s, kG01, c)};
    };
    return ChiralData{side(true), side(false)};
  }();
  return d;
}

RewriteSystem chiral_constraints() {
  RewriteSystem rs;
  for (bool plus : {true, false}) {
    const ChiralSide& s = ChiralData::get().side(plus);
    Deriv d = odd(plus);
    int pm = plus ? 1 : -1;
    GradedPoly e = exp_of(LinearArg::of(s.f, -pm));
    GradedPoly da = e * cosh_of(LinearArg::of(s.g));
    GradedPoly db = GradedPoly(I * Scalar(-pm)) * e * sinh_of(LinearArg::of(s.g));
    rs.first_order(s.alpha, d, da);
    rs.first_order(s.beta, d, db);
    rs.first_order(s.q, d, GradedPoly(Scalar(-pm)) * (da * var(s.alpha) + db * var(s.beta)));
    rs.first_order(s.r, d, GradedPoly(I * Scalar(-2 * pm)) * db * var(s.alpha));
  }
  return rs;
}

const SolutionExpr& SolutionExpr::get() {
  static const SolutionExpr x = [] {
    const auto& cd = ChiralData::get();
    const ChiralSide &p = cd.plus, &m = cd.minus;
    SolutionExpr s;
    GradedPoly ap = var(p.alpha), am = var(m.alpha), bp = var(p.beta), bm = var(m.beta);
    GradedPoly qp = var(p.q), qm = var(m.q);
    s.Rp = var(p.r) + GradedPoly(I) * ap * bp;
    s.Rm = var(m.r) - GradedPoly(I) * am * bm;
    s.W00 = GradedPoly(1) + ap * am + bp * bm - qp * qm - s.Rp * s.Rm;
    s.W11 = GradedPoly(-I) * ap * bm + GradedPoly(I) * am * bp - qp * s.Rm - qm * s.Rp;
    s.Ap = ap + qp * am + GradedPoly(I) * s.Rp * bm;
    s.Am = am + qm * ap + GradedPoly(I) * s.Rm * bp;
    s.Bp = bp + qp * bm - GradedPoly(I) * s.Rp * am;
    s.Bm = bm + qm * bp - GradedPoly(I) * s.Rm * ap;
    auto d = [](bool plus, Field f) { return apply_D(odd(plus), var(f)); };
    s.D00 = d(true, p.alpha) * d(false, m.alpha) - d(true, p.beta) * d(false, m.beta);
    s.D11 = d(true, p.alpha) * d(false, m.beta) + d(false, m.alpha) * d(true, p.beta);
    LinearArg dg({{p.g, 1}, {m.g, -1}});
    s.C = cosh_of(dg);
    s.S = sinh_of(dg);
    s.E = e_pow(1);
    s.U = s.W00 * s.W00 - s.W11 * s.W11;
    s.invU = register_invertible("U", s.U);
    return s;
  }();
  return x;
}

GradedPoly solution_cosh() {
  const auto& s = SolutionExpr::get();
  return s.E * (s.W00 * s.C + s.W11 * s.S);
}

GradedPoly solution_sinh() {
  const auto& s = SolutionExpr::get();
  return -(s.E * (s.W00 * s.S + s.W11 * s.C));
}

std::vector<CheckResult> verify_constraint_consistency() {
  std::vector<CheckResult> out;
  RewriteSystem rs = chiral_constraints();
  for (bool plus : {true, false}) {
    const ChiralSide& s = ChiralData::get().side(plus);
    Deriv d = odd(plus), other = odd(!plus);
    for (Field f : {s.alpha, s.beta, s.q, s.r}) {
      GradedPoly twice = rs.reduce(apply_D(d, rs.reduce(apply_D(d, var(f)))));
      GradedPoly direct = rs.reduce(GradedPoly(I) * jet(f, plus ? 1 : 0, plus ? 0 : 1));
      out.push_back(check_poly("constraints.two_route." + f.name(), "D^2 = i d", twice - direct));
      GradedPoly chiral = apply_D(other, var(f)) + jet(f, plus ? 0 : 1, plus ? 1 : 0);
      out.push_back(check_poly("constraints.chirality." + f.name(), "opposite derivatives vanish", chiral));
    }
    GradedPoly sign(Scalar(plus ? 1 : -1));
    GradedPoly da = apply_D(d, var(s.alpha)), db = apply_D(d, var(s.beta));
    out.push_back(check_poly("constraints.q_rule" + sfx(plus), "q constraint",
                             rs.reduce(apply_D(d, var(s.q)) + sign * (da * var(s.alpha) + db * var(s.beta)))));
    out.push_back(check_poly("constraints.r_rule" + sfx(plus), "r constraint",
                             rs.reduce(apply_D(d, var(s.r)) + sign * GradedPoly(Scalar(2) * I) * db * var(s.alpha))));
  }
  return out;
}

std::vector<CheckResult> verify_dw_identities() {
  std::vector<CheckResult> out;
  const auto& x = SolutionExpr::get();
  const auto& cd = ChiralData::get();
  RewriteSystem rs = chiral_constraints();
  auto D = [&](bool plus, const GradedPoly& p) { return rs.reduce(apply_D(odd(plus), p)); };
  for (bool plus : {true, false}) {
    const ChiralSide& s = cd.side(plus);
    GradedPoly sign(Scalar(plus ? 1 : -1));
    const GradedPoly& A = plus ? x.Am : x.Ap;
    const GradedPoly& B = plus ? x.Bm : x.Bp;
    GradedPoly da = D(plus, var(s.alpha)), db = D(plus, var(s.beta));
    out.push_back(check_poly("dw.W00" + sfx(plus), "first derivative of W00",
                             D(plus, x.W00) - sign * (A * da - B * db)));
    out.push_back(check_poly("dw.W11" + sfx(plus), "first derivative of W11",
                             D(plus, x.W11) + sign * GradedPoly(I) * (B * da + A * db)));
  }
  GradedPoly pW00 = D(true, x.W00), mW00 = D(false, x.W00), pW11 = D(true, x.W11), mW11 = D(false, x.W11);
  GradedPoly D00 = rs.reduce(x.D00), D11 = rs.reduce(x.D11);
  GradedPoly sym = x.Ap * x.Am + x.Bp * x.Bm, anti = x.Am * x.Bp - x.Ap * x.Bm;
  out.push_back(check_poly("dw.bilinear_symmetric", "D+W00 D-W00 - D+W11 D-W11",
                           pW00 * mW00 - pW11 * mW11 - (sym * D00 + anti * D11)));
  out.push_back(check_poly("dw.bilinear_mixed", "D+W00 D-W11 - D+W11 D-W00",
                           pW00 * mW11 - pW11 * mW00 - (GradedPoly(-I) * sym * D11 + GradedPoly(I) * anti * D00)));
  GradedPoly ap = var(cd.plus.alpha), am = var(cd.minus.alpha), bp = var(cd.plus.beta), bm = var(cd.minus.beta);
  GradedPoly aa = ap * am + bp * bm, ab = am * bp - ap * bm;
  out.push_back(check_poly("dw.AB_symmetric", "A+A- + B+B-", sym - (aa * x.W00 + GradedPoly(I) * ab * x.W11)));
  out.push_back(check_poly("dw.AB_mixed", "A-B+ - A+B-", anti - (GradedPoly(-I) * aa * x.W11 + ab * x.W00)));
  GradedPoly one_minus = GradedPoly(1) - aa;
  out.push_back(check_poly("dw.DDW00", "D+D-W00", D(true, mW00) - (-(one_minus * D00) + ab * D11)));
  out.push_back(check_poly("dw.DDW11", "D+D-W11",
                           D(true, mW11) - GradedPoly(I) * (one_minus * D11 + ab * D00)));
  GradedPoly e = e_pow(-1);
  out.push_back(check_poly("dw.D00", "D00 closed form", D00 - e * x.C));
  out.push_back(check_poly("dw.D11", "D11 closed form", D11 - GradedPoly(-I) * e * x.S));
  return out;
}

namespace {

struct PhiDerivatives {
  GradedPoly chain00;     // D+D-Phi00 from Phi00 = -(f+ - f-) - log(U)/2
  GradedPoly expand00;    // expansion in W derivatives
  GradedPoly expand11;
  GradedPoly D00, D11;
};

PhiDerivatives phi_derivatives() {
  const auto& x = SolutionExpr::get();
  const auto& cd = ChiralData::get();
  RewriteSystem rs = chiral_constraints();
  auto D = [&](bool plus, const GradedPoly& p) { return rs.reduce(apply_D(odd(plus), p)); };
  GradedPoly inv = inv_of(x.invU), inv2 = inv_of(x.invU, 2);
  PhiDerivatives r;
  GradedPoly mPhi00 = D(false, var(cd.minus.f) - var(cd.plus.f)) - GradedPoly(Scalar::rational(1, 2)) * inv * D(false, x.U);
  r.chain00 = D(true, mPhi00);
  GradedPoly pW00 = D(true, x.W00), mW00 = D(false, x.W00), pW11 = D(true, x.W11), mW11 = D(false, x.W11);
  GradedPoly ddW00 = D(true, mW00), ddW11 = D(true, mW11);
  GradedPoly sq = x.W00 * x.W00 + x.W11 * x.W11, two = GradedPoly(2) * x.W00 * x.W11;
  GradedPoly sym = pW00 * mW00 - pW11 * mW11, mixed = pW00 * mW11 - mW00 * pW11;
  r.expand00 = inv2 * (sq * sym - two * mixed - x.U * (x.W00 * ddW00 - x.W11 * ddW11));
  r.expand11 = inv2 * (sq * mixed - two * sym - x.U * (x.W00 * ddW11 - x.W11 * ddW00));
  r.D00 = rs.reduce(x.D00);
  r.D11 = rs.reduce(x.D11);
  return r;
}

}  // namespace

std::vector<CheckResult> verify_solution() {
  std::vector<CheckResult> out;
  const auto& x = SolutionExpr::get();
  GradedPoly X = solution_cosh(), Y = solution_sinh();
  out.push_back(check_poly("solution.phiww", "e^{-2Phi00} = e^{2(f+ - f-)} U", X * X - Y * Y - e_pow(2) * x.U));
  PhiDerivatives d = phi_derivatives();
  GradedPoly inv = inv_of(x.invU);
  out.push_back(check_poly("solution.ddphi00.chain_vs_expansion", "D+D-Phi00 expansion", cleared(d.chain00 - d.expand00)));
  out.push_back(check_poly("solution.ddphi00.reduced", "U^2 D+D-Phi00 = U (W00 D00 + i W11 D11)",
                           cleared(d.chain00 - inv * (x.W00 * d.D00 + GradedPoly(I) * x.W11 * d.D11))));
  out.push_back(check_poly("solution.ddphi11.reduced", "U^2 D+D-Phi11 = -U (W11 D00 + i W00 D11)",
                           cleared(d.expand11 + inv * (x.W11 * d.D00 + GradedPoly(I) * x.W00 * d.D11))));
  // e^{Phi00} cosh Phi11 = X e^{2 Phi00} = X e^{-2(f+ - f-)} / U, likewise for sinh
  GradedPoly cosh_rhs = X * e_pow(-2) * inv, sinh_rhs = Y * e_pow(-2) * inv;
  out.push_back(check_poly("solution.eom00", "D+D-Phi00 = e^{Phi00} cosh Phi11", cleared(d.chain00 - cosh_rhs)));
  GradedPoly with_sinh = cleared(d.expand11 - sinh_rhs), with_cosh = cleared(d.expand11 - cosh_rhs);
  out.push_back(check_poly("solution.eom11", "D+D-Phi11 = e^{Phi00} sinh Phi11", with_sinh));
  CheckResult which{"solution.eom11.rhs", "sinh closes, cosh does not", !with_cosh.is_zero() && with_sinh.is_zero(), "",
                    "the right-hand side e^{Phi00} cosh Phi11 leaves a nonzero residual; e^{Phi00} sinh Phi11 closes"};
  if (!which.pass) which.residual = with_cosh.is_zero() ? "cosh right-hand side closes" : with_sinh.str();
  out.push_back(which);
  return out;
}

GradedMatrix sixdim_exp(const GradedPoly& c, std::string_view x) {
  static const MatrixRep rep = sixdim_from_action();
  const auto& kets = sixdim_ket_grades();
  const GradedMatrix& N = rep.at(std::string(x));
  GradedMatrix M = represent(AlgebraElement(&z2_osp(), x, c), rep, kets);
  GradedMatrix id = GradedMatrix::identity(6);
  GradedMatrix pow = N;
  for (int k = 1; k < 6; ++k) pow = pow * N;
  if (pow.is_zero()) {
    GradedMatrix out = id, term = id;
    for (int k = 1; k <= 6; ++k) {
      term = GradedPoly(Scalar::rational(1, k)) * (term * M);
      out += term;
    }
    return out;
  }
  GradedMatrix N2 = N * N;
  if (!(N2 * N == N)) throw std::invalid_argument("sixdim_exp: generator is neither nilpotent nor N^3 = N");
  if (!(M == c * N)) throw std::invalid_argument("sixdim_exp: ket-grade signs break the closed form");
  LinearArg a = as_linear(c);
  GradedPoly ch, sh;
  if (a.grade() == kG00) {
    ch = cosh_even(a);
    sh = sinh_even(a);
  } else if (a.grade() == kG11) {
    ch = cosh_of(a);
    sh = sinh_of(a);
  } else {
    throw std::invalid_argument("sixdim_exp: closed form needs a [00] or [11] coefficient");
  }
  return id + sh * N + (ch - GradedPoly(1)) * N2;
}

namespace {

std::vector<std::pair<Field, std::string>> factors(bool plus) {
  const ChiralSide& s = ChiralData::get().side(plus);
  std::string p = sfx(plus);
  return {{s.f, "K0"}, {s.g, "L0"}, {s.q, "K" + p}, {s.r, "L" + p}, {s.alpha, "P" + p}, {s.beta, "Q" + p}};
}

}  // namespace

GradedMatrix chiral_group_element(bool plus_side) {
  GradedMatrix out = GradedMatrix::identity(6);
  for (const auto& [f, x] : factors(plus_side)) out = out * sixdim_exp(var(f), x);
  return out;
}

GradedMatrix chiral_group_element_inverse(bool plus_side) {
  GradedMatrix out = GradedMatrix::identity(6);
  auto fs = factors(plus_side);
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) out = out * sixdim_exp(-var(it->first), it->second);
  return out;
}

std::vector<CheckResult> verify_lowest_weight_projection() {
  std::vector<CheckResult> out;
  Field phi00 = declare_superfield("Phi00", kG00), phi11 = declare_superfield("Phi11", kG11);
  static const MatrixRep rep = sixdim_from_action();
  const GradedMatrix &K0 = rep.at("K0"), &L0 = rep.at("L0");
  out.push_back({"lowest_weight.cartan_commute", "[K0, L0] = 0 on the kets", K0 * L0 == L0 * K0, "", ""});
  GradedMatrix e2phi = sixdim_exp(var(phi00), "K0") * sixdim_exp(var(phi11), "L0");
  GradedPoly em = exp_of(LinearArg::of(phi00, -1));
  out.push_back(check_poly("lowest_weight.00", "<00|e^{2Phi}|00>",
                           e2phi.at(kKet00, kKet00) - em * cosh_of(LinearArg::of(phi11))));
  out.push_back(check_poly("lowest_weight.11", "<11|e^{2Phi}|00>",
                           e2phi.at(kKet11, kKet00) + em * sinh_of(LinearArg::of(phi11))));
  GradedMatrix bp = chiral_group_element(true), bpi = chiral_group_element_inverse(true);
  GradedMatrix bm = chiral_group_element(false), bmi = chiral_group_element_inverse(false);
  auto unit = [](const GradedMatrix& m) { return (m - GradedMatrix::identity(6)).is_zero(); };
  out.push_back({"lowest_weight.inverse", "B B^{-1} = 1", unit(bp * bpi) && unit(bpi * bp) && unit(bm * bmi), "", ""});
  GradedMatrix rhs = bm * bpi;
  out.push_back(check_poly("lowest_weight.reconstruct.00", "<00|B- B+^{-1}|00>", rhs.at(kKet00, kKet00) - solution_cosh()));
  out.push_back(check_poly("lowest_weight.reconstruct.11", "<11|B- B+^{-1}|00>", rhs.at(kKet11, kKet00) + solution_sinh()));
  const auto& cd = ChiralData::get();
  auto vac = [&](const GradedPoly& p) {
    return set_zero(p, {cd.plus.f, cd.plus.g, cd.plus.q, cd.plus.r, cd.plus.alpha, cd.plus.beta, cd.minus.f, cd.minus.g,
                        cd.minus.q, cd.minus.r, cd.minus.alpha, cd.minus.beta});
  };
  const auto& x = SolutionExpr::get();
  out.push_back(check_poly("lowest_weight.identity.00", "trivial chiral data",
                           vac(rhs.at(kKet00, kKet00)) - GradedPoly(1)));
  out.push_back(check_poly("lowest_weight.identity.11", "trivial chiral data", vac(rhs.at(kKet11, kKet00))));
  out.push_back(check_poly("lowest_weight.identity.W", "W00 = 1, W11 = 0",
                           (vac(x.W00) - GradedPoly(1)) + vac(x.W11)));
  return out;
}

std::vector<CheckResult> verify_solutions() {
  std::vector<CheckResult> out;
  for (auto part : {verify_constraint_consistency, verify_dw_identities, verify_solution, verify_lowest_weight_projection}) {
    auto v = part();
    out.insert(out.end(), v.begin(), v.end());
  }
  const auto& x = SolutionExpr::get();
  auto grade_is = [](const GradedPoly& p, GradeVec g) { return p.is_homogeneous() && p.grade() == g; };
  bool graded = grade_is(x.W00, kG00) && grade_is(x.W11, kG11) && grade_is(x.Ap, kG10) && grade_is(x.Am, kG10) &&
                grade_is(x.Bp, kG01) && grade_is(x.Bm, kG01);
  out.push_back({"audit.gradings", "W00 [00], W11 [11], A [10], B [01]", graded, "", ""});
  PhiDerivatives d = phi_derivatives();
  bool clean = true;
  for (const GradedPoly* p : std::initializer_list<const GradedPoly*>{&x.W00, &x.W11, &x.Ap, &x.Am, &x.Bp, &x.Bm, &x.U, &d.chain00, &d.expand00, &d.expand11})
    clean = clean && !has_nilpotent_square(*p);
  out.push_back({"audit.nilpotency", "no squared odd generator in any normal form", clean, "", ""});
  return out;
}

}  // namespace z2sl
