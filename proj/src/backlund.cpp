#include "z2sl/backlund.hpp"

#include <cctype>
#include <stdexcept>

namespace z2sl {

namespace {

CheckResult check_poly(std::string id, std::string anchor, const GradedPoly& r, std::string note = "") {
  return {std::move(id), std::move(anchor), r.is_zero(), r.is_zero() ? "" : r.str(), std::move(note)};
}

LinearArg lin(Field f) { return LinearArg::of(f); }
GradedPoly ex(Field f) { return exp_of(lin(f)); }
GradedPoly half() { return GradedPoly(Scalar::rational(1, 2)); }
GradedPoly a_pow(int n) { return param(kBacklundConstant, n); }

std::string dname(Deriv d) { return d == Deriv::DPlus ? "D+" : "D-"; }

}  // namespace

std::string variant_name(BacklundVariant v) { return v == BacklundVariant::ToFree ? "free" : "auto"; }

BacklundVariant parse_backlund_variant(std::string_view s) {
  std::string l;
  for (char c : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (l == "free" || l == "to-free") return BacklundVariant::ToFree;
  if (l == "auto") return BacklundVariant::Auto;
  throw std::invalid_argument("unknown Backlund variant: " + std::string(s));
}

const BacklundFields& BacklundFields::get() {
  static const BacklundFields f{declare_superfield("V+", kG00), declare_superfield("V-", kG00),
                                declare_superfield("W+", kG11), declare_superfield("W-", kG11),
                                declare_superfield("Lambda", kG10), declare_superfield("Gamma", kG01)};
  return f;
}

GradedPoly BacklundSystem::rhs(Field f, Deriv d) const {
  for (const auto& r : rules)
    if (r.field == f && r.d == d) return r.rhs;
  throw std::invalid_argument("BacklundSystem: no rule for " + dname(d) + " " + f.name());
}

BacklundSystem backlund_system(BacklundVariant v) {
  const auto& b = BacklundFields::get();
  GradedPoly L = var(b.Lambda), G = var(b.Gamma);
  GradedPoly chp = cosh_of(lin(b.Wp)), shp = sinh_of(lin(b.Wp)), chm = cosh_of(lin(b.Wm)), shm = sinh_of(lin(b.Wm));
  GradedPoly minus_inv_a = -a_pow(-1);
  BacklundSystem s;
  s.variant = v;
  if (v == BacklundVariant::ToFree) {
    GradedPoly em = ex(b.Vm), ep = ex(b.Vp);
    GradedPoly ha = half() * a_pow(1);
    s.rules = {{b.Vp, Deriv::DPlus, ha * em * (L * chm + G * shm)},
               {b.Vm, Deriv::DMinus, half() * ep * (L * chp + G * shp)},
               {b.Wp, Deriv::DPlus, ha * em * (L * shm + G * chm)},
               {b.Wm, Deriv::DMinus, half() * ep * (L * shp + G * chp)},
               {b.Lambda, Deriv::DPlus, em * chm},
               {b.Lambda, Deriv::DMinus, minus_inv_a * ep * chp},
               {b.Gamma, Deriv::DPlus, em * shm},
               {b.Gamma, Deriv::DMinus, minus_inv_a * ep * shp}};
  } else {
    GradedPoly ep = ex(b.Vp), cv = cosh_even(lin(b.Vm)), sv = sinh_even(lin(b.Vm));
    GradedPoly a = a_pow(1);
    s.rules = {{b.Vp, Deriv::DPlus, a * (L * cv * chm + G * sv * shm)},
               {b.Vm, Deriv::DMinus, ep * (L * chp + G * shp)},
               {b.Wp, Deriv::DPlus, a * (L * sv * shm + G * cv * chm)},
               {b.Wm, Deriv::DMinus, ep * (L * shp + G * chp)},
               {b.Lambda, Deriv::DPlus, sv * chm},
               {b.Lambda, Deriv::DMinus, minus_inv_a * ep * chp},
               {b.Gamma, Deriv::DPlus, cv * shm},
               {b.Gamma, Deriv::DMinus, minus_inv_a * ep * shp}};
  }
  for (const auto& r : s.rules) s.rewrite.first_order(r.field, r.d, r.rhs);
  return s;
}

GradedPoly phi00() {
  const auto& b = BacklundFields::get();
  return var(b.Vp) + var(b.Vm);
}
GradedPoly phi11() {
  const auto& b = BacklundFields::get();
  return var(b.Wp) + var(b.Wm);
}
GradedPoly tilde_phi00() {
  const auto& b = BacklundFields::get();
  return var(b.Vp) - var(b.Vm);
}
GradedPoly tilde_phi11() {
  const auto& b = BacklundFields::get();
  return var(b.Wp) - var(b.Wm);
}

GradedPoly dd(const BacklundSystem& s, const GradedPoly& p) {
  const RewriteSystem& rs = s.rewrite;
  return rs.reduce(apply_D(Deriv::DPlus, rs.reduce(apply_D(Deriv::DMinus, p))));
}

namespace {

/// e^{p00} cosh p11 and e^{p00} sinh p11 for p00 = V+ + s V-, p11 = W+ + s W-.
std::pair<GradedPoly, GradedPoly> liouville_rhs(int s) {
  const auto& b = BacklundFields::get();
  LinearArg p00({{b.Vp, 1}, {b.Vm, s}}), p11({{b.Wp, 1}, {b.Wm, s}});
  GradedPoly e = exp_of(p00);
  return {e * cosh_of(p11), e * sinh_of(p11)};
}

}  // namespace

std::vector<CheckResult> verify_backlund_implication(BacklundVariant v) {
  std::vector<CheckResult> out;
  const auto& b = BacklundFields::get();
  BacklundSystem s = backlund_system(v);
  std::string pre = "backlund." + variant_name(v) + ".";
  auto [ch, sh] = liouville_rhs(1);
  out.push_back(check_poly(pre + "phi00_on_shell", "D+D-Phi00 = e^{Phi00} cosh Phi11", dd(s, phi00()) - ch));
  out.push_back(check_poly(pre + "phi11_on_shell", "D+D-Phi11 = e^{Phi00} sinh Phi11", dd(s, phi11()) - sh));
  if (v == BacklundVariant::ToFree) {
    GradedPoly two(2);
    out.push_back(check_poly(pre + "ddV+", "2 D+D-V+ = e^{Phi00} cosh Phi11", two * dd(s, var(b.Vp)) - ch));
    out.push_back(check_poly(pre + "ddV-", "2 D+D-V- = e^{Phi00} cosh Phi11", two * dd(s, var(b.Vm)) - ch));
    out.push_back(check_poly(pre + "ddW+", "2 D+D-W+ = e^{Phi00} sinh Phi11", two * dd(s, var(b.Wp)) - sh));
    out.push_back(check_poly(pre + "ddW-", "2 D+D-W- = e^{Phi00} sinh Phi11", two * dd(s, var(b.Wm)) - sh));
    out.push_back(check_poly(pre + "free00", "D+D- tPhi00 = 0", dd(s, tilde_phi00())));
    out.push_back(check_poly(pre + "free11", "D+D- tPhi11 = 0", dd(s, tilde_phi11())));
    GradedPoly slice = set_zero(dd(s, var(b.Wm)), {b.Lambda, b.Gamma, b.Wp, b.Wm});
    out.push_back(check_poly(pre + "slice", "D+D-W- at Lambda = Gamma = W = 0", slice));
  } else {
    auto [tch, tsh] = liouville_rhs(-1);
    out.push_back(check_poly(pre + "tilde00", "D+D- tPhi00 = e^{tPhi00} cosh tPhi11", dd(s, tilde_phi00()) - tch));
    out.push_back(check_poly(pre + "tilde11", "D+D- tPhi11 = e^{tPhi00} sinh tPhi11", dd(s, tilde_phi11()) - tsh));
  }
  return out;
}

std::vector<CheckResult> verify_integrability_of_system(BacklundVariant v) {
  std::vector<CheckResult> out;
  const auto& b = BacklundFields::get();
  BacklundSystem s = backlund_system(v);
  const RewriteSystem& rs = s.rewrite;
  std::string pre = "integrability." + variant_name(v) + ".";
  auto D = [&](Deriv d, const GradedPoly& p) { return rs.reduce(apply_D(d, p)); };
  for (Field f : {b.Vp, b.Vm, b.Wp, b.Wm, b.Lambda, b.Gamma}) {
    GradedPoly x = var(f);
    out.push_back(check_poly(pre + "anticommutator." + f.name(), "D+(D- X) + D-(D+ X) = 0",
                             D(Deriv::DPlus, D(Deriv::DMinus, x)) + D(Deriv::DMinus, D(Deriv::DPlus, x))));
    GradedPoly sq = D(Deriv::DPlus, D(Deriv::DPlus, x)) - rs.reduce(GradedPoly(Scalar::i()) * jet(f, 1, 0)) +
                    D(Deriv::DMinus, D(Deriv::DMinus, x)) - rs.reduce(GradedPoly(Scalar::i()) * jet(f, 0, 1));
    out.push_back(check_poly(pre + "square." + f.name(), "D+-(D+- X) = i d+- X", sq));
  }
  GradedPoly a = a_pow(1);
  out.push_back(check_poly(pre + "constant", "D+- a = 0", apply_D(Deriv::DPlus, a) + apply_D(Deriv::DMinus, a) +
                                                             (a * a_pow(-1) - GradedPoly(1))));
  return out;
}

std::vector<CheckResult> verify_conservation(BacklundVariant v) {
  std::vector<CheckResult> out;
  const auto& b = BacklundFields::get();
  BacklundSystem s = backlund_system(v);
  const RewriteSystem& rs = s.rewrite;
  std::string pre = "conservation." + variant_name(v) + ".";
  auto D = [&](Deriv d, const GradedPoly& p) { return rs.reduce(apply_D(d, p)); };
  GradedPoly L = var(b.Lambda), G = var(b.Gamma);
  struct Currents {
    GradedPoly j00, j11, j10, j01;
  };
  auto currents = [&](bool plus) {
    Deriv other = plus ? Deriv::DMinus : Deriv::DPlus;
    GradedPoly sign(Scalar(plus ? 1 : -1));
    Currents c;
    c.j00 = D(other, L);
    c.j11 = D(other, G);
    c.j10 = sign * (c.j00 * L - c.j11 * G);
    c.j01 = sign * (c.j00 * G - c.j11 * L);
    return c;
  };
  Currents p = currents(true), m = currents(false);
  for (bool plus : {true, false}) {
    Deriv d = plus ? Deriv::DPlus : Deriv::DMinus;
    const Currents& c = plus ? p : m;
    std::string side = plus ? "+" : "-";
    GradedPoly d00 = D(d, c.j00), d11 = D(d, c.j11);
    out.push_back(check_poly(pre + "auxiliary_lambda" + side, "(D J00) Lambda - (D J11) Gamma", d00 * L - d11 * G));
    out.push_back(check_poly(pre + "auxiliary_gamma" + side, "(D J00) Gamma - (D J11) Lambda", d00 * G - d11 * L));
  }
  auto law = [&](const std::string& alpha, const GradedPoly& jp, const GradedPoly& jm) {
    out.push_back(check_poly(pre + alpha, "D+ J+ + D- J- = 0", D(Deriv::DPlus, jp) + D(Deriv::DMinus, jm)));
  };
  law("00", p.j00, m.j00);
  law("11", p.j11, m.j11);
  law("10", p.j10, m.j10);
  law("01", p.j01, m.j01);
  return out;
}

std::vector<CheckResult> verify_backlund(BacklundVariant v) {
  std::vector<CheckResult> out;
  for (auto part : {verify_backlund_implication, verify_integrability_of_system, verify_conservation}) {
    auto r = part(v);
    out.insert(out.end(), r.begin(), r.end());
  }
  const auto& b = BacklundFields::get();
  BacklundSystem s = backlund_system(v);
  std::string pre = "audit." + variant_name(v) + ".";
  bool graded = true;
  for (const auto& r : s.rules)
    graded = graded && r.rhs.is_homogeneous() && r.rhs.grade() == r.field.grade() + deriv_grade(r.d);
  out.push_back({pre + "gradings", "every relation is homogeneous", graded, "", ""});
  auto powers = param_powers(s.rhs(b.Lambda, Deriv::DMinus), kBacklundConstant);
  bool inv_a = powers.size() == 1 && powers.count(-1) == 1;
  auto plus_powers = param_powers(s.rhs(b.Lambda, Deriv::DPlus), kBacklundConstant);
  inv_a = inv_a && plus_powers.size() == 1 && plus_powers.count(0) == 1;
  if (inv_a) {
    const auto& b_ = BacklundFields::get();
    inv_a = (powers.at(-1) + exp_of(lin(b_.Vp)) * cosh_of(lin(b_.Wp))).is_zero();
  }
  out.push_back({pre + "inverse_a", "D- Lambda carries exactly -1/a", inv_a, "", ""});
  if (v == BacklundVariant::ToFree) {
    bool closed = true;
    for (const auto& r : s.rules) {
      if (r.field != b.Gamma && r.field != b.Wp && r.field != b.Wm) continue;
      closed = closed && set_zero(r.rhs, {b.Gamma, b.Wp, b.Wm}).is_zero();
    }
    BacklundSystem sub;
    for (const auto& r : s.rules) {
      if (r.field != b.Vp && r.field != b.Vm && r.field != b.Lambda) continue;
      sub.rules.push_back({r.field, r.d, set_zero(r.rhs, {b.Gamma, b.Wp, b.Wm})});
      sub.rewrite.first_order(r.field, r.d, sub.rules.back().rhs);
    }
    GradedPoly L = var(b.Lambda);
    GradedPoly anti = sub.rewrite.reduce(apply_D(Deriv::DPlus, sub.rewrite.reduce(apply_D(Deriv::DMinus, L)))) +
                      sub.rewrite.reduce(apply_D(Deriv::DMinus, sub.rewrite.reduce(apply_D(Deriv::DPlus, L))));
    out.push_back({pre + "ungraded_reduction", "Gamma = W = 0 closes", closed && anti.is_zero(), anti.is_zero() ? "" : anti.str(), ""});
  }
  return out;
}

}  // namespace z2sl
