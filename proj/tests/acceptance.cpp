#include "z2sl/backlund.hpp"
#include "z2sl/lax.hpp"
#include "z2sl/representations.hpp"
#include "z2sl/soldering.hpp"
#include "z2sl/solutions.hpp"
#include "z2sl/suites.hpp"
#include "z2sl/virasoro.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace z2sl;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string first_failures(const std::vector<CheckResult>& v, std::size_t n = 3) {
  std::string s;
  std::size_t k = 0, total = 0;
  for (const auto& c : v) {
    if (c.pass) continue;
    ++total;
    if (k++ < n) s += (s.empty() ? "" : ", ") + c.id;
  }
  return std::to_string(total) + " failing: " + s + (total > n ? ", ..." : "");
}

Outcome from_checks(const std::vector<CheckResult>& v, const std::string& what) {
  if (all_pass(v)) return {true, std::to_string(v.size()) + " " + what};
  return {false, first_failures(v)};
}

Outcome algebra_axioms() {
  AxiomReport gs = check_symmetry(z2_osp()), gj = check_jacobi(z2_osp());
  AxiomReport os = check_symmetry(osp12()), oj = check_jacobi(osp12());
  bool counts = gj.checked == 1000 && oj.checked == 125;
  bool ok = gs.ok() && gj.ok() && os.ok() && oj.ok() && counts;
  std::ostringstream d;
  d << gj.checked << " + " << oj.checked << " Jacobi triples, " << gs.checked + os.checked << " symmetry pairs";
  if (!ok) d << "; failures " << gs.failures.size() + gj.failures.size() + os.failures.size() + oj.failures.size();
  return {ok, d.str()};
}

Outcome representations() {
  MatrixRep a = sixdim_from_action();
  AxiomReport t = check_homomorphism(z2_osp(), tensor_realization()), s = check_homomorphism(z2_osp(), sixdim_printed());
  AxiomReport p = compare_reps(sixdim_printed(), a, "printed vs action table");
  AxiomReport x = compare_reps(sixdim_from_tensor(), a, "tensor action vs action table");
  bool ok = t.ok() && s.ok() && p.ok() && x.ok() && t.checked == 55 && s.checked == 55;
  return {ok, std::to_string(t.checked) + " + " + std::to_string(s.checked) + " structure-constant pairs, action table exact"};
}

Outcome soldering() {
  SuiteReport r = run_soldering();
  if (r.ok()) return {true, std::to_string(r.checks.size()) + " checks"};
  return {false, first_failures(r.checks) + " (printed current formulas differ from the derived currents)"};
}

Outcome lax() {
  std::vector<CheckResult> all;
  for (LaxVariant v : {LaxVariant::Superspace, LaxVariant::Alternative, LaxVariant::Spectral}) {
    auto r = verify_lax(v);
    all.insert(all.end(), r.begin(), r.end());
  }
  return from_checks(all, "checks over three variants");
}

Outcome solutions() {
  auto v = verify_solutions();
  Outcome o = from_checks(v, "identities");
  for (const auto& c : v)
    if (c.id == "solution.eom11.rhs" && c.pass) o.detail += ", final line closes with sinh";
  return o;
}

Outcome backlund() {
  std::vector<CheckResult> all;
  for (BacklundVariant v : {BacklundVariant::ToFree, BacklundVariant::Auto}) {
    auto r = verify_backlund(v);
    all.insert(all.end(), r.begin(), r.end());
  }
  return from_checks(all, "checks over two variants");
}

Outcome virasoro() {
  std::vector<CheckResult> all = verify_ansatz();
  auto ca = verify_current_algebra();
  all.insert(all.end(), ca.begin(), ca.end());
  std::size_t triples = 0;
  for (Sector s : {Sector::RRR, Sector::RNSNS, Sector::NSNSR}) {
    auto m = verify_mode_algebra(s, 5);
    all.insert(all.end(), m.begin(), m.end());
    JacobiReport j = check_mode_jacobi(s, 5);
    triples += j.triples;
    all.push_back({"jacobi." + sector_name(s), "", j.ok(), "", ""});
  }
  Outcome o = from_checks(all, "checks");
  if (o.pass) o.detail += ", " + std::to_string(triples) + " Jacobi triples at window 5";
  return o;
}

// ---- randomized ring properties -------------------------------------------

struct RandomRing {
  std::mt19937 rng{20240611};
  Field f00 = declare_superfield("acc00", kG00), g00 = declare_superfield("accb00", kG00);
  Field f10 = declare_superfield("acc10", kG10), g10 = declare_superfield("accb10", kG10);
  Field f01 = declare_superfield("acc01", kG01), f11 = declare_superfield("acc11", kG11);
  Field g11 = declare_superfield("accb11", kG11);
  std::vector<GradedPoly> gens;

  RandomRing() {
    for (Field f : {f00, g00, f10, g10, f01, f11, g11}) {
      gens.push_back(jet(f));
      gens.push_back(jet(f, 0, 0, true));
      gens.push_back(jet(f, 0, 0, false, true));
      gens.push_back(jet(f, 1, 0));
    }
    gens.push_back(theta(OddCoord::ThetaPlus));
    gens.push_back(theta(OddCoord::ThetaMinus));
    gens.push_back(param("acc_a", -1));
    gens.push_back(exp_of(LinearArg::of(f00, 2)));
    gens.push_back(cosh_of(LinearArg::of(f11)));
    gens.push_back(sinh_of(LinearArg({{f11, 1}, {g11, -1}})));
  }
  int coef() { return std::uniform_int_distribution<int>(-4, 4)(rng); }
  GradedPoly monomial() {
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    int n = std::uniform_int_distribution<int>(1, 3)(rng);
    GradedPoly p(1);
    for (int k = 0; k < n; ++k) p *= gens[pick(rng)];
    return p;
  }
  /// Nonzero homogeneous polynomial with up to three terms.
  GradedPoly homogeneous() {
    GradedPoly p;
    while (p.is_zero()) p = monomial() * Scalar(coef() == 0 ? 1 : coef());
    GradeVec g = p.grade();
    for (int k = 0, added = 0; k < 40 && added < 2; ++k) {
      GradedPoly m = monomial();
      if (m.is_zero() || m.grade() != g) continue;
      p += m * Scalar(coef());
      ++added;
    }
    return p.is_zero() ? homogeneous() : p;
  }
  LinearArg arg11() { return LinearArg({{f11, coef()}, {g11, coef()}}); }
  LinearArg arg00() { return LinearArg({{f00, coef()}, {g00, coef()}}); }
};

double numeric(const LinearArg& a, const std::map<std::string, double>& v) {
  double s = 0;
  for (const auto& [f, q] : a.terms()) s += q.get_d() * v.at(f.name());
  return s;
}

Outcome ring_properties() {
  RandomRing R;
  const int n = 500;
  std::size_t fails = 0;
  std::vector<std::string> failed;
  auto run = [&](const std::string& name, const std::function<bool()>& one) {
    std::size_t before = fails;
    for (int k = 0; k < n; ++k)
      if (!one()) ++fails;
    if (fails != before) failed.push_back(name);
  };
  run("commutativity", [&] {
    GradedPoly p = R.homogeneous(), q = R.homogeneous();
    return p * q == Scalar(grade_sign(p.grade(), q.grade())) * (q * p);
  });
  run("leibniz", [&] {
    GradedPoly p = R.homogeneous(), q = R.homogeneous();
    for (Deriv d : {Deriv::DPlus, Deriv::DMinus, Deriv::PartialPlus, Deriv::PartialMinus})
      if (apply_D(d, p * q) != apply_D(d, p) * q + Scalar(grade_sign(deriv_grade(d), p.grade())) * p * apply_D(d, q))
        return false;
    return true;
  });
  run("anticommutator", [&] {
    GradedPoly p = R.homogeneous();
    return (apply_chain({Deriv::DPlus, Deriv::DMinus}, p) + apply_chain({Deriv::DMinus, Deriv::DPlus}, p)).is_zero();
  });
  run("square", [&] {
    GradedPoly p = R.homogeneous();
    return apply_chain({Deriv::DPlus, Deriv::DPlus}, p) == Scalar::i() * apply_D(Deriv::PartialPlus, p) &&
           apply_chain({Deriv::DMinus, Deriv::DMinus}, p) == Scalar::i() * apply_D(Deriv::PartialMinus, p);
  });

  // product-to-sum: numeric oracle first, symbolic identities only once it agrees
  struct Pair {
    LinearArg x, y;
    bool odd;
  };
  std::vector<Pair> pairs;
  for (int k = 0; k < n; ++k) {
    bool odd = k % 2 == 0;
    pairs.push_back(odd ? Pair{R.arg11(), R.arg11(), true} : Pair{R.arg00(), R.arg00(), false});
  }
  auto ch = [](const LinearArg& a, bool odd) { return odd ? cosh_of(a) : cosh_even(a); };
  auto sh = [](const LinearArg& a, bool odd) { return odd ? sinh_of(a) : sinh_even(a); };
  std::uniform_real_distribution<double> val(-1.5, 1.5);
  bool oracle = true;
  for (const auto& [x, y, odd] : pairs) {
    std::map<std::string, double> v{{"acc00", val(R.rng)}, {"accb00", val(R.rng)}, {"acc11", val(R.rng)}, {"accb11", val(R.rng)}};
    double a = numeric(x, v), b = numeric(y, v);
    GradedPoly p = ch(x, odd) * ch(y, odd) + sh(x, odd) * sh(y, odd) - Scalar(2) * sh(x, odd) * ch(y, odd);
    double expect = std::cosh(a) * std::cosh(b) + std::sinh(a) * std::sinh(b) - 2 * std::sinh(a) * std::cosh(b);
    double scale = 1 + 4 * std::cosh(a) * std::cosh(b);
    if (std::abs(evaluate(p, v) - expect) > 1e-12 * scale) oracle = false;
  }
  if (!oracle) failed.push_back("hyperbolic numeric oracle");
  if (oracle) {
    run("product_to_sum", [&, k = std::size_t{0}]() mutable {
      const auto& [x, y, odd] = pairs[k++];
      GradedPoly half(Scalar::rational(1, 2));
      bool ok = ch(x, odd) * ch(y, odd) == half * (ch(x + y, odd) + ch(x - y, odd));
      ok = ok && sh(x, odd) * sh(y, odd) == half * (ch(x + y, odd) - ch(x - y, odd));
      ok = ok && sh(x, odd) * ch(y, odd) == half * (sh(x + y, odd) + sh(x - y, odd));
      return ok;
    });
  }
  if (failed.empty()) return {true, "5 x 500 randomized cases, numeric oracle agrees"};
  std::string d = std::to_string(fails) + " failing cases in:";
  for (const auto& f : failed) d += " " + f;
  return {false, d};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "algebra axioms", 5, algebra_axioms},
      {2, "representation faithfulness", 5, representations},
      {3, "soldering", 60, soldering},
      {4, "zero curvature", 120, lax},
      {5, "solution verification", 120, solutions},
      {6, "Backlund transformations", 60, backlund},
      {7, "graded super-Virasoro", 120, virasoro},
      {8, "ring kernel properties", 30, ring_properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.pass && s > c.budget_s) o = {false, o.detail + "; over the time budget"};
    failures += o.pass ? 0 : 1;
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << s;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name << ": " << o.detail << " (" << time.str()
              << " s, budget " << c.budget_s << " s)" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
