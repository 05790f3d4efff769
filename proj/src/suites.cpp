#include "z2sl/suites.hpp"

#include "z2sl/representations.hpp"
#include "z2sl/soldering.hpp"
#include "z2sl/solutions.hpp"

#include <json.hpp>

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace z2sl {

namespace {

CheckResult from_axioms(std::string id, const AxiomReport& r) {
  CheckResult c{std::move(id), r.what, r.ok(), "", std::to_string(r.checked) + " checked"};
  for (std::size_t k = 0; k < r.failures.size() && k < 5; ++k) c.residual += (k ? "; " : "") + r.failures[k];
  return c;
}

template <class F>
SuiteReport timed(std::string name, F&& body) {
  SuiteReport r;
  r.name = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void append(std::vector<CheckResult>& out, const std::vector<CheckResult>& v) { out.insert(out.end(), v.begin(), v.end()); }

}  // namespace

SuiteReport run_algebra() {
  return timed("algebra", [](SuiteReport& r) {
    r.checks.push_back(from_axioms("z2_osp.symmetry", check_symmetry(z2_osp())));
    r.checks.push_back(from_axioms("z2_osp.jacobi", check_jacobi(z2_osp())));
    r.checks.push_back(from_axioms("z2_osp.dimensions", check_dimensions(z2_osp(), "K0")));
    r.checks.push_back(from_axioms("osp12.symmetry", check_symmetry(osp12())));
    r.checks.push_back(from_axioms("osp12.jacobi", check_jacobi(osp12())));
    r.checks.push_back(from_axioms("osp12.dimensions", check_dimensions(osp12(), "H")));
    r.checks.push_back(from_axioms("loop.axioms", check_loop_axioms(z2_osp(), 1)));
  });
}

SuiteReport run_rep() {
  return timed("rep", [](SuiteReport& r) {
    MatrixRep a = sixdim_from_action();
    r.checks.push_back(from_axioms("m_algebra", check_m_algebra()));
    r.checks.push_back(from_axioms("fundamental.homomorphism", check_homomorphism(osp12(), fundamental_osp())));
    r.checks.push_back(from_axioms("tensor.homomorphism", check_homomorphism(z2_osp(), tensor_realization())));
    r.checks.push_back(from_axioms("sixdim.homomorphism", check_homomorphism(z2_osp(), a)));
    r.checks.push_back(from_axioms("sixdim.printed", compare_reps(a, sixdim_printed(), "action table vs printed blocks")));
    r.checks.push_back(from_axioms("sixdim.tensor", compare_reps(a, sixdim_from_tensor(), "action table vs tensor action")));
    r.checks.push_back(from_axioms("sixdim.grading", check_grading_consistency(z2_osp(), a, sixdim_ket_grades())));
  });
}

SuiteReport run_soldering() {
  return timed("soldering", [](SuiteReport& r) {
    append(r.checks, verify_currents(MConvention::Graded));
    append(r.checks, verify_master_equation(MConvention::Graded));
    append(r.checks, verify_components());
    append(r.checks, verify_current_variation());
    append(r.checks, verify_gauge_reduction());
  });
}

SuiteReport run_lax(LaxVariant v) {
  return timed("lax", [v](SuiteReport& r) {
    r.params.emplace_back("variant", variant_name(v));
    r.checks = verify_lax(v);
    if (v != LaxVariant::Spectral) return;
    SpectralSearch s = search_lambda();
    r.data.emplace_back("single_field_candidates", std::to_string(s.candidates.size()));
    r.data.emplace_back("single_field_survivors", std::to_string(s.survivors.size()));
    for (const auto& a : s.ansatz) {
      std::string key = "ansatz." + orientation_name(a.orientation);
      if (!a.solution) {
        r.data.emplace_back(key, a.consistent ? "not unique" : "no solution");
        continue;
      }
      r.data.emplace_back(key + ".Lambda10", a.solution->l10.str());
      r.data.emplace_back(key + ".Lambda01", a.solution->l01.str());
    }
  });
}

SuiteReport run_solution() {
  return timed("solution", [](SuiteReport& r) {
    r.checks = verify_solutions();
    for (const auto& c : r.checks)
      if (c.id == "solution.eom11.rhs") r.data.emplace_back("phi11_rhs", c.pass ? "sinh" : "undetermined");
  });
}

SuiteReport run_backlund(BacklundVariant v) {
  return timed("backlund", [v](SuiteReport& r) {
    r.params.emplace_back("variant", variant_name(v));
    r.checks = verify_backlund(v);
  });
}

SuiteReport run_virasoro(Sector s, int window) {
  return timed("virasoro", [s, window](SuiteReport& r) {
    r.params.emplace_back("sector", sector_name(s));
    r.params.emplace_back("window", std::to_string(window));
    append(r.checks, verify_ansatz());
    append(r.checks, verify_current_algebra());
    append(r.checks, verify_mode_algebra(s, window));
    JacobiReport j = check_mode_jacobi(s, window);
    CheckResult c{"modes." + sector_name(s) + ".jacobi", "graded Jacobi on the index window", j.ok(), "",
                  std::to_string(j.triples) + " triples, degree bound " + std::to_string(j.degree_bound)};
    for (std::size_t k = 0; k < j.failures.size() && k < 5; ++k) c.residual += (k ? "; " : "") + j.failures[k];
    r.checks.push_back(c);
    AnsatzSolution a = solve_ansatz();
    for (const auto& [name, value] : a.values) r.data.emplace_back("coefficient." + name, value.str());
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"algebra", "rep", "soldering", "lax", "solution", "backlund", "virasoro", "all"};
  return n;
}

std::vector<SuiteReport> run_suites(std::string_view suite, const SuiteOptions& opt) {
  std::vector<SuiteReport> out;
  bool all = suite == "all";
  bool known = false;
  for (const auto& n : suite_names()) known = known || n == suite;
  if (!known) throw std::invalid_argument("unknown suite: " + std::string(suite));
  if (all || suite == "algebra") out.push_back(run_algebra());
  if (all || suite == "rep") out.push_back(run_rep());
  if (all || suite == "soldering") out.push_back(run_soldering());
  if (all || suite == "lax") {
    for (LaxVariant v : {LaxVariant::Superspace, LaxVariant::Alternative, LaxVariant::Spectral})
      if (!opt.lax || *opt.lax == v) out.push_back(run_lax(v));
  }
  if (all || suite == "solution") out.push_back(run_solution());
  if (all || suite == "backlund") {
    for (BacklundVariant v : {BacklundVariant::ToFree, BacklundVariant::Auto})
      if (!opt.backlund || *opt.backlund == v) out.push_back(run_backlund(v));
  }
  if (all || suite == "virasoro") out.push_back(run_virasoro(opt.sector, opt.window));
  return out;
}

std::string report_json(const std::vector<SuiteReport>& reports, bool timing) {
  using json = nlohmann::ordered_json;
  json root;
  root["schema"] = kReportSchema;
  bool ok = true;
  json suites = json::array();
  for (const auto& r : reports) {
    ok = ok && r.ok();
    json s;
    s["suite"] = r.name;
    for (const auto& [k, v] : r.params) s["params"][k] = v;
    s["status"] = r.ok() ? "pass" : "fail";
    std::size_t passed = 0;
    json checks = json::array();
    for (const auto& c : r.checks) {
      passed += c.pass ? 1 : 0;
      json j;
      j["id"] = c.id;
      j["anchor"] = c.anchor;
      j["status"] = c.pass ? "pass" : "fail";
      if (!c.residual.empty()) j["residual"] = c.residual;
      if (!c.note.empty()) j["note"] = c.note;
      checks.push_back(j);
    }
    s["passed"] = passed;
    s["total"] = r.checks.size();
    if (timing) s["wall_ms"] = r.wall_ms;
    s["checks"] = checks;
    for (const auto& [k, v] : r.data) s["data"][k] = v;
    suites.push_back(s);
  }
  root["status"] = ok ? "pass" : "fail";
  root["suites"] = suites;
  return root.dump(2) + "\n";
}

std::string report_text(const std::vector<SuiteReport>& reports, bool timing) {
  std::ostringstream os;
  for (const auto& r : reports) {
    std::size_t passed = 0;
    for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
    os << r.name;
    for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
    os << ": " << passed << "/" << r.checks.size() << " pass";
    if (timing) os << " (" << static_cast<long>(r.wall_ms) << " ms)";
    os << "\n";
    for (const auto& c : r.checks) {
      os << "  " << (c.pass ? "PASS " : "FAIL ") << c.id;
      if (!c.pass && !c.residual.empty()) os << ": " << c.residual;
      os << "\n";
    }
    for (const auto& [k, v] : r.data) os << "  " << k << " = " << v << "\n";
  }
  return os.str();
}

}  // namespace z2sl
