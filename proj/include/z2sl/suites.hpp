#pragma once

// Verification suites and their reports, shared by the command-line tool and
// the acceptance runner.

#include "z2sl/backlund.hpp"
#include "z2sl/check.hpp"
#include "z2sl/lax.hpp"
#include "z2sl/virasoro.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace z2sl {

inline constexpr int kReportSchema = 1;

struct SuiteReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> data;  // derived tables, in insertion order
  double wall_ms = 0;
  bool ok() const { return all_pass(checks); }
};

SuiteReport run_algebra();
SuiteReport run_rep();
SuiteReport run_soldering();
SuiteReport run_lax(LaxVariant v);
SuiteReport run_solution();
SuiteReport run_backlund(BacklundVariant v);
SuiteReport run_virasoro(Sector s, int window);

struct SuiteOptions {
  std::optional<LaxVariant> lax;
  std::optional<BacklundVariant> backlund;
  Sector sector = Sector::RRR;
  int window = 5;
};

/// Suite names accepted by run_suites.
const std::vector<std::string>& suite_names();
/// Runs one named suite, or every suite for "all". Lax and Backlund run every
/// variant unless one is selected. Throws std::invalid_argument on an unknown name.
std::vector<SuiteReport> run_suites(std::string_view suite, const SuiteOptions& opt);

/// Deterministic report text; wall times only when `timing` is set.
std::string report_json(const std::vector<SuiteReport>& r, bool timing);
std::string report_text(const std::vector<SuiteReport>& r, bool timing);

}  // namespace z2sl
