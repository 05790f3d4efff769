#include "z2sl/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace z2sl;

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the graded super-Liouville constructions"};
  app.require_subcommand(1);
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");

  std::string suite, variant, sector = "rrr", format = "json", out;
  int window = 5;
  bool timing = false;
  verify->add_option("suite", suite, "algebra | rep | soldering | lax | solution | backlund | virasoro | all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--variant", variant, "lax: superspace | alternative | spectral; backlund: free | auto");
  verify->add_option("--sector", sector, "virasoro sector: rrr | rnsns | nsnsr")->capture_default_str();
  verify->add_option("--window", window, "virasoro index window")->capture_default_str()->check(CLI::Range(2, 64));
  verify->add_option("--format", format, "json | text")->capture_default_str()->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out, "write the report to this path");
  verify->add_flag("--timing", timing, "include wall times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  SuiteOptions opt;
  opt.window = window;
  try {
    opt.sector = parse_sector(sector);
    if (!variant.empty()) {
      if (suite == "lax")
        opt.lax = parse_variant(variant);
      else if (suite == "backlund")
        opt.backlund = parse_backlund_variant(variant);
      else
        throw std::invalid_argument("--variant applies to lax and backlund only");
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n" << verify->help();
    return 2;
  }

  std::vector<SuiteReport> reports;
  try {
    reports = run_suites(suite, opt);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }

  std::string text = format == "json" ? report_json(reports, timing) : report_text(reports, timing);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  return ok ? 0 : 1;
}
