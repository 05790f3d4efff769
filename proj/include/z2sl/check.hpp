#pragma once

#include <string>
#include <vector>

namespace z2sl {

/// One verified equation: pass flag and the residual normal form when failing.
struct CheckResult {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::string residual;
  std::string note;
};

inline bool all_pass(const std::vector<CheckResult>& v) {
  for (const auto& r : v)
    if (!r.pass) return false;
  return true;
}

}  // namespace z2sl
