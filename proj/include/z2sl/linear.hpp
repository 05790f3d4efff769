#pragma once

// Exact linear systems over Gaussian rationals, and linear systems read off
// from polynomial identities in formal parameters.

#include "z2sl/ring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace z2sl {

struct LinearResult {
  bool consistent = true;
  std::size_t rank = 0;
  std::vector<std::optional<Scalar>> values;  // set for columns pinned by the system
};

/// Rows are [a_1 .. a_n | b] for a.x = b.
LinearResult row_reduce(std::vector<std::vector<Scalar>> rows, std::size_t ncols);

struct ParamSolution {
  bool consistent = false;
  bool unique = false;
  std::size_t equations = 0;
  std::map<std::string, Scalar> values;
};

/// Every p in `identities` must vanish; each monomial is affine in the named
/// parameters (at most one of them, to the first power).
ParamSolution solve_affine(const std::vector<GradedPoly>& identities, const std::vector<std::string>& unknowns);

}  // namespace z2sl
