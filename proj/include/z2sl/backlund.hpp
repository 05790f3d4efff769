#pragma once

// Backlund transformations of the graded super-Liouville equation: the map to
// the free equations and the auto-Backlund map, with the conservation laws
// built from the auxiliary superfields.

#include "z2sl/check.hpp"
#include "z2sl/reduce.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace z2sl {

enum class BacklundVariant { ToFree, Auto };
std::string variant_name(BacklundVariant v);
/// Accepts free, to-free, auto.
BacklundVariant parse_backlund_variant(std::string_view s);

/// V+- = (Phi00 +- tPhi00)/2, W+- = (Phi11 +- tPhi11)/2, Lambda [10], Gamma [01].
struct BacklundFields {
  Field Vp, Vm, Wp, Wm, Lambda, Gamma;
  static const BacklundFields& get();
};

/// Name of the invertible constant a.
inline constexpr const char* kBacklundConstant = "a";

struct BacklundRule {
  Field field;
  Deriv d;
  GradedPoly rhs;
};

struct BacklundSystem {
  BacklundVariant variant = BacklundVariant::ToFree;
  std::vector<BacklundRule> rules;  // D+ V+, D- V-, D+ W+, D- W-, D+- Lambda, D+- Gamma
  RewriteSystem rewrite;
  GradedPoly rhs(Field f, Deriv d) const;
};
BacklundSystem backlund_system(BacklundVariant v);

/// Phi00, Phi11 and the transformed pair as ring elements in V+-, W+-.
GradedPoly phi00();
GradedPoly phi11();
GradedPoly tilde_phi00();
GradedPoly tilde_phi11();

/// D+ D- p (D- applied first) through the rewrite table.
GradedPoly dd(const BacklundSystem& s, const GradedPoly& p);

std::vector<CheckResult> verify_backlund_implication(BacklundVariant v);
std::vector<CheckResult> verify_integrability_of_system(BacklundVariant v);
std::vector<CheckResult> verify_conservation(BacklundVariant v);
/// Implication, integrability, conservation and the structural audits.
std::vector<CheckResult> verify_backlund(BacklundVariant v);

}  // namespace z2sl
