#pragma once

// Zero-curvature formulations: the superspace Lax pair, the alternative pair
// on the (theta10, theta01) superspace and the loop-algebra pair with a
// spectral parameter.

#include "z2sl/algebra.hpp"
#include "z2sl/check.hpp"
#include "z2sl/representations.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace z2sl {

enum class LaxVariant { Superspace, Alternative, Spectral };
std::string variant_name(LaxVariant v);
/// Accepts superspace, alternative, spectral.
LaxVariant parse_variant(std::string_view s);

struct LaxFields {
  Field Phi00, Phi11;    // standard superspace
  Field tPhi00, tPhi11;  // alternative superspace
  static const LaxFields& get();
};

/// Name of the spectral parameter.
inline constexpr const char* kLambda = "lambda";
GradedPoly lambda_pow(int n);

struct LaxPair {
  LaxVariant variant = LaxVariant::Superspace;
  AlgebraElement first;   // L+, L10 or script L+
  AlgebraElement second;  // L-, L01 or script L-
};

/// Lambda10, Lambda01 in the spectral pair.
struct LambdaChoice {
  GradedPoly l10, l01;
  std::string label;
};

LaxPair build_lax(LaxVariant v, const std::optional<LambdaChoice>& lambda = std::nullopt);
/// Superspace:  D+ L- + D- L+ - {L+, L-}.
/// Alternative: D10 L01 - D01 L10 - [L10, L01].
/// Spectral:    d- L+ - d+ L- + [L+, L-].
AlgebraElement zero_curvature_residual(const LaxPair& lp);
/// Coefficients split by power of the spectral parameter.
std::map<int, AlgebraElement> by_lambda_power(const AlgebraElement& x);

/// e^{s ad Phi} X for X in {P+, P-, Q+, Q-}, Phi = (Phi00 K0 + Phi11 L0)/2, summed in
/// closed form after checking that ad Phi00 K0 acts by a scalar and (ad Phi11 L0)^2 does.
struct AdjointExp {
  AlgebraElement value;
  bool cartan_scalar = false;  // [Phi00 K0 / 2, X] = a X and the same on [L0, X]
  bool two_step = false;       // (ad Phi11 L0 / 2)^2 X = (Phi11 / 2)^2 X
};
AdjointExp adjoint_exp(Field phi00, Field phi11, int s, std::string_view x);

std::vector<CheckResult> verify_a_identities();
std::vector<CheckResult> verify_lax(LaxVariant v);

/// Which light-cone coordinate plays the role of x in the component equations.
enum class Orientation { XPlus, XMinus };
std::string orientation_name(Orientation o);

struct LambdaAnsatz {
  Orientation orientation = Orientation::XPlus;
  bool consistent = false;
  bool unique = false;
  std::optional<LambdaChoice> solution;
};

struct SpectralSearch {
  std::vector<std::string> candidates;  // single-field labels tried, per orientation
  std::vector<std::string> survivors;   // labels with vanishing on-shell residual
  std::vector<LambdaAnsatz> ansatz;     // linear combinations with hyperbolic weights
};
/// Tries Lambda10, Lambda01 in {psi10, psibar10, psi01, psibar01} times {1, -1, i, -i},
/// then solves the linear Ansatz over {1, cosh phi11, sinh phi11} x fermions.
SpectralSearch search_lambda();
/// Zero-curvature residual reduced with the component equations.
AlgebraElement spectral_on_shell_residual(const LambdaChoice& c, Orientation o);
/// Printed 6x6 matrices with Lambda10, Lambda01 substituted.
std::pair<GradedMatrix, GradedMatrix> printed_spectral_matrices(const LambdaChoice& c);
std::vector<CheckResult> verify_spectral_matrices();

}  // namespace z2sl
