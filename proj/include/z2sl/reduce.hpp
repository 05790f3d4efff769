#pragma once

// Jet rewrite systems: first-order odd rules D X -> R, second-order rules
// D+ D- X -> R (or D10 D01 X -> R), and component rules d+^a d-^b f -> R.
// Rules are prolonged by differentiating the right-hand side.

#include "z2sl/ring.hpp"

#include <string>
#include <vector>

namespace z2sl {

class RewriteSystem {
 public:
  /// D X -> rhs, for an odd derivative D acting on superfield X.
  RewriteSystem& first_order(Field x, Deriv d, GradedPoly rhs);
  /// D+ D- X -> rhs (D- applied first); D10 D01 X -> rhs on the alternative superspace.
  RewriteSystem& second_order(Field x, GradedPoly rhs);
  /// d+^a d-^b f -> rhs for a component field f.
  RewriteSystem& component(Field f, int a, int b, GradedPoly rhs);

  /// Rewrites to a fixed point. Throws std::runtime_error when the iteration
  /// cap is exceeded.
  GradedPoly reduce(const GradedPoly& p) const;

  bool empty() const { return rules_.empty(); }
  std::size_t size() const { return rules_.size(); }
  int max_iterations = 64;

 private:
  enum class Kind { First, Second, Component };
  struct Rule {
    Kind kind;
    Field field;
    Deriv d = Deriv::DPlus;
    int a = 0, b = 0;
    GradedPoly rhs;
  };
  std::optional<GradedPoly> rewrite(const Generator& g) const;
  std::vector<Rule> rules_;
};

/// Odd derivative sequence of a superfield jet in application order, with the
/// scalar that relates it to the canonical word.
struct OddWord {
  Scalar coef;
  std::vector<Deriv> seq;  // seq[0] applied first
};
OddWord odd_word(const Generator& jet_gen);

}  // namespace z2sl
