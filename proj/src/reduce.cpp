#include "z2sl/reduce.hpp"

#include <stdexcept>

namespace z2sl {

namespace {

Deriv plus_odd(const Field& f) { return f.space() == Superspace::Alternative ? Deriv::D10 : Deriv::DPlus; }
Deriv minus_odd(const Field& f) { return f.space() == Superspace::Alternative ? Deriv::D01 : Deriv::DMinus; }

int cross_sign(const Field& f) { return grade_sign(deriv_grade(plus_odd(f)), deriv_grade(minus_odd(f))); }

GradedPoly apply_seq(const std::vector<Deriv>& seq, std::size_t from, GradedPoly p) {
  for (std::size_t k = from; k < seq.size() && !p.is_zero(); ++k) p = apply_D(seq[k], p);
  return p;
}

/// Moves the first occurrence of `d` at or after position `start` to `start`;
/// returns false when absent.
bool bring_forward(std::vector<Deriv>& seq, std::size_t start, Deriv d, int sigma, Scalar& coef) {
  for (std::size_t k = start; k < seq.size(); ++k) {
    if (seq[k] != d) continue;
    if ((k - start) % 2 == 1) coef *= Scalar(sigma);
    seq.erase(seq.begin() + static_cast<long>(k));
    seq.insert(seq.begin() + static_cast<long>(start), d);
    return true;
  }
  return false;
}

}  // namespace

OddWord odd_word(const Generator& g) {
  if (g.kind != GenKind::Jet || g.field.is_component()) throw std::logic_error("odd_word: superfield jet expected");
  Deriv p = plus_odd(g.field), m = minus_odd(g.field);
  OddWord w{Scalar(1), {}};
  if (g.odd_minus) w.seq.push_back(m);
  if (g.odd_plus) w.seq.push_back(p);
  for (int k = 0; k < 2 * g.dminus_count; ++k) w.seq.push_back(m);
  for (int k = 0; k < 2 * g.dplus_count; ++k) w.seq.push_back(p);
  // d = -i D^2
  for (int k = 0; k < g.dplus_count + g.dminus_count; ++k) w.coef *= -Scalar::i();
  return w;
}

RewriteSystem& RewriteSystem::first_order(Field x, Deriv d, GradedPoly rhs) {
  if (!deriv_is_odd(d) || x.is_component()) throw std::invalid_argument("first_order: odd derivative of a superfield");
  rules_.push_back(Rule{Kind::First, x, d, 0, 0, std::move(rhs)});
  return *this;
}

RewriteSystem& RewriteSystem::second_order(Field x, GradedPoly rhs) {
  if (x.is_component()) throw std::invalid_argument("second_order: superfield expected");
  rules_.push_back(Rule{Kind::Second, x, Deriv::DPlus, 0, 0, std::move(rhs)});
  return *this;
}

RewriteSystem& RewriteSystem::component(Field f, int a, int b, GradedPoly rhs) {
  if (!f.is_component()) throw std::invalid_argument("component: component field expected");
  rules_.push_back(Rule{Kind::Component, f, Deriv::PartialPlus, a, b, std::move(rhs)});
  return *this;
}

std::optional<GradedPoly> RewriteSystem::rewrite(const Generator& g) const {
  if (g.kind != GenKind::Jet) return std::nullopt;
  for (const auto& r : rules_) {
    if (r.field != g.field) continue;
    if (r.kind == Kind::Component) {
      if (g.dplus_count < r.a || g.dminus_count < r.b) continue;
      GradedPoly v = r.rhs;
      for (int k = r.b; k < g.dminus_count; ++k) v = apply_D(Deriv::PartialMinus, v);
      for (int k = r.a; k < g.dplus_count; ++k) v = apply_D(Deriv::PartialPlus, v);
      return v;
    }
    OddWord w = odd_word(g);
    int sigma = cross_sign(g.field);
    if (r.kind == Kind::First) {
      if (!bring_forward(w.seq, 0, r.d, sigma, w.coef)) continue;
      return apply_seq(w.seq, 1, r.rhs) * w.coef;
    }
    std::vector<Deriv> seq = w.seq;
    Scalar coef = w.coef;
    if (!bring_forward(seq, 0, minus_odd(g.field), sigma, coef)) continue;
    if (!bring_forward(seq, 1, plus_odd(g.field), sigma, coef)) continue;
    return apply_seq(seq, 2, r.rhs) * coef;
  }
  return std::nullopt;
}

GradedPoly RewriteSystem::reduce(const GradedPoly& p) const {
  GradedPoly cur = p;
  auto fn = [this](const Generator& g) { return rewrite(g); };
  for (int it = 0; it < max_iterations; ++it) {
    GradedPoly next = map_generators(cur, fn);
    if (next == cur) return cur;
    cur = std::move(next);
  }
  throw std::runtime_error("RewriteSystem::reduce: no fixed point within the iteration cap");
}

}  // namespace z2sl
