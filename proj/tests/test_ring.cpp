#include "doctest.h"
#include "z2sl/ring.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace z2sl;

namespace {

struct Atoms {
  Field a00 = declare_superfield("ra00", kG00);
  Field b00 = declare_superfield("rb00", kG00);
  Field a10 = declare_superfield("ra10", kG10);
  Field b10 = declare_superfield("rb10", kG10);
  Field a01 = declare_superfield("ra01", kG01);
  Field a11 = declare_superfield("ra11", kG11);
  Field b11 = declare_superfield("rb11", kG11);
  std::vector<GradedPoly> gens() const {
    return {jet(a00), jet(b00), jet(a10), jet(b10), jet(a01), jet(a11), jet(b11),
            jet(a00, 0, 0, true), jet(a10, 0, 0, false, true), jet(a11, 1, 0), theta(OddCoord::ThetaPlus),
            theta(OddCoord::ThetaMinus)};
  }
};

const Generator& only_gen(const GradedPoly& p) { return p.terms().begin()->first.front().gen; }

// Reference product of single generators: bubble-sort the flat word, one
// transposition at a time, then collapse repeats.
GradedPoly reference_product(const std::vector<Generator>& word) {
  std::vector<Generator> w = word;
  int sign = 1;
  for (std::size_t pass = 0; pass < w.size(); ++pass)
    for (std::size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k + 1] < w[k]) {
        sign *= grade_sign(w[k].grade, w[k + 1].grade);
        std::swap(w[k], w[k + 1]);
      }
  Monomial m;
  for (const auto& g : w) {
    if (!m.empty() && m.back().gen == g) {
      if (g.nilpotent()) return GradedPoly();
      ++m.back().exp;
    } else {
      m.push_back(Factor{g, 1});
    }
  }
  return GradedPoly::from_monomial(m, Scalar(sign));
}

}  // namespace

TEST_CASE("sign rule against bubble-sort reference") {
  Atoms at;
  auto gens = at.gens();
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1), len(1, 6);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Generator> word;
    GradedPoly prod(1);
    std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k) {
      const GradedPoly& g = gens[pick(rng)];
      word.push_back(only_gen(g));
      prod = prod * g;
    }
    CHECK(prod == reference_product(word));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  Atoms at;
  auto gens = at.gens();
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto rand_poly = [&] {
    GradedPoly p;
    for (int k = 0; k < 3; ++k) p += gens[pick(rng)] * gens[pick(rng)] * Scalar(coef(rng));
    return p + GradedPoly(coef(rng));
  };
  for (int k = 0; k < 100; ++k) {
    GradedPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("graded commutativity and nilpotency") {
  Atoms at;
  GradedPoly p = jet(at.a10), q = jet(at.b10), r = jet(at.a01), s = jet(at.a11);
  CHECK(p * p == GradedPoly());
  CHECK(p * q == -(q * p));
  CHECK(p * r == r * p);
  CHECK(p * s == -(s * p));
  CHECK(r * s == -(s * r));
  CHECK(!(s * s).is_zero());
  CHECK(s * jet(at.b11) == jet(at.b11) * s);
}

TEST_CASE("odd derivatives square to translations") {
  Atoms at;
  GradedPoly phi = jet(at.a00);
  CHECK(apply_chain({Deriv::DPlus, Deriv::DPlus}, phi) == Scalar::i() * jet(at.a00, 1, 0));
  CHECK(apply_chain({Deriv::DMinus, Deriv::DMinus}, phi) == Scalar::i() * jet(at.a00, 0, 1));
  CHECK(apply_chain({Deriv::DPlus, Deriv::DMinus}, phi) + apply_chain({Deriv::DMinus, Deriv::DPlus}, phi) ==
        GradedPoly());
  Field alt = declare_superfield("ralt", kG00, Chirality::Both, Superspace::Alternative);
  CHECK(apply_chain({Deriv::D10, Deriv::D01}, jet(alt)) == apply_chain({Deriv::D01, Deriv::D10}, jet(alt)));
  CHECK(apply_chain({Deriv::D01, Deriv::D01}, jet(alt)) == Scalar::i() * jet(alt, 0, 1));
  CHECK_THROWS(apply_D(Deriv::D10, phi));
  // on a general product
  GradedPoly x = jet(at.a10) * jet(at.a11) + jet(at.b00) * jet(at.a01);
  for (Deriv d : {Deriv::DPlus, Deriv::DMinus})
    CHECK(apply_chain({d, d}, x) == Scalar::i() * apply_D(d == Deriv::DPlus ? Deriv::PartialPlus : Deriv::PartialMinus, x));
  CHECK(apply_chain({Deriv::DPlus, Deriv::DMinus}, x) + apply_chain({Deriv::DMinus, Deriv::DPlus}, x) ==
        GradedPoly());
}

TEST_CASE("graded Leibniz rule") {
  Atoms at;
  auto gens = at.gens();
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  for (int k = 0; k < 200; ++k) {
    GradedPoly p = gens[pick(rng)] * gens[pick(rng)];
    GradedPoly q = gens[pick(rng)] + gens[pick(rng)] * gens[pick(rng)];
    if (p.is_zero()) continue;
    for (Deriv d : {Deriv::DPlus, Deriv::DMinus, Deriv::PartialPlus}) {
      GradedPoly lhs = apply_D(d, p * q);
      GradedPoly rhs = apply_D(d, p) * q + Scalar(grade_sign(deriv_grade(d), p.grade())) * p * apply_D(d, q);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("component fields carry explicit odd coordinates") {
  Field u = declare_component("ru", kG00, Chirality::PlusOnly);
  CHECK(apply_D(Deriv::DPlus, jet(u)) == Scalar::i() * theta(OddCoord::ThetaPlus) * jet(u, 1, 0));
  CHECK(apply_D(Deriv::DMinus, jet(u)).is_zero());
  CHECK(apply_D(Deriv::DPlus, theta(OddCoord::ThetaPlus)) == GradedPoly(1));
  CHECK(apply_D(Deriv::DMinus, theta(OddCoord::ThetaPlus)).is_zero());
  CHECK(jet(u, 0, 1).is_zero());
}

TEST_CASE("exponential and hyperbolic generators") {
  Atoms at;
  LinearArg a = LinearArg::of(at.a00), b = LinearArg::of(at.b00);
  CHECK(exp_of(a) * exp_of(-a) == GradedPoly(1));
  CHECK(exp_of(a) * exp_of(b) == exp_of(a + b));
  LinearArg w = LinearArg::of(at.a11), v = LinearArg::of(at.b11);
  CHECK(cosh_of(w) * cosh_of(w) - sinh_of(w) * sinh_of(w) == GradedPoly(1));
  CHECK(sinh_of(-w) == -sinh_of(w));
  CHECK(cosh_of(-w) == cosh_of(w));
  CHECK(cosh_of(LinearArg()) == GradedPoly(1));
  CHECK(sinh_of(LinearArg()).is_zero());
  CHECK(Scalar(2) * sinh_of(w) * cosh_of(w) == sinh_of(w.scaled(2)));
  CHECK_THROWS(exp_of(w));
  CHECK_THROWS(cosh_of(a));
  CHECK(apply_D(Deriv::DPlus, cosh_of(w)) == jet(at.a11, 0, 0, true) * sinh_of(w));
  CHECK(apply_D(Deriv::DPlus, exp_of(a.scaled(2))) == Scalar(2) * jet(at.a00, 0, 0, true) * exp_of(a.scaled(2)));
  CHECK(cosh_even(a) * cosh_even(a) - sinh_even(a) * sinh_even(a) == GradedPoly(1));

  // numeric oracle for products of hyperbolic factors
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> c(-3, 3);
  const std::map<std::string, double> vals{{"ra11", 0.37}, {"rb11", -1.21}};
  for (int k = 0; k < 100; ++k) {
    LinearArg x{{at.a11, c(rng)}, {at.b11, c(rng)}}, y{{at.a11, c(rng)}, {at.b11, c(rng)}};
    auto num = [&](const LinearArg& l) {
      double s = 0;
      for (const auto& [f, q] : l.terms()) s += q.get_d() * vals.at(f.name());
      return s;
    };
    GradedPoly p = (cosh_of(x) + sinh_of(y)) * (sinh_of(x) - cosh_of(y) * cosh_of(x));
    double expect = (std::cosh(num(x)) + std::sinh(num(y))) * (std::sinh(num(x)) - std::cosh(num(y)) * std::cosh(num(x)));
    CHECK(std::abs(evaluate(p, vals) - expect) < 1e-9 * (1 + std::abs(expect)));
  }
}

TEST_CASE("substitution expands nilpotent shifts") {
  Atoms at;
  GradedPoly n = jet(at.a10) * jet(at.b10);  // [00], squares to zero
  Replacement r{LinearArg::of(at.b00), n};
  GradedPoly e = exp_of(LinearArg::of(at.a00).scaled(2));
  CHECK(substitute(e, at.a00, r) == exp_of(LinearArg::of(at.b00).scaled(2)) * (GradedPoly(1) + Scalar(2) * n));
  CHECK(substitute(jet(at.a00, 0, 0, true), at.a00, r) == apply_D(Deriv::DPlus, jet(at.b00) + n));
  GradedPoly m = jet(at.a10) * jet(at.a01);
  Replacement r11{LinearArg::of(at.b11), m};
  CHECK(substitute(cosh_of(LinearArg::of(at.a11)), at.a11, r11) ==
        cosh_of(LinearArg::of(at.b11)) + sinh_of(LinearArg::of(at.b11)) * m);
  CHECK(set_zero(exp_of(LinearArg::of(at.a00)) + jet(at.a10), {at.a00, at.a10}) == GradedPoly(1));
}

TEST_CASE("inverses and denominators") {
  Atoms at;
  GradedPoly u = GradedPoly(1) + jet(at.a10) * jet(at.b10) + jet(at.a00) * jet(at.a00);
  const NamedPoly* U = register_invertible("rU", u);
  GradedPoly iu = inv_of(U);
  for (Deriv d : {Deriv::DPlus, Deriv::DMinus}) {
    GradedPoly lhs = apply_D(d, iu) * u + iu * apply_D(d, u);  // D(U^-1 U) = 0
    CHECK(clear_denominator(lhs, U).first.is_zero());
  }
  auto [p, k] = clear_denominator(iu * iu * jet(at.a00) + iu, U);
  CHECK(k == 2);
  CHECK(p == jet(at.a00) + u);
  CHECK_THROWS(register_invertible("rbad", jet(at.a00)));
}

TEST_CASE("sector and parameter extraction") {
  Atoms at;
  GradedPoly p = theta(OddCoord::ThetaPlus) * jet(at.a10) + theta(OddCoord::ThetaPlus) * theta(OddCoord::ThetaMinus) +
                 param("rl", 2) * jet(at.a00) + param("rl", -1);
  auto sec = theta_sectors(p);
  CHECK(sec[{OddCoord::ThetaPlus}] == jet(at.a10));
  CHECK(sec[{OddCoord::ThetaPlus, OddCoord::ThetaMinus}] == GradedPoly(1));
  auto pw = param_powers(p, "rl");
  CHECK(pw[2] == jet(at.a00));
  CHECK(pw[-1] == GradedPoly(1));
  CHECK(param("rl") * param("rl", -1) == GradedPoly(1));
  CHECK(proportionality(Scalar(3) * p, p) == Scalar(3));
  CHECK(!proportionality(p + GradedPoly(1), p).has_value());
}

TEST_CASE("canonical text") {
  Atoms at;
  GradedPoly p = jet(at.a00, 1, 0, true) * Scalar(2) - jet(at.b00);
  CHECK(p.str() == "2*d+D+(ra00) - rb00");
  CHECK(GradedPoly().str() == "0");
}
