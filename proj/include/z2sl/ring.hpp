#pragma once

// Graded-commutative differential polynomial ring.
//
// Elements are Gaussian-rational combinations of sign-normalized monomials in
// generators: field jets, odd coordinates, invertible parameters, inverses of
// registered polynomials, and the function families exp / cosh / sinh of
// rational linear combinations of undifferentiated fields.
//
// Normal form of a monomial: factors sorted by generator order (odd
// coordinates first, function generators last), equal generators merged,
// at most one exp factor and at most one cosh/sinh factor.

#include "z2sl/grading.hpp"
#include "z2sl/scalar.hpp"

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace z2sl {

enum class Chirality : std::uint8_t { Both, PlusOnly, MinusOnly };
enum class FieldKind : std::uint8_t { Superfield, Component };

/// Which pair of odd covariant derivatives acts on a superfield.
/// Standard: D+ and D- both [10], {D+, D-} = 0.
/// Alternative: D10 [10] and D01 [01], [D10, D01] = 0.
enum class Superspace : std::uint8_t { Standard, Alternative };

struct FieldInfo {
  std::string name;
  GradeVec grade;
  FieldKind kind = FieldKind::Superfield;
  Superspace space = Superspace::Standard;
  Chirality chirality = Chirality::Both;
};

/// Handle to an interned field; cheap to copy, compares by name.
class Field {
 public:
  Field() = default;
  explicit Field(const FieldInfo* info) : info_(info) {}
  const FieldInfo& info() const { return *info_; }
  const std::string& name() const { return info_->name; }
  GradeVec grade() const { return info_->grade; }
  bool is_component() const { return info_->kind == FieldKind::Component; }
  Chirality chirality() const { return info_->chirality; }
  Superspace space() const { return info_->space; }
  bool valid() const { return info_ != nullptr; }
  const FieldInfo* ptr() const { return info_; }

  friend bool operator==(Field a, Field b) { return a.info_ == b.info_; }
  friend std::strong_ordering operator<=>(Field a, Field b);

 private:
  const FieldInfo* info_ = nullptr;
};

/// Registers (or re-fetches) a field. Re-declaring a name with different
/// attributes throws std::invalid_argument.
Field declare_superfield(std::string_view name, GradeVec grade, Chirality chirality = Chirality::Both,
                         Superspace space = Superspace::Standard);
Field declare_component(std::string_view name, GradeVec grade, Chirality chirality = Chirality::Both);
std::optional<Field> find_field(std::string_view name);

enum class OddCoord : std::uint8_t { ThetaPlus, ThetaMinus, Theta10, Theta01 };
GradeVec coord_grade(OddCoord c);
std::string coord_name(OddCoord c);

/// Covariant and ordinary derivatives. D and Dbar are accepted by
/// parse_deriv as aliases of D+ and D-.
enum class Deriv : std::uint8_t { DPlus, DMinus, PartialPlus, PartialMinus, D10, D01 };
GradeVec deriv_grade(Deriv d);
bool deriv_is_odd(Deriv d);
bool deriv_is_plus(Deriv d);
std::string deriv_name(Deriv d);
/// Throws std::invalid_argument on an unknown name.
Deriv parse_deriv(std::string_view name);

/// Rational linear combination of undifferentiated fields, sorted by field,
/// zero coefficients dropped.
class LinearArg {
 public:
  LinearArg() = default;
  LinearArg(std::initializer_list<std::pair<Field, mpq_class>> terms);
  static LinearArg of(Field f, mpq_class c = 1) { return LinearArg({{f, std::move(c)}}); }

  const std::vector<std::pair<Field, mpq_class>>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  mpq_class coefficient(Field f) const;
  /// Grading shared by all fields; throws if the fields disagree.
  GradeVec grade() const;
  /// True when the first nonzero coefficient is negative.
  bool leading_negative() const;

  LinearArg operator+(const LinearArg& o) const;
  LinearArg operator-(const LinearArg& o) const;
  LinearArg operator-() const;
  LinearArg scaled(const mpq_class& c) const;

  friend bool operator==(const LinearArg& a, const LinearArg& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering operator<=>(const LinearArg& a, const LinearArg& b);
  std::string str() const;

 private:
  void normalize();
  std::vector<std::pair<Field, mpq_class>> terms_;
};

struct NamedPoly;  // registered invertible polynomial
struct ParamInfo {
  std::string name;
};

enum class GenKind : std::uint8_t { OddCoord, Jet, Param, Inv, Exp, Cosh, Sinh };

/// A ring generator. Only the members relevant to `kind` are meaningful.
struct Generator {
  GenKind kind = GenKind::Param;
  Field field;                      // Jet
  std::uint8_t dplus_count = 0;     // Jet: number of d/dx+ (a)
  std::uint8_t dminus_count = 0;    // Jet: number of d/dx- (b)
  bool odd_plus = false;            // Jet: D+ (or D10) applied (eps+)
  bool odd_minus = false;           // Jet: D- (or D01) applied (eps-)
  OddCoord coord = OddCoord::ThetaPlus;
  const ParamInfo* param = nullptr;
  const NamedPoly* inv = nullptr;
  std::shared_ptr<const LinearArg> arg;  // Exp / Cosh / Sinh
  GradeVec grade;

  /// True when g*g = 0 by the sign rule.
  bool nilpotent() const { return grade_sign(grade, grade) == -1; }
  std::string str() const;

  friend bool operator==(const Generator& a, const Generator& b) { return (a <=> b) == 0; }
  friend std::strong_ordering operator<=>(const Generator& a, const Generator& b);
};

struct Factor {
  Generator gen;
  int exp = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
  friend std::strong_ordering operator<=>(const Factor& a, const Factor& b) {
    if (auto c = a.gen <=> b.gen; c != 0) return c;
    return a.exp <=> b.exp;
  }
};

using Monomial = std::vector<Factor>;

GradeVec monomial_grade(const Monomial& m);
std::string monomial_str(const Monomial& m);

class GradedPoly {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  GradedPoly() = default;
  GradedPoly(const Scalar& c);  // NOLINT(implicit)
  GradedPoly(long c) : GradedPoly(Scalar(c)) {}  // NOLINT(implicit)
  GradedPoly(int c) : GradedPoly(Scalar(c)) {}   // NOLINT(implicit)
  static GradedPoly from_generator(Generator g, int exp = 1);
  static GradedPoly from_monomial(const Monomial& m, const Scalar& c = 1);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Constant term (coefficient of the empty monomial).
  Scalar constant_term() const;
  bool is_homogeneous() const;
  /// Grading of a homogeneous, nonzero polynomial; throws otherwise.
  GradeVec grade() const;
  /// Splits into homogeneous parts.
  std::map<GradeVec, GradedPoly> homogeneous_parts() const;

  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  GradedPoly& operator*=(const Scalar& s);
  GradedPoly& operator*=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(GradedPoly a, const Scalar& s) { return a *= s; }
  friend GradedPoly operator*(const Scalar& s, GradedPoly a) { return a *= s; }
  GradedPoly operator-() const;
  GradedPoly pow(int n) const;

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) { return a.terms_ == b.terms_; }

  /// Deterministic canonical text; "0" for the zero polynomial.
  std::string str() const;

  void add_term(const Monomial& m, const Scalar& c);

 private:
  TermMap terms_;
};

GradedPoly mul(const GradedPoly& p, const GradedPoly& q);
bool is_zero(const GradedPoly& p);
std::ostream& operator<<(std::ostream& os, const GradedPoly& p);

// ---- constructors -------------------------------------------------------

/// Jet d+^a d-^b D+^e1 D-^e2 of a field, already canonical. Returns zero for
/// derivatives killed by chirality.
GradedPoly jet(Field f, int dplus = 0, int dminus = 0, bool odd_plus = false, bool odd_minus = false);
inline GradedPoly var(Field f) { return jet(f); }
GradedPoly theta(OddCoord c);
/// Formal invertible [00] constant raised to an integer power.
GradedPoly param(std::string_view name, int exp = 1);
const ParamInfo* intern_param(std::string_view name);
/// exp of a [00]-graded argument.
GradedPoly exp_of(const LinearArg& arg);
/// cosh / sinh of a [11]-graded argument.
GradedPoly cosh_of(const LinearArg& arg);
GradedPoly sinh_of(const LinearArg& arg);
/// cosh / sinh of a [00]-graded argument, written through exp.
GradedPoly cosh_even(const LinearArg& arg);
GradedPoly sinh_even(const LinearArg& arg);

struct NamedPoly {
  std::string name;
  GradedPoly value;
};
/// Registers P under a name so that inv(name) = 1/P is available.
/// P must be [00]-graded with nonzero constant term.
const NamedPoly* register_invertible(std::string_view name, const GradedPoly& value);
GradedPoly inv_of(const NamedPoly* p, int exp = 1);

// ---- derivations ----------------------------------------------------------

GradedPoly apply_D(Deriv d, const GradedPoly& p);
GradedPoly apply_D(std::string_view name, const GradedPoly& p);
/// Applies a sequence of derivatives, first element first.
GradedPoly apply_chain(std::initializer_list<Deriv> ds, const GradedPoly& p);

// ---- structural utilities -------------------------------------------------

/// Replaces generators: f returns a replacement for g (same grading), or
/// nullopt to keep g.
GradedPoly map_generators(const GradedPoly& p,
                          const std::function<std::optional<GradedPoly>(const Generator&)>& f);

/// Field substitution f -> body + nil, where body is a linear combination of
/// fields and nil is nilpotent. Rewrites jets by differentiating the
/// replacement and function generators by finite Taylor expansion.
struct Replacement {
  LinearArg body;
  GradedPoly nil;
};
GradedPoly substitute(const GradedPoly& p, Field f, const Replacement& r);
GradedPoly set_zero(const GradedPoly& p, std::initializer_list<Field> fields);

/// Coefficients p = sum_s theta^s c_s, keyed by the sorted theta list.
std::map<std::vector<OddCoord>, GradedPoly> theta_sectors(const GradedPoly& p);
/// Coefficients of p by the exponent of a parameter.
std::map<int, GradedPoly> param_powers(const GradedPoly& p, std::string_view name);

/// Clears inverse generators of `np`: multiplies by np^K, K the maximal
/// inverse exponent, and drops the inverses. Returns (result, K).
std::pair<GradedPoly, int> clear_denominator(const GradedPoly& p, const NamedPoly* np);

/// If a == c * b for a scalar c, returns c.
std::optional<Scalar> proportionality(const GradedPoly& a, const GradedPoly& b);

/// Floating-point evaluation for numeric oracles. Only undifferentiated
/// fields, parameters and function generators are supported.
std::complex<double> evaluate(const GradedPoly& p, const std::map<std::string, double>& values);

}  // namespace z2sl
