#pragma once

#include <compare>
#include <ostream>
#include <string>

namespace z2sl {

/// An element [a1 a2] of Z2 x Z2.
struct GradeVec {
  unsigned a1 : 1 = 0;
  unsigned a2 : 1 = 0;

  constexpr GradeVec() = default;
  constexpr GradeVec(unsigned x, unsigned y) : a1(x & 1u), a2(y & 1u) {}

  constexpr friend GradeVec operator+(GradeVec a, GradeVec b) {
    return GradeVec(a.a1 ^ b.a1, a.a2 ^ b.a2);
  }
  constexpr GradeVec& operator+=(GradeVec b) { return *this = *this + b; }
  constexpr friend bool operator==(GradeVec a, GradeVec b) {
    return a.a1 == b.a1 && a.a2 == b.a2;
  }
  constexpr int index() const { return static_cast<int>(a1 * 2 + a2); }
  constexpr friend auto operator<=>(GradeVec a, GradeVec b) { return a.index() <=> b.index(); }

  /// Total Z2 parity a1 + a2.
  constexpr unsigned parity() const { return (a1 + a2) & 1u; }
  std::string str() const { return std::string{char('0' + a1), char('0' + a2)}; }
};

inline constexpr GradeVec kG00{0, 0};
inline constexpr GradeVec kG10{1, 0};
inline constexpr GradeVec kG01{0, 1};
inline constexpr GradeVec kG11{1, 1};

constexpr unsigned grade_dot(GradeVec a, GradeVec b) { return (a.a1 * b.a1 + a.a2 * b.a2) & 1u; }

/// (-1)^(a.b) as an int.
constexpr int grade_sign(GradeVec a, GradeVec b) { return grade_dot(a, b) ? -1 : 1; }

constexpr GradeVec grade_add(GradeVec a, GradeVec b) { return a + b; }

inline std::ostream& operator<<(std::ostream& os, GradeVec g) { return os << '[' << g.str() << ']'; }

}  // namespace z2sl
