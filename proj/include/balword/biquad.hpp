#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "balword/integer.hpp"
#include "balword/quadnum.hpp"

namespace balword {

/// Exact element of Q(sqrt d1, sqrt d2) over the basis {1, sqrt d1, sqrt d2, sqrt(d1 d2)}.
///
/// Stored as (c0 + c1 sqrt d1 + c2 sqrt d2 + c3 sqrt(d1 d2)) / den, den > 0,
/// content-reduced. d1 != d2 are square-free, so the value is zero exactly
/// when every coefficient is.
class BiQuadNum {
 public:
  BiQuadNum(std::int64_t d1, std::int64_t d2);

  /// Embeds x; its field must be rational, d1, or d2.
  static BiQuadNum lift(const QuadNum& x, std::int64_t d1, std::int64_t d2);
  static BiQuadNum from_coefficients(const std::array<Rational, 4>& c, std::int64_t d1,
                                     std::int64_t d2);

  std::int64_t d1() const { return d1_; }
  std::int64_t d2() const { return d2_; }
  std::array<Rational, 4> coefficients() const;

  bool is_zero() const;
  /// Exact sign. Zero by coefficient test; otherwise rational interval
  /// enclosures of the three square roots at doubling binary precision.
  int sign() const;
  /// The value as a QuadNum when it lies in a single quadratic subfield.
  std::optional<QuadNum> to_quad() const;
  std::string str() const;

  BiQuadNum inverse() const;
  BiQuadNum operator-() const;
  BiQuadNum& operator+=(const BiQuadNum& o);
  BiQuadNum& operator-=(const BiQuadNum& o);
  BiQuadNum& operator*=(const BiQuadNum& o);

  friend BiQuadNum operator+(BiQuadNum x, const BiQuadNum& y) { return x += y; }
  friend BiQuadNum operator-(BiQuadNum x, const BiQuadNum& y) { return x -= y; }
  friend BiQuadNum operator*(BiQuadNum x, const BiQuadNum& y) { return x *= y; }
  friend BiQuadNum operator/(const BiQuadNum& x, const BiQuadNum& y) { return x * y.inverse(); }

  friend bool operator==(const BiQuadNum& x, const BiQuadNum& y) = default;
  friend std::strong_ordering operator<=>(const BiQuadNum& x, const BiQuadNum& y);

  friend Integer floor(const BiQuadNum& x);

 private:
  void normalize();
  void check_same(const BiQuadNum& o) const;
  /// Integer bounds lo < value * den * 2^k < hi (strict unless the value is rational).
  std::pair<Integer, Integer> enclosure(unsigned k) const;

  std::array<Integer, 4> c_{Integer(0), Integer(0), Integer(0), Integer(0)};
  Integer den_{1};
  std::int64_t d1_;
  std::int64_t d2_;
};

BiQuadNum frac(const BiQuadNum& x);

}  // namespace balword
