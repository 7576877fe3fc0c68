#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "balword/integer.hpp"

namespace balword {

/// Exact element a + b*sqrt(d) of a real quadratic field.
///
/// Stored as (p + q*sqrt(d)) / r with r > 0 and gcd(p, q, r) = 1, so equal
/// values have equal representations. Rationals use field() == kRationalField
/// and mix freely with any field; two different irrational fields only mix
/// through comparison (see compare()).
class QuadNum {
 public:
  static constexpr std::int64_t kRationalField = 0;

  QuadNum() = default;
  QuadNum(std::int64_t v) : p_(v) {}  // NOLINT(google-explicit-constructor)
  QuadNum(int v) : p_(v) {}  // NOLINT
  QuadNum(const Rational& v);  // NOLINT

  /// a + b*sqrt(d); d must be square-free and >= 2 unless b == 0.
  static QuadNum from_parts(const Rational& a, const Rational& b, std::int64_t d);
  /// Exact sqrt(n) for n >= 0, with square factors pulled out.
  static QuadNum sqrt(std::int64_t n);

  /// Parses `<rat>`, `[<rat>(+|-)][<rat>*]sqrt(<int>)`, or a named preset:
  /// `1/tau`, `1/tau^2`, `2-sqrt3`, `3-2sqrt2` (tau the golden mean).
  static QuadNum parse(std::string_view text);
  std::string str() const;

  Rational a() const { return Rational(p_, r_); }
  Rational b() const { return Rational(q_, r_); }
  std::int64_t field() const { return d_; }
  bool is_rational() const { return d_ == kRationalField; }

  // Raw canonical representation (p + q*sqrt(d)) / r.
  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& r() const { return r_; }

  int sign() const;
  QuadNum conj() const;
  QuadNum inverse() const;

  QuadNum operator-() const;
  QuadNum& operator+=(const QuadNum& o);
  QuadNum& operator-=(const QuadNum& o);
  QuadNum& operator*=(const QuadNum& o);
  QuadNum& operator/=(const QuadNum& o) { return *this *= o.inverse(); }

  friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
  friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
  friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
  friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }

  friend bool operator==(const QuadNum& x, const QuadNum& y) = default;
  friend std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y);

 private:
  QuadNum(Integer p, Integer q, Integer r, std::int64_t d);
  void normalize();
  std::int64_t joint_field(const QuadNum& o) const;

  Integer p_{0};
  Integer q_{0};
  Integer r_{1};
  std::int64_t d_ = kRationalField;
};

std::ostream& operator<<(std::ostream& os, const QuadNum& x);

/// Exact total order; different irrational fields are compared through BiQuadNum.
std::strong_ordering compare(const QuadNum& x, const QuadNum& y);
/// Exact integer part, by integer square-root bracketing.
Integer floor(const QuadNum& x);
/// x - floor(x), in [0, 1) and in the same field as x.
QuadNum frac(const QuadNum& x);
/// x rounded half-up to `digits` decimals, e.g. "0.0718".
std::string decimal_string(const QuadNum& x, int digits);

/// Golden mean (1 + sqrt5)/2.
QuadNum golden_mean();

}  // namespace balword
