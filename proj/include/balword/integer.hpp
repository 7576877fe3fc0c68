#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace balword {

/// Arbitrary-precision integer with an inline int64 fast path.
///
/// Values that fit in int64 never touch GMP; any operation whose result
/// overflows is redone in mpz arithmetic and demoted back when it fits again.
class Integer {
 public:
  Integer() = default;
  Integer(std::int64_t v) : rep_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(int v) : rep_(static_cast<std::int64_t>(v)) {}  // NOLINT
  explicit Integer(const mpz_class& v);

  static Integer parse(std::string_view text);

  bool is_small() const { return std::holds_alternative<std::int64_t>(rep_); }
  std::optional<std::int64_t> to_int64() const;
  mpz_class to_mpz() const;
  std::string str() const;

  int sign() const;
  bool is_zero() const { return is_small() && small() == 0; }

  Integer operator-() const;
  Integer& operator+=(const Integer& o);
  Integer& operator-=(const Integer& o);
  Integer& operator*=(const Integer& o);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b);
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b);

  /// Quotient rounded toward negative infinity. Divisor must be nonzero.
  friend Integer floor_div(const Integer& a, const Integer& b);
  /// Quotient when b divides a exactly.
  friend Integer div_exact(const Integer& a, const Integer& b);
  /// Non-negative gcd; gcd(0, 0) = 0.
  friend Integer gcd(const Integer& a, const Integer& b);
  friend Integer abs(const Integer& a);
  /// floor(sqrt(a)) for a >= 0.
  friend Integer isqrt(const Integer& a);
  /// a * 2^k.
  friend Integer shift_left(const Integer& a, unsigned k);

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  std::int64_t small() const { return std::get<std::int64_t>(rep_); }
  const mpz_class& big() const { return std::get<mpz_class>(rep_); }
  void assign(mpz_class v);

  std::variant<std::int64_t, mpz_class> rep_{std::int64_t{0}};
};

/// Reduced fraction num/den with den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(Integer num) : num_(std::move(num)) {}  // NOLINT
  Rational(std::int64_t num) : num_(num) {}  // NOLINT
  Rational(Integer num, Integer den);

  /// Parses `int` or `int/int`.
  static Rational parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }
  int sign() const { return num_.sign(); }
  bool is_integer() const { return den_ == Integer(1); }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend Integer floor(const Rational& r) { return floor_div(r.num_, r.den_); }

 private:
  Integer num_{0};
  Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

/// Largest square-free divisor decomposition: n = s^2 * core with core square-free.
struct SquareFreeSplit {
  std::int64_t square_root_factor;
  std::int64_t core;
};
SquareFreeSplit split_square_free(std::int64_t n);
bool is_square_free(std::int64_t n);

}  // namespace balword
