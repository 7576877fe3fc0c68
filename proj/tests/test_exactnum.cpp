#include <doctest.h>

#include "balword/biquad.hpp"
#include "balword/errors.hpp"
#include "balword/integer.hpp"
#include "balword/quadnum.hpp"
#include "oracles.hpp"

using namespace balword;

namespace {

QuadNum Q(const char* s) { return QuadNum::parse(s); }

QuadNum random_quad(std::int64_t d, std::int64_t span) {
  std::uniform_int_distribution<std::int64_t> num(-span, span);
  std::uniform_int_distribution<std::int64_t> den(1, span);
  return QuadNum::from_parts(Rational(num(oracle::rng()), den(oracle::rng())),
                             Rational(num(oracle::rng()), den(oracle::rng())), d);
}

}  // namespace

TEST_CASE("integer promotes to GMP and back") {
  Integer big = Integer(INT64_MAX);
  big += Integer(1);
  CHECK_FALSE(big.is_small());
  CHECK(big.str() == "9223372036854775808");
  big -= Integer(1);
  CHECK(big.is_small());
  Integer sq = Integer(3037000500) * Integer(3037000500);
  CHECK(sq.str() == "9223372037000250000");
  CHECK(isqrt(sq) == Integer(3037000500));
  CHECK(isqrt(sq - Integer(1)) == Integer(3037000499));
  CHECK(floor_div(Integer(-7), Integer(2)) == Integer(-4));
  CHECK(gcd(Integer(0), Integer(0)) == Integer(0));
  CHECK(Integer::parse("-123456789012345678901234567890").str() == "-123456789012345678901234567890");
}

TEST_CASE("isqrt agrees with mpz_sqrt") {
  std::uniform_int_distribution<std::uint64_t> dist;
  for (int i = 0; i < 2000; ++i) {
    mpz_class v = mpz_class(std::to_string(dist(oracle::rng()))) * mpz_class(std::to_string(dist(oracle::rng())));
    if (i % 3 == 0) v = mpz_class(std::to_string(dist(oracle::rng()) >> (i % 60)));
    mpz_class expect;
    mpz_sqrt(expect.get_mpz_t(), v.get_mpz_t());
    CHECK(isqrt(Integer(v)).to_mpz() == expect);
  }
}

TEST_CASE("rational parsing and reduction") {
  CHECK(Rational::parse("6/-4").str() == "-3/2");
  CHECK(Rational::parse("0/5") == Rational(0));
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("field arithmetic") {
  CHECK(QuadNum::from_parts(Rational(1), Rational(0), 5) + QuadNum(0) == QuadNum(1));
  QuadNum inv_tau2 = QuadNum::from_parts(Rational(3, 2), Rational(-1, 2), 5);
  CHECK(inv_tau2 == Q("1/tau^2"));
  CHECK(inv_tau2 * inv_tau2.conj() == QuadNum(1));
  CHECK(Q("2-sqrt3") + Q("2+sqrt(3)") == QuadNum(4));
  CHECK(golden_mean() * Q("1/tau") == QuadNum(1));
  CHECK(Q("1/tau") + QuadNum(1) == golden_mean());
  CHECK(QuadNum::sqrt(12) == QuadNum::from_parts(Rational(0), Rational(2), 3));
  CHECK(QuadNum::sqrt(16) == QuadNum(4));
  CHECK_THROWS_AS(Q("sqrt(5)") + Q("sqrt(2)"), FieldMismatch);
  CHECK_THROWS_AS(QuadNum(1) / QuadNum(0), DomainError);
}

TEST_CASE("comparison") {
  CHECK(compare(Q("2-sqrt3"), Q("2-sqrt3")) == std::strong_ordering::equal);
  CHECK(Q("2-sqrt3") > QuadNum(Rational(1, 4)));
  // different fields go through the biquadratic lift
  CHECK(Q("1/tau^2") > Q("2-sqrt3"));
  CHECK(Q("3-2sqrt2") < Q("2-sqrt3"));
  CHECK(Q("sqrt(2)") < Q("sqrt(3)"));
}

TEST_CASE("floor and frac") {
  CHECK(floor(QuadNum(7)) == Integer(7));
  CHECK(frac(QuadNum(7)) == QuadNum(0));
  CHECK(floor(QuadNum(5) * Q("1/tau^2")) == Integer(1));
  CHECK(floor(-Q("sqrt(2)")) == Integer(-2));
  QuadNum f = frac(QuadNum(4) * Q("2-sqrt3"));
  CHECK(f == Q("7-4*sqrt(3)"));
  CHECK(decimal_string(f, 4) == "0.0718");
  CHECK(decimal_string(QuadNum(Rational(1, 8)), 2) == "0.13");
  CHECK(decimal_string(-Q("sqrt(2)"), 3) == "-1.414");
}

TEST_CASE("parser presets and round trip") {
  CHECK(Q("1/tau").str() == "-1/2+1/2*sqrt(5)");
  CHECK(Q("3-2sqrt2") == Q("3-2*sqrt(2)"));
  CHECK(Q("2 − sqrt3") == Q("2-sqrt3"));
  CHECK(Q("3/7") == QuadNum(Rational(3, 7)));
  CHECK_THROWS_AS(Q("tau"), ParseError);
  CHECK_THROWS_AS(Q("1+sqrt(-2)"), DomainError);
}

TEST_CASE("biquadratic sign") {
  BiQuadNum zero(3, 5);
  CHECK(zero.sign() == 0);
  CHECK(zero.is_zero());
  BiQuadNum d = BiQuadNum::lift(Q("sqrt(5)"), 3, 5) - BiQuadNum::lift(Q("sqrt(3)"), 3, 5);
  CHECK(d.sign() > 0);
  // (1/tau)(3-2sqrt2) = 0.1061... against 1/10 and against 0.1062
  BiQuadNum prod = BiQuadNum::lift(Q("1/tau"), 2, 5) * BiQuadNum::lift(Q("3-2sqrt2"), 2, 5);
  CHECK((prod - BiQuadNum::lift(QuadNum(Rational(1, 10)), 2, 5)).sign() > 0);
  CHECK((prod - BiQuadNum::lift(QuadNum(Rational(1062, 10000)), 2, 5)).sign() < 0);
  CHECK(prod * prod.inverse() == BiQuadNum::lift(QuadNum(1), 2, 5));
  CHECK(floor(prod * BiQuadNum::lift(QuadNum(100), 2, 5)) == Integer(10));
  CHECK_THROWS_AS(BiQuadNum::lift(Q("sqrt(7)"), 2, 5), FieldMismatch);
  CHECK(BiQuadNum::lift(Q("2-sqrt3"), 2, 3).to_quad() == Q("2-sqrt3"));
  CHECK_FALSE((BiQuadNum::lift(Q("sqrt(2)"), 2, 3) + BiQuadNum::lift(Q("sqrt(3)"), 2, 3)).to_quad());
  // sqrt2 * sqrt3 lands in Q(sqrt6)
  CHECK((BiQuadNum::lift(Q("sqrt(2)"), 2, 3) * BiQuadNum::lift(Q("sqrt(3)"), 2, 3)).to_quad() == Q("sqrt(6)"));
}

TEST_CASE("biquadratic sign of a near-cancelling value") {
  // (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6, and 5 + 2 sqrt6 - 9.898979485 is about 5.7e-10.
  BiQuadNum s = BiQuadNum::lift(Q("sqrt(2)"), 2, 3) + BiQuadNum::lift(Q("sqrt(3)"), 2, 3);
  BiQuadNum near = s * s - BiQuadNum::lift(QuadNum(Rational(Integer(std::int64_t{9898979485}), Integer(std::int64_t{1000000000}))), 2, 3);
  CHECK(near.sign() > 0);
  BiQuadNum below = s * s - BiQuadNum::lift(QuadNum(Rational(Integer(std::int64_t{9898979486}), Integer(std::int64_t{1000000000}))), 2, 3);
  CHECK(below.sign() < 0);
}

TEST_CASE("property: frac lies in [0,1) and reassembles x") {
  for (std::int64_t d : {2, 3, 5, 7}) {
    for (int i = 0; i < 25000; ++i) {
      QuadNum x = random_quad(d, 1000);
      QuadNum f = frac(x);
      REQUIRE(f.sign() >= 0);
      REQUIRE(f < QuadNum(1));
      REQUIRE(QuadNum(Rational(floor(x))) + f == x);
    }
  }
}

TEST_CASE("property: norm is rational, parse inverts str, compare matches subtraction") {
  for (int i = 0; i < 5000; ++i) {
    std::int64_t d = (i % 2) ? 5 : 3;
    QuadNum x = random_quad(d, 50);
    QuadNum y = random_quad(d, 50);
    REQUIRE((x * x.conj()).is_rational());
    REQUIRE(QuadNum::parse(x.str()) == x);
    int s = (x - y).sign();
    auto c = compare(x, y);
    REQUIRE((c < 0) == (s < 0));
    REQUIRE((c == 0) == (s == 0));
    BiQuadNum bx = BiQuadNum::lift(x, 2, d);
    BiQuadNum by = BiQuadNum::lift(y, 2, d);
    REQUIRE((bx - by).sign() == s);
  }
}

TEST_CASE("property: cross-field comparison matches floating point when well separated") {
  for (int i = 0; i < 5000; ++i) {
    QuadNum x = random_quad(2, 30);
    QuadNum y = random_quad(7, 30);
    long double gap = oracle::approx(x) - oracle::approx(y);
    if (std::fabs(static_cast<double>(gap)) < 1e-9) continue;
    REQUIRE((compare(x, y) > 0) == (gap > 0));
  }
}

TEST_CASE("property: biquadratic field operations") {
  std::uniform_int_distribution<std::int64_t> c(-20, 20);
  for (int i = 0; i < 2000; ++i) {
    std::array<Rational, 4> a{Rational(c(oracle::rng())), Rational(c(oracle::rng())),
                              Rational(c(oracle::rng())), Rational(c(oracle::rng()), 3)};
    BiQuadNum x = BiQuadNum::from_coefficients(a, 3, 5);
    if (x.is_zero()) continue;
    REQUIRE(x * x.inverse() == BiQuadNum::lift(QuadNum(1), 3, 5));
    BiQuadNum f = frac(x);
    REQUIRE(f.sign() >= 0);
    REQUIRE(f < BiQuadNum::lift(QuadNum(1), 3, 5));
  }
}
