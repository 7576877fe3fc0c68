#include <doctest.h>

#include "balword/colouring.hpp"
#include "balword/errors.hpp"
#include "oracles.hpp"

using namespace balword;

namespace {

QuadNum Q(const char* s) { return QuadNum::parse(s); }
Word bin(const std::string& s) { return Word::parse(Alphabet::binary, s); }
Word paint(const std::string& s) { return Word::parse(Alphabet::paint, s); }
Word ter(const std::string& s) { return Word::parse(Alphabet::ternary, s); }

ColouringParams example_one() {
  return ColouringParams(IetParams(Q("1/tau^2"), Q("1/tau^2")), IetParams(QuadNum(Rational(1, 2))));
}

}  // namespace

TEST_CASE("colouring finite words") {
  CHECK(colour(bin("abaab"), paint("23")).str() == "12113");
  CHECK(colour(bin("aaa"), paint("")).str() == "111");
  CHECK(colour(bin(oracle::fibonacci_word(13)), paint("23232")).str() == "1211312113112");
  CHECK_THROWS_AS(colour(bin("abb"), paint("2")), InsufficientPaint);
}

TEST_CASE("projections") {
  CHECK(project_pi(ter("1211312113112")).str() == "abaababaabaab");
  CHECK(project_Pi(ter("1211312113112")).str() == "23232");
  CHECK(project_pi(ter("111")).str() == "aaa");
  CHECK(project_Pi(ter("111")).empty());
}

TEST_CASE("coloured letters") {
  CHECK(coloured_letter(ColouringParams(Q("1/tau"), Q("3-2sqrt2")), 0) == kColour1);
  CHECK(coloured_letter(example_one(), 1) == kColour2);
  CHECK(coloured_prefix(example_one(), 13).str() == "1211312113112");
}

TEST_CASE("frequencies") {
  QuadNum third(Rational(1, 3));
  auto p = from_frequencies(third, third, third);
  CHECK(p.alpha() == QuadNum(Rational(2, 3)));
  CHECK(p.gamma() == QuadNum(Rational(1, 2)));
  CHECK(p.periodic());

  QuadNum a = Q("1/tau");
  QuadNum g = Q("3-2sqrt2");
  auto lift = [](const QuadNum& x) { return BiQuadNum::lift(x, 2, 5); };
  BiQuadNum one = lift(QuadNum(1));
  auto q = from_frequencies(one - lift(a), lift(a) * (one - lift(g)), lift(a) * lift(g));
  CHECK(q.alpha() == a);
  CHECK(q.gamma() == g);

  CHECK_THROWS_AS(from_frequencies(QuadNum(Rational(1, 2)), QuadNum(Rational(1, 2)), QuadNum(0)), DomainError);
  CHECK_THROWS_AS(from_frequencies(third, third, QuadNum(Rational(1, 2))), DomainError);
}

TEST_CASE("property: projections invert colouring") {
  for (const char* a : {"1/tau", "2-sqrt3", "1/tau^2"}) {
    for (const char* g : {"3-2sqrt2", "1/tau"}) {
      ColouringParams p(Q(a), Q(g));
      Word v = coloured_prefix(p, 4000);
      Word u = iet_prefix(p.base(), 4000);
      REQUIRE(project_pi(v) == u);
      Word z = project_Pi(v);
      Word pa = iet_prefix(p.paint(), z.size());
      Word pa_as_paint(Alphabet::paint, std::vector<Letter>(pa.symbols().begin(), pa.symbols().end()));
      REQUIRE(z == pa_as_paint);
      REQUIRE(colour(u, pa_as_paint) == v);
    }
  }
}

TEST_CASE("property: direct letter formula agrees with the stream") {
  std::vector<ColouringParams> ps = {
      ColouringParams(Q("1/tau"), Q("3-2sqrt2")),
      ColouringParams(Q("3-2sqrt2"), Q("1/tau")),
      example_one(),
      ColouringParams(IetParams(Q("2-sqrt3"), Q("1/2*sqrt(3)")), IetParams(Q("1/tau"), Q("1/tau^2"))),
  };
  for (const auto& p : ps) {
    ColouredStream s(p);
    for (std::uint64_t n = 0; n < 3000; ++n) REQUIRE(s.next() == coloured_letter(p, n));
  }
}
