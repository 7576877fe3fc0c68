#include <doctest.h>

#include "balword/errors.hpp"
#include "balword/sturmian.hpp"
#include "oracles.hpp"

using namespace balword;

namespace {

QuadNum Q(const char* s) { return QuadNum::parse(s); }

std::string str_of(const std::set<Word>& ws) {
  std::string out;
  for (const auto& w : ws) out += w.str() + " ";
  return out;
}

}  // namespace

TEST_CASE("letters of the coding") {
  CHECK(iet_letter(IetParams(Q("1/tau^2")), 0) == kLetterA);
  IetParams fib(Q("1/tau^2"), Q("1/tau^2"));
  std::string first;
  for (std::uint64_t n = 0; n < 6; ++n) first.push_back(letter_char(Alphabet::binary, iet_letter(fib, n)));
  CHECK(first == "abaaba");
  CHECK(iet_letter(IetParams(Q("2-sqrt3")), 4) == kLetterA);
}

TEST_CASE("prefixes") {
  CHECK(iet_prefix(IetParams(Q("1/tau^2")), 0).empty());
  CHECK(iet_prefix(IetParams(Q("1/tau^2"), Q("1/tau^2")), 13).str() == "abaababaabaab");
  CHECK(iet_prefix(IetParams(Q("1/tau^2")), 10).count(kLetterB) == 3);
}

TEST_CASE("intercept 1/tau^2 reproduces the Fibonacci fixed point") {
  CHECK(iet_prefix(IetParams(Q("1/tau^2"), Q("1/tau^2")), 5000).str() == oracle::fibonacci_word(5000));
}

TEST_CASE("rational slope gives a periodic coding and no language") {
  IetParams p(QuadNum(Rational(1, 3)));
  CHECK(p.periodic());
  CHECK(iet_prefix(p, 9).str() == "aabaabaab");
  CHECK_THROWS_AS(iet_language(p, 3), UnsupportedRational);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(IetParams(QuadNum(0)), DomainError);
  CHECK_THROWS_AS(IetParams(QuadNum(1)), DomainError);
  CHECK_THROWS_AS(IetParams(Q("1/tau"), QuadNum(1)), DomainError);
  CHECK_THROWS_AS(IetParams(Q("1/tau"), Q("2-sqrt3")), FieldMismatch);
}

TEST_CASE("languages") {
  IetParams p(Q("1/tau^2"));
  CHECK(str_of(iet_language(p, 1)) == "a b ");
  CHECK(str_of(iet_language(p, 2)) == "aa ab ba ");
  auto l4 = iet_language(IetParams(Q("2-sqrt3")), 4);
  CHECK(l4.size() == 5);
  ParikhVector two_two{2, 2};
  CHECK(std::count_if(l4.begin(), l4.end(), [&](const Word& w) { return w.parikh() == two_two; }) == 1);
  CHECK(iet_language(p, 0).size() == 1);
}

TEST_CASE("parikh vectors") {
  CHECK(parikh(Word(Alphabet::binary)) == ParikhVector{0, 0});
  CHECK(parikh(Word::parse(Alphabet::binary, "abaab")) == ParikhVector{3, 2});
  CHECK(parikh(Word::parse(Alphabet::binary, oracle::fibonacci_word(13))) == ParikhVector{8, 5});
  CHECK(ParikhVector{3, 2}.str() == "(3,2)");
  CHECK_THROWS_AS(Word::parse(Alphabet::binary, "abc"), ParseError);
}

TEST_CASE("property: partition language equals sliding-window language, size n+1") {
  for (const char* a : {"1/tau", "1/tau^2", "2-sqrt3", "3-2sqrt2"}) {
    for (const char* rho : {"0", "1/3"}) {
      IetParams p(Q(a), Q(rho));
      PrefixBuffer buf(Alphabet::binary, iet_generator(p));
      for (std::size_t n = 1; n <= 60; ++n) {
        auto lang = iet_language(p, n);
        REQUIRE(lang.size() == n + 1);
        std::set<std::string> part;
        for (const auto& w : lang) part.insert(w.str());
        REQUIRE(part == oracle::sliding_language(buf, n, n + 1));
      }
    }
  }
}

TEST_CASE("property: every factor lies in one of the two Parikh classes") {
  for (const char* a : {"1/tau", "2-sqrt3", "3-2sqrt2"}) {
    for (std::uint64_t n = 1; n <= 40; ++n) {
      auto [heavy, light] = sturmian_parikh_classes(Q(a), n);
      REQUIRE(heavy[1] == light[1] + 1);
      for (const auto& w : iet_language(IetParams(Q(a)), n)) {
        REQUIRE((w.parikh() == heavy || w.parikh() == light));
      }
    }
  }
}

TEST_CASE("property: 1-balance on a prefix of length 10^4") {
  for (const char* a : {"1/tau", "2-sqrt3"}) {
    Word w = iet_prefix(IetParams(Q(a)), 10000);
    auto s = w.symbols();
    std::vector<std::uint32_t> sum(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) sum[i + 1] = sum[i] + (s[i] == kLetterB);
    for (std::size_t len = 1; len <= 500; ++len) {
      std::uint32_t lo = UINT32_MAX, hi = 0;
      for (std::size_t i = 0; i + len <= s.size(); ++i) {
        lo = std::min(lo, sum[i + len] - sum[i]);
        hi = std::max(hi, sum[i + len] - sum[i]);
      }
      REQUIRE(hi - lo <= 1);
    }
  }
}

TEST_CASE("property: streaming agrees with the direct formula") {
  IetParams p(Q("1/tau"), Q("1/2+1/3*sqrt(5)") - QuadNum(1));
  IetStream s(p);
  for (std::uint64_t n = 0; n < 3000; ++n) REQUIRE(s.next() == iet_letter(p, n));
}
