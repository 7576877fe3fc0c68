#include <doctest.h>

#include <cstdlib>

#include "balword/complexity.hpp"
#include "balword/errors.hpp"
#include "balword/palpha.hpp"
#include "balword/sturmian.hpp"
#include "oracles.hpp"

using namespace balword;

namespace {

QuadNum Q(const char* s) { return QuadNum::parse(s); }

PrefixBuffer v_stream(const char* a, const char* g) {
  return PrefixBuffer(Alphabet::ternary, coloured_generator(ColouringParams(Q(a), Q(g))));
}

constexpr std::size_t kBudget = 1u << 20;

}  // namespace

TEST_CASE("window counting matches brute force") {
  std::uniform_int_distribution<int> letter(0, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Letter> w(500 + trial * 37);
    for (auto& l : w) l = static_cast<Letter>(letter(oracle::rng()) % (trial % 2 ? 3 : 2));
    for (std::size_t n : {1, 2, 3, 7, 31, 32, 63, 64, 65, 100}) {
      REQUIRE(count_distinct_factors(w, n) == oracle::brute_factor_count(w, n));
      REQUIRE(count_distinct_parikh(w, n) == oracle::brute_parikh_count(w, n));
    }
  }
  std::vector<Letter> tiny{0, 1};
  CHECK(count_distinct_factors(tiny, 3) == 0);
}

TEST_CASE("Sturmian complexities") {
  PrefixBuffer u(Alphabet::binary, iet_generator(IetParams(Q("1/tau^2"))));
  auto f = factor_complexity(u, 5, kBudget);
  CHECK(f.value == 6);
  CHECK(f.stable);
  for (std::size_t n : {1, 2, 7, 30}) CHECK(abelian_complexity(u, n, kBudget).value == 2);
  auto long_window = factor_complexity(u, 90, kBudget);
  CHECK(long_window.value == 91);
}

TEST_CASE("coloured complexities") {
  auto v = v_stream("1/tau", "3-2sqrt2");
  CHECK(factor_complexity(v, 16, kBudget, upper_bound(Q("1/tau"), 16)).value == 185);
  CHECK(factor_complexity(v, 16, kBudget).value == 185);
  CHECK(abelian_complexity(v, 1, kBudget).value == 3);
  for (std::size_t n = 2; n <= 16; ++n) CHECK(abelian_complexity(v, n, kBudget).value == 4);

  auto w = v_stream("3-2sqrt2", "1/tau");
  CHECK(abelian_complexity(w, 5, kBudget).value == 3);
  CHECK(abelian_complexity(w, 6, kBudget).value == 4);

  auto dep = v_stream("1/tau", "1/tau^2");
  CHECK(factor_complexity(dep, 16, kBudget).value == 18);
}

TEST_CASE("upper bound") {
  CHECK(upper_bound(Q("1/tau"), 16) == 185);
  CHECK(upper_bound(Q("3-2sqrt2"), 12) == 41);
}

TEST_CASE("budget handling") {
  auto v = v_stream("1/tau", "3-2sqrt2");
  auto r = factor_complexity(v, 40, 100);
  CHECK_FALSE(r.stable);
  CHECK(r.prefix_length == 100);
  CHECK_THROWS_AS(factor_complexity(v, 200, 100), DomainError);

  ::setenv("BALWORD_BUDGET", "12345", 1);
  CHECK(default_budget() == 12345);
  ::setenv("BALWORD_BUDGET", "lots", 1);
  CHECK_THROWS_AS(default_budget(), DomainError);
  ::unsetenv("BALWORD_BUDGET");
  CHECK(default_budget() == (std::size_t{1} << 23));
}

TEST_CASE("balance scans") {
  Word u = iet_prefix(IetParams(Q("2-sqrt3")), 10000);
  auto bu = balance_scan(u.symbols(), 2, 500);
  CHECK(bu.balance_constant() <= 1);

  auto v = v_stream("1/tau", "3-2sqrt2");
  auto b5 = balance_scan(v.prefix(5000), 3, 500);
  auto b10 = balance_scan(v.prefix(10000), 3, 500);
  CHECK(b5.balance_constant() == 2);
  CHECK(b10.balance_constant() == 2);
  CHECK(b10.spread[1] == std::array<std::uint64_t, 3>{1, 1, 1});
  CHECK_THROWS_AS(balance_scan(v.prefix(10), 3, 11), DomainError);
}

TEST_CASE("attainment") {
  auto t1 = attainment_check(Q("1/tau"), Q("3-2sqrt2"), 16, kBudget);
  CHECK(t1.independence == Independence::independent);
  CHECK_FALSE(t1.caveat);
  CHECK(t1.all_attained());
  auto t2 = attainment_check(Q("3-2sqrt2"), Q("1/tau"), 16, kBudget);
  CHECK(t2.all_attained());
  auto dep = attainment_check(Q("1/tau"), Q("1/tau^2"), 16, kBudget);
  CHECK(dep.caveat);
  for (const auto& r : dep.rows) CHECK(r.bound_attained == (r.n == 1));
}

TEST_CASE("property: no stage of the doubling exceeds the bound") {
  for (auto [a, g] : {std::pair{"1/tau", "3-2sqrt2"}, std::pair{"3-2sqrt2", "1/tau"}, std::pair{"1/tau", "1/tau^2"}}) {
    auto v = v_stream(a, g);
    for (std::size_t len = 512; len <= 32768; len *= 2) {
      auto pre = v.prefix(len);
      for (std::size_t n = 1; n <= 24; ++n) REQUIRE(count_distinct_factors(pre, n) <= upper_bound(Q(a), n));
    }
  }
}

TEST_CASE("property: abelian profile in independent runs") {
  for (auto [a, g] : {std::pair{"1/tau", "3-2sqrt2"}, std::pair{"3-2sqrt2", "1/tau"}}) {
    auto v = v_stream(a, g);
    const QuadNum inv = Q(a).inverse();
    const auto lo = static_cast<std::size_t>(floor(inv).to_int64().value());
    for (std::size_t n = 1; n <= 30; ++n) {
      auto r = abelian_complexity(v, n, kBudget);
      REQUIRE(r.value == (n <= lo ? 3u : 4u));
      REQUIRE(r.value <= 4);
    }
  }
}
