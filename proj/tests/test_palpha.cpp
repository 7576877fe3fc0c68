#include <doctest.h>

#include "balword/errors.hpp"
#include "balword/numeration.hpp"
#include "balword/palpha.hpp"

using namespace balword;

namespace {

QuadNum Q(const char* s) { return QuadNum::parse(s); }

}  // namespace

TEST_CASE("geometric values") {
  CHECK(palpha_geometric(Q("2-sqrt3"), 4) == 1);
  std::vector<std::uint64_t> row;
  for (std::uint64_t n = 1; n <= 10; ++n) row.push_back(palpha_geometric(Q("2-sqrt3"), n));
  CHECK(row == std::vector<std::uint64_t>{1, 2, 3, 1, 3, 5, 7, 2, 5, 8});
  CHECK(palpha_geometric(Q("1/tau^2"), 24) == 5);
}

TEST_CASE("combinatorial values") {
  CHECK(palpha_combinatorial(Q("2-sqrt3"), 4) == 1);
  CHECK(palpha_combinatorial(Q("1/tau^2"), 3) == 1);
  CHECK(palpha_combinatorial(Q("1/tau^2"), 9) == 5);
}

TEST_CASE("complement") {
  CHECK(palpha_complement(Q("2-sqrt3"), 4) == 4);
  CHECK(palpha_complement(Q("1/tau^2"), 1) == 1);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(palpha_geometric(QuadNum(Rational(1, 3)), 4), UnsupportedRational);
  CHECK_THROWS_AS(palpha_geometric(Q("1/tau"), 0), DomainError);
  CHECK_THROWS_AS(palpha_geometric(golden_mean(), 3), DomainError);
  CHECK_THROWS_AS(delta_palpha(Q("1/tau"), 3), DomainError);
  CHECK_THROWS_AS(palpha(Q("1/tau"), 3, PalphaMethod::symbolic), DomainError);
  CHECK_THROWS_AS(parse_palpha_method("fast"), ParseError);
}

TEST_CASE("increment from the last digit of (n+1)_U") {
  CHECK(delta_palpha(Q("1/tau^2"), 3) == 2);
  CHECK(delta_palpha(Q("1/tau^2"), 2) == -1);
  for (int m : {3, 4, 5}) {
    QuadNum alpha = ParryUnit(m).alpha();
    auto p = palpha_geometric_range(alpha, 1001);
    for (std::uint64_t n = 1; n <= 1000; ++n) {
      REQUIRE(delta_palpha(alpha, n) == static_cast<std::int64_t>(p[n + 1]) - static_cast<std::int64_t>(p[n]));
    }
  }
}

TEST_CASE("property: batch geometric equals the single-n method") {
  for (const char* a : {"1/tau", "2-sqrt3", "3-2sqrt2", "1/tau^2"}) {
    auto batch = palpha_geometric_range(Q(a), 400);
    for (std::uint64_t n = 1; n <= 400; ++n) REQUIRE(batch[n] == palpha_geometric(Q(a), n));
  }
}

TEST_CASE("property: geometric equals combinatorial for n <= 60") {
  for (const char* a : {"1/tau", "2-sqrt3", "3-2sqrt2", "1/tau^2"}) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      REQUIRE(palpha_geometric(Q(a), n) == palpha_combinatorial(Q(a), n));
    }
  }
  QuadNum m4 = ParryUnit(4).alpha();
  for (std::uint64_t n = 1; n <= 60; ++n) REQUIRE(palpha_geometric(m4, n) == palpha_combinatorial(m4, n));
}

TEST_CASE("property: 1 <= P_alpha(n) <= n") {
  for (const char* a : {"1/tau", "2-sqrt3", "3-2sqrt2"}) {
    auto p = palpha_geometric_range(Q(a), 5000);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
      REQUIRE(p[n] >= 1);
      REQUIRE(p[n] <= n);
    }
  }
}

TEST_CASE("property: mirrored expansions share P_alpha") {
  CHECK(palpha_geometric(Q("1/tau^2"), 9) == palpha_geometric(Q("1/tau^2"), 24));
  for (int m : {3, 4}) {
    ParryUnit pu(m);
    auto p = palpha_geometric_range(pu.alpha(), 3000);
    for (std::uint64_t n = 1; n <= 3000; ++n) {
      DigitString e = u_expand(m, n);
      DigitString r = e.reversed();
      while (!r.empty() && r.digits.front() == 0) r.digits.erase(r.digits.begin());
      if (!is_admissible(m, r)) continue;
      std::uint64_t n2 = u_decode(m, r);
      if (n2 < 1 || n2 > 3000 || e.digits.back() == 0) continue;
      REQUIRE(p[n] == p[n2]);
    }
  }
}
