#include <doctest.h>

#include "balword/complexity.hpp"
#include "balword/numeration.hpp"
#include "balword/tables.hpp"

using namespace balword;

TEST_CASE("every stored table regenerates without mismatches") {
  for (const auto& name : table_names()) {
    TableRun run = regenerate_table(name, std::size_t{1} << 20);
    CHECK_MESSAGE(run.mismatches.empty(), name);
    CHECK(!run.rows.empty());
  }
}

TEST_CASE("errata annotations sit on the two corrected cells") {
  std::vector<std::uint64_t> flagged;
  for (const auto& row : fixtures::kUexpM4) {
    if (!row.printed.empty()) flagged.push_back(row.n);
  }
  CHECK(flagged == std::vector<std::uint64_t>{15, 22});
  // The printed strings are not greedy expansions.
  CHECK_FALSE(is_greedy_expansion(4, DigitString::parse("33")));
  CHECK(u_decode(4, DigitString::parse("112")) == 21);
}

TEST_CASE("regenerated TSV ends with the last stored row") {
  TableRun run = regenerate_table("palpha-2-sqrt3", 0);
  CHECK(run.mismatches.empty());
  CHECK(run.tsv().rfind("10\t0.6795\t8\n") != std::string::npos);
}
