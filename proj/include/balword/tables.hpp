#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "balword/quadnum.hpp"

namespace balword {

/// Reference values the library must reproduce.
namespace fixtures {

struct PalphaRow {
  std::uint64_t n;
  std::string_view frac;  // frac(n alpha), 4 decimals
  std::uint64_t palpha;
};
/// alpha = 2 - sqrt3, n = 1..10.
extern const std::vector<PalphaRow> kPalpha2MinusSqrt3;

struct UexpRow {
  std::uint64_t n;
  std::string_view expansion;
  std::uint64_t palpha;
  std::string_view printed;  // differing string from the source table, else empty
};
/// n = 1..29 for m = 3 and m = 4.
extern const std::vector<UexpRow> kUexpM3;
extern const std::vector<UexpRow> kUexpM4;

struct ComplexityRow {
  std::uint64_t n;
  std::uint64_t bound;
  std::uint64_t factor;
  std::uint64_t abelian;
};
struct ComplexityFixture {
  std::string_view alpha;
  std::string_view gamma;
  std::vector<ComplexityRow> rows;  // n = 1..16
};
extern const ComplexityFixture kComplexityT1;   // (1/tau, 3-2sqrt2)
extern const ComplexityFixture kComplexityT2;   // (3-2sqrt2, 1/tau)
extern const ComplexityFixture kComplexityDep;  // (1/tau, 1/tau^2)

}  // namespace fixtures

struct FixtureMismatch {
  std::string table;
  std::uint64_t n;
  std::string column;
  std::string expected;
  std::string actual;
};

/// A regenerated table as TSV cells, plus any disagreement with the stored fixture.
struct TableRun {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<FixtureMismatch> mismatches;
  std::vector<std::string> notes;
  std::string tsv() const;
};

/// palpha-2-sqrt3, palpha-m3, palpha-m4, uexp-m3, uexp-m4, complexity-t1, complexity-t2, complexity-dep.
const std::vector<std::string>& table_names();

TableRun regenerate_table(std::string_view name, std::size_t budget);

}  // namespace balword
