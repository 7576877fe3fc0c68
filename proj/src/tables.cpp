#include "balword/tables.hpp"

#include <algorithm>

#include "balword/complexity.hpp"
#include "balword/errors.hpp"
#include "balword/numeration.hpp"
#include "balword/palpha.hpp"

namespace balword {

namespace fixtures {

const std::vector<PalphaRow> kPalpha2MinusSqrt3 = {
    {1, "0.2679", 1}, {2, "0.5359", 2}, {3, "0.8038", 3}, {4, "0.0718", 1}, {5, "0.3397", 3},
    {6, "0.6077", 5}, {7, "0.8756", 7}, {8, "0.1436", 2}, {9, "0.4115", 5}, {10, "0.6795", 8},
};

const std::vector<UexpRow> kUexpM3 = {
    {1, "1", 1, ""},      {2, "2", 2, ""},      {3, "10", 1, ""},     {4, "11", 3, ""},
    {5, "12", 5, ""},     {6, "20", 2, ""},     {7, "21", 5, ""},     {8, "100", 1, ""},
    {9, "101", 5, ""},    {10, "102", 9, ""},   {11, "110", 3, ""},   {12, "111", 8, ""},
    {13, "112", 13, ""},  {14, "120", 5, ""},   {15, "121", 11, ""},  {16, "200", 2, ""},
    {17, "201", 9, ""},   {18, "202", 16, ""},  {19, "210", 5, ""},   {20, "211", 13, ""},
    {21, "1000", 1, ""},  {22, "1001", 10, ""}, {23, "1002", 19, ""}, {24, "1010", 5, ""},
    {25, "1011", 15, ""}, {26, "1012", 25, ""}, {27, "1020", 9, ""},  {28, "1021", 20, ""},
    {29, "1100", 3, ""},
};

const std::vector<UexpRow> kUexpM4 = {
    {1, "1", 1, ""},      {2, "2", 2, ""},       {3, "3", 3, ""},     {4, "10", 1, ""},
    {5, "11", 3, ""},     {6, "12", 5, ""},      {7, "13", 7, ""},    {8, "20", 2, ""},
    {9, "21", 5, ""},     {10, "22", 8, ""},     {11, "23", 11, ""},  {12, "30", 3, ""},
    {13, "31", 7, ""},    {14, "32", 11, ""},    {15, "100", 1, "33"}, {16, "101", 6, ""},
    {17, "102", 11, ""},  {18, "103", 16, ""},   {19, "110", 3, ""},  {20, "111", 9, ""},
    {21, "112", 15, ""},  {22, "113", 21, "112"}, {23, "120", 5, ""}, {24, "121", 12, ""},
    {25, "122", 19, ""},  {26, "123", 26, ""},   {27, "130", 7, ""},  {28, "131", 15, ""},
    {29, "132", 23, ""},
};

namespace {

std::vector<ComplexityRow> rows_from(const std::vector<std::uint64_t>& bound,
                                     const std::vector<std::uint64_t>& factor,
                                     const std::vector<std::uint64_t>& abelian) {
  std::vector<ComplexityRow> out;
  for (std::size_t i = 0; i < bound.size(); ++i) out.push_back({i + 1, bound[i], factor[i], abelian[i]});
  return out;
}

const std::vector<std::uint64_t> kBoundTau = {3, 7, 11, 17, 25, 33, 43, 53, 65, 79, 93, 109, 127, 145, 165, 185};
const std::vector<std::uint64_t> kBoundSilver = {3, 5, 7, 9, 11, 15, 19, 23, 27, 31, 35, 41, 47, 53, 59, 65};

}  // namespace

const ComplexityFixture kComplexityT1 = {
    "1/tau", "3-2sqrt2", rows_from(kBoundTau, kBoundTau, {3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4})};
const ComplexityFixture kComplexityT2 = {
    "3-2sqrt2", "1/tau",
    rows_from(kBoundSilver, kBoundSilver, {3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4})};
const ComplexityFixture kComplexityDep = {
    "1/tau", "1/tau^2",
    rows_from(kBoundTau, {3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18},
              {3, 3, 3, 4, 3, 3, 3, 3, 4, 3, 3, 4, 3, 3, 3, 3})};

}  // namespace fixtures

std::string TableRun::tsv() const {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += '\t';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {"palpha-2-sqrt3", "palpha-m3",     "palpha-m4",
                                                 "uexp-m3",        "uexp-m4",       "complexity-t1",
                                                 "complexity-t2",  "complexity-dep"};
  return names;
}

namespace {

void expect(TableRun& run, std::uint64_t n, const char* column, const std::string& expected,
            const std::string& actual) {
  if (expected != actual) run.mismatches.push_back({run.name, n, column, expected, actual});
}

TableRun palpha_2_sqrt3() {
  TableRun run{"palpha-2-sqrt3", {"n", "frac", "palpha"}, {}, {}, {}};
  const QuadNum alpha = QuadNum::parse("2-sqrt3");
  for (const auto& f : fixtures::kPalpha2MinusSqrt3) {
    std::string fr = decimal_string(frac(QuadNum(static_cast<std::int64_t>(f.n)) * alpha), 4);
    std::string p = std::to_string(palpha_geometric(alpha, f.n));
    expect(run, f.n, "frac", std::string(f.frac), fr);
    expect(run, f.n, "palpha", std::to_string(f.palpha), p);
    run.rows.push_back({std::to_string(f.n), fr, p});
  }
  return run;
}

TableRun parry_table(int m, bool palpha_column) {
  const auto& fx = m == 3 ? fixtures::kUexpM3 : fixtures::kUexpM4;
  TableRun run{(palpha_column ? "palpha-m" : "uexp-m") + std::to_string(m), {}, {}, {}, {}};
  run.header = palpha_column ? std::vector<std::string>{"n", "uexp", "symbolic", "geometric"}
                             : std::vector<std::string>{"n", "uexp", "printed"};
  ParryUnit pu(m);
  for (const auto& f : fx) {
    std::string e = u_expand(m, f.n).str();
    if (palpha_column) {
      std::string s = std::to_string(palpha_symbolic(pu, f.n));
      std::string g = std::to_string(palpha_geometric(pu.alpha(), f.n));
      expect(run, f.n, "symbolic", std::to_string(f.palpha), s);
      expect(run, f.n, "geometric", std::to_string(f.palpha), g);
      run.rows.push_back({std::to_string(f.n), e, s, g});
    } else {
      expect(run, f.n, "uexp", std::string(f.expansion), e);
      run.rows.push_back({std::to_string(f.n), e, std::string(f.printed)});
      if (!f.printed.empty()) {
        run.notes.push_back("n=" + std::to_string(f.n) + ": greedy expansion is " + e +
                            ", reference table prints " + std::string(f.printed));
      }
    }
  }
  return run;
}

TableRun complexity_table(std::string name, const fixtures::ComplexityFixture& fx, std::size_t budget) {
  TableRun run{std::move(name), {"n", "bound", "factor", "abelian", "attained"}, {}, {}, {}};
  const QuadNum alpha = QuadNum::parse(fx.alpha);
  const QuadNum gamma = QuadNum::parse(fx.gamma);
  auto reports = complexity_reports(ColouringParams(alpha, gamma), 1, fx.rows.size(), budget);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    const auto& f = fx.rows[i];
    expect(run, r.n, "bound", std::to_string(f.bound), std::to_string(r.upper_bound));
    expect(run, r.n, "factor", std::to_string(f.factor), std::to_string(r.factor_count));
    expect(run, r.n, "abelian", std::to_string(f.abelian), std::to_string(r.abelian_count));
    if (!r.factor_stable || !r.abelian_stable) {
      run.notes.push_back("n=" + std::to_string(r.n) + ": count did not stabilize within " +
                          std::to_string(r.prefix_length_used) + " letters");
    }
    run.rows.push_back({std::to_string(r.n), std::to_string(r.upper_bound), std::to_string(r.factor_count),
                        std::to_string(r.abelian_count), r.bound_attained ? "yes" : "no"});
  }
  return run;
}

}  // namespace

TableRun regenerate_table(std::string_view name, std::size_t budget) {
  if (name == "palpha-2-sqrt3") return palpha_2_sqrt3();
  if (name == "palpha-m3") return parry_table(3, true);
  if (name == "palpha-m4") return parry_table(4, true);
  if (name == "uexp-m3") return parry_table(3, false);
  if (name == "uexp-m4") return parry_table(4, false);
  if (name == "complexity-t1") return complexity_table("complexity-t1", fixtures::kComplexityT1, budget);
  if (name == "complexity-t2") return complexity_table("complexity-t2", fixtures::kComplexityT2, budget);
  if (name == "complexity-dep") return complexity_table("complexity-dep", fixtures::kComplexityDep, budget);
  throw DomainError("unknown table '" + std::string(name) + "'");
}

}  // namespace balword
