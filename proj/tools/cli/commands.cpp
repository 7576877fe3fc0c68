#include "commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "balword/colouring.hpp"
#include "balword/complexity.hpp"
#include "balword/errors.hpp"
#include "balword/numeration.hpp"
#include "balword/palpha.hpp"
#include "balword/rectexch.hpp"
#include "balword/sturmian.hpp"
#include "balword/tables.hpp"

namespace balword::cli {

namespace {

struct Range {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
};

std::uint64_t parse_count(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("expected a non-negative integer, got '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ParseError("integer out of range: " + text);
  }
}

/// `a` or `a..b`.
Range parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    std::uint64_t v = parse_count(text);
    return {v, v};
  }
  Range r{parse_count(text.substr(0, dots)), parse_count(text.substr(dots + 2))};
  if (r.hi < r.lo) throw ParseError("empty range " + text);
  return r;
}

struct RunConfig {
  std::string kind = "u";
  std::string alpha;
  std::string gamma;
  std::string rho1 = "0";
  std::string rho2 = "0";
  std::string n = "1";
  std::string method = "geometric";
  std::string which = "all";
  std::string out_dir;
  std::uint64_t len = 0;
  std::uint64_t window_max = 0;
  int m = 3;
  std::optional<std::size_t> budget;
};

std::size_t budget_of(const RunConfig& c) { return c.budget ? *c.budget : default_budget(); }

QuadNum param(const std::string& text, const char* name) {
  if (text.empty()) throw DomainError(std::string("--") + name + " is required");
  return QuadNum::parse(text);
}

class Tsv {
 public:
  explicit Tsv(std::ostream& os) : os_(os) {}
  template <typename... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((os_ << (first ? "" : "\t") << cells, first = false), ...);
    os_ << '\n';
  }

 private:
  std::ostream& os_;
};

int cmd_seq(const RunConfig& c, std::ostream& out) {
  LetterGenerator gen;
  Alphabet alphabet = Alphabet::binary;
  if (c.kind == "u") {
    gen = iet_generator(IetParams(param(c.alpha, "alpha"), QuadNum::parse(c.rho1)));
  } else if (c.kind == "paint") {
    alphabet = Alphabet::paint;
    gen = iet_generator(IetParams(param(c.gamma, "gamma"), QuadNum::parse(c.rho2)));
  } else if (c.kind == "v") {
    alphabet = Alphabet::ternary;
    gen = coloured_generator(ColouringParams(IetParams(param(c.alpha, "alpha"), QuadNum::parse(c.rho1)),
                                             IetParams(param(c.gamma, "gamma"), QuadNum::parse(c.rho2))));
  } else {
    throw DomainError("--kind must be u, paint or v");
  }
  if (c.len == 0) return kOk;
  std::string s;
  s.reserve(c.len);
  for (std::uint64_t i = 0; i < c.len; ++i) s.push_back(letter_char(alphabet, gen()));
  out << s << '\n';
  return kOk;
}

int cmd_palpha(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const QuadNum alpha = param(c.alpha, "alpha");
  const Range r = parse_range(c.n);
  if (r.lo < 1) throw DomainError("--n must start at 1 or later");
  if (alpha.is_rational()) throw UnsupportedRational("P_alpha needs irrational alpha");
  Tsv tsv(out);
  if (c.method != "all") {
    const PalphaMethod method = parse_palpha_method(c.method);
    palpha(alpha, r.lo, method);  // validates before any output
    tsv.row("n", "palpha");
    for (std::uint64_t n = r.lo; n <= r.hi; ++n) tsv.row(n, palpha(alpha, n, method).value);
    return kOk;
  }
  const bool symbolic = parry_family_parameter(alpha).has_value();
  int code = kOk;
  if (symbolic) {
    tsv.row("n", "geometric", "combinatorial", "symbolic", "agree");
  } else {
    tsv.row("n", "geometric", "combinatorial", "agree");
  }
  for (std::uint64_t n = r.lo; n <= r.hi; ++n) {
    auto g = palpha_geometric(alpha, n);
    auto k = palpha_combinatorial(alpha, n);
    bool agree = g == k;
    if (symbolic) {
      auto s = palpha(alpha, n, PalphaMethod::symbolic).value;
      agree = agree && g == s;
      tsv.row(n, g, k, s, agree ? "yes" : "no");
      if (!agree) err << "disagreement at n=" << n << ": geometric " << g << ", combinatorial " << k
                      << ", symbolic " << s << '\n';
    } else {
      tsv.row(n, g, k, agree ? "yes" : "no");
      if (!agree) err << "disagreement at n=" << n << ": geometric " << g << ", combinatorial " << k << '\n';
    }
    if (!agree) code = kDisagreement;
  }
  return code;
}

int cmd_uexp(const RunConfig& c, std::ostream& out) {
  const Range r = parse_range(c.n);
  if (c.m < 3 || c.m > 10) throw DomainError("--m must be in 3..10 for digit-string output");
  USequence check(c.m);
  Tsv tsv(out);
  tsv.row("n", "uexp");
  for (std::uint64_t n = r.lo; n <= r.hi; ++n) tsv.row(n, u_expand(c.m, n).str());
  return kOk;
}

int cmd_complexity(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const QuadNum alpha = param(c.alpha, "alpha");
  const QuadNum gamma = param(c.gamma, "gamma");
  const Range r = parse_range(c.n);
  if (r.lo < 1) throw DomainError("--n must start at 1 or later");
  if (alpha.is_rational()) throw UnsupportedRational("complexity needs irrational alpha");
  if (structural_independence(alpha, gamma) == Independence::unknown) {
    err << "note: independence of 1, alpha, alpha*gamma is not decided for these parameters\n";
  }
  auto rows = complexity_reports(ColouringParams(alpha, gamma), r.lo, r.hi, budget_of(c));
  Tsv tsv(out);
  tsv.row("n", "bound", "factor", "abelian", "attained");
  for (const auto& row : rows) {
    tsv.row(row.n, row.upper_bound, row.factor_count, row.abelian_count, row.bound_attained ? "yes" : "no");
    if (!row.factor_stable || !row.abelian_stable) {
      err << "note: n=" << row.n << " count not stabilized within " << row.prefix_length_used << " letters\n";
    }
  }
  return kOk;
}

int cmd_orbit(const RunConfig& c, std::ostream& out) {
  RectParams p(param(c.alpha, "alpha"), param(c.gamma, "gamma"));
  const Range r = parse_range(c.n);
  Tsv tsv(out);
  tsv.row("n", "x", "y", "cell");
  if (c.method == "closed") {
    for (std::uint64_t n = r.lo; n <= r.hi; ++n) {
      RectPoint pt = orbit_closed_form(p, n);
      tsv.row(n, pt.x.str(), pt.y.str(), static_cast<int>(p.cell(pt)) + 1);
    }
    return kOk;
  }
  if (c.method != "iterate") throw DomainError("--method must be iterate or closed for orbit");
  RectPoint pt{QuadNum(0), QuadNum(0)};
  for (std::uint64_t n = 0; n <= r.hi; ++n) {
    if (n >= r.lo) tsv.row(n, pt.x.str(), pt.y.str(), static_cast<int>(p.cell(pt)) + 1);
    pt = rect_step(p, pt);
  }
  return kOk;
}

int cmd_balance(const RunConfig& c, std::ostream& out) {
  if (c.len < 1 || c.window_max < 1 || c.window_max > c.len) {
    throw DomainError("need 1 <= --window-max <= --len");
  }
  std::vector<Letter> w;
  Alphabet alphabet;
  if (c.kind == "u") {
    alphabet = Alphabet::binary;
    auto s = iet_prefix(IetParams(param(c.alpha, "alpha"), QuadNum::parse(c.rho1)), c.len).symbols();
    w.assign(s.begin(), s.end());
  } else if (c.kind == "v") {
    alphabet = Alphabet::ternary;
    ColouringParams p(IetParams(param(c.alpha, "alpha"), QuadNum::parse(c.rho1)),
                      IetParams(param(c.gamma, "gamma"), QuadNum::parse(c.rho2)));
    auto s = coloured_prefix(p, c.len).symbols();
    w.assign(s.begin(), s.end());
  } else {
    throw DomainError("--kind must be u or v for balance");
  }
  const std::size_t letters = alphabet_size(alphabet);
  BalanceReport rep = balance_scan(w, letters, c.window_max);
  std::vector<std::string> header{"window"};
  for (std::size_t l = 0; l < letters; ++l) header.push_back(std::string("spread_") + letter_char(alphabet, static_cast<Letter>(l)));
  auto emit = [&](const std::string& first, const std::array<std::uint64_t, 3>& v) {
    out << first;
    for (std::size_t l = 0; l < letters; ++l) out << '\t' << v[l];
    out << '\n';
  };
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "\t" : "") << header[i];
  out << '\n';
  for (std::size_t n = 1; n <= c.window_max; ++n) emit(std::to_string(n), rep.spread[n]);
  emit("max", rep.max_spread);
  return kOk;
}

int cmd_tables(const RunConfig& c, std::ostream& out, std::ostream& err) {
  std::vector<std::string> names;
  if (c.which == "all") {
    names = table_names();
  } else {
    const auto& all = table_names();
    if (std::find(all.begin(), all.end(), c.which) == all.end()) {
      throw DomainError("unknown table '" + c.which + "'");
    }
    names = {c.which};
  }
  if (!c.out_dir.empty()) std::filesystem::create_directories(c.out_dir);
  int code = kOk;
  for (const auto& name : names) {
    TableRun run = regenerate_table(name, budget_of(c));
    if (c.out_dir.empty()) {
      if (names.size() > 1) out << "# " << name << '\n';
      out << run.tsv();
    } else {
      std::ofstream f(std::filesystem::path(c.out_dir) / (name + ".tsv"));
      if (!f) throw DomainError("cannot write into " + c.out_dir);
      f << run.tsv();
    }
    for (const auto& note : run.notes) err << name << ": " << note << '\n';
    for (const auto& mm : run.mismatches) {
      err << "mismatch " << mm.table << " n=" << mm.n << " " << mm.column << ": expected " << mm.expected
          << ", got " << mm.actual << '\n';
      code = kFixtureMismatch;
    }
  }
  return code;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Balanced ternary words from coloured Sturmian sequences", "balword"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_budget = [&](CLI::App* s) {
    s->add_option("--budget", c.budget, "maximum prefix length for counting (default BALWORD_BUDGET or 2^23)");
  };

  auto* seq = app.add_subcommand("seq", "print a prefix of u, the paint, or v");
  seq->add_option("--kind", c.kind, "u, paint or v")->check(CLI::IsMember({"u", "paint", "v"}));
  seq->add_option("--alpha", c.alpha, "slope of u");
  seq->add_option("--gamma", c.gamma, "slope of the paint");
  seq->add_option("--rho1", c.rho1, "intercept of u");
  seq->add_option("--rho2", c.rho2, "intercept of the paint");
  seq->add_option("--len", c.len, "number of letters")->required();

  auto* pal = app.add_subcommand("palpha", "tabulate P_alpha(n)");
  pal->add_option("--alpha", c.alpha)->required();
  pal->add_option("--n", c.n, "n or lo..hi")->required();
  pal->add_option("--method", c.method, "geometric, combinatorial, symbolic or all");

  auto* uexp = app.add_subcommand("uexp", "greedy U-expansions for U_{k+1} = m U_k - U_{k-1}");
  uexp->add_option("--m", c.m)->required();
  uexp->add_option("--n", c.n, "n or lo..hi")->required();

  auto* cx = app.add_subcommand("complexity", "factor and abelian complexity of v against the bound");
  cx->add_option("--alpha", c.alpha)->required();
  cx->add_option("--gamma", c.gamma)->required();
  cx->add_option("--n", c.n, "n or lo..hi")->required();
  add_budget(cx);

  auto* orbit = app.add_subcommand("orbit", "rectangle exchange orbit of (0,0)");
  orbit->add_option("--alpha", c.alpha)->required();
  orbit->add_option("--gamma", c.gamma)->required();
  orbit->add_option("--n", c.n, "n or lo..hi")->required();
  orbit->add_option("--method", c.method, "iterate or closed")->default_str("iterate");

  auto* bal = app.add_subcommand("balance", "per-letter spread over all windows of a prefix");
  bal->add_option("--kind", c.kind, "u or v")->check(CLI::IsMember({"u", "v"}));
  bal->add_option("--alpha", c.alpha)->required();
  bal->add_option("--gamma", c.gamma);
  bal->add_option("--rho1", c.rho1);
  bal->add_option("--rho2", c.rho2);
  bal->add_option("--len", c.len, "prefix length")->required();
  bal->add_option("--window-max", c.window_max)->required();

  auto* tab = app.add_subcommand("tables", "regenerate the reference tables and compare with fixtures");
  tab->add_option("--which", c.which, "table name or all");
  tab->add_option("--out", c.out_dir, "directory for <name>.tsv files (stdout if omitted)");
  add_budget(tab);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (orbit->parsed() && c.method == "geometric") c.method = "iterate";

  try {
    if (seq->parsed()) return cmd_seq(c, out);
    if (pal->parsed()) return cmd_palpha(c, out, err);
    if (uexp->parsed()) return cmd_uexp(c, out);
    if (cx->parsed()) return cmd_complexity(c, out, err);
    if (orbit->parsed()) return cmd_orbit(c, out);
    if (bal->parsed()) return cmd_balance(c, out);
    if (tab->parsed()) return cmd_tables(c, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace balword::cli
