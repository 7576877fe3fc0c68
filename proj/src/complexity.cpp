#include "balword/complexity.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>

#include "balword/errors.hpp"
#include "balword/palpha.hpp"

namespace balword {

namespace {

constexpr std::size_t kInitialPrefix = 4096;
constexpr std::size_t kDefaultBudget = std::size_t{1} << 23;

struct U128Hash {
  std::size_t operator()(unsigned __int128 v) const noexcept {
    auto mix = [](std::uint64_t x) {
      x += 0x9e3779b97f4a7c15ULL;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
      return x ^ (x >> 31);
    };
    return mix(static_cast<std::uint64_t>(v) ^ mix(static_cast<std::uint64_t>(v >> 64)));
  }
};

template <typename Count>
CountResult stabilize(PrefixBuffer& src, std::size_t n, std::size_t budget,
                      std::optional<std::uint64_t> certificate, Count count) {
  if (n < 1) throw DomainError("window length must be >= 1");
  std::size_t len = std::max(kInitialPrefix, 4 * n);
  if (len > budget) len = budget;
  if (len < n) throw DomainError("budget smaller than the window length");
  CountResult r;
  r.value = count(src.prefix(len), n);
  r.prefix_length = len;
  if (certificate && r.value == *certificate) {
    r.stable = true;
    return r;
  }
  while (2 * len <= budget) {
    len *= 2;
    std::uint64_t v = count(src.prefix(len), n);
    bool same = v == r.value;
    r.value = v;
    r.prefix_length = len;
    if (same || (certificate && v == *certificate)) {
      r.stable = true;
      return r;
    }
  }
  return r;
}

}  // namespace

std::size_t default_budget() {
  if (const char* env = std::getenv("BALWORD_BUDGET")) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string_view(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("BALWORD_BUDGET is not a positive integer: ") + env);
  }
  return kDefaultBudget;
}

std::uint64_t count_distinct_factors(std::span<const Letter> w, std::size_t n) {
  if (n < 1) throw DomainError("window length must be >= 1");
  if (w.size() < n) return 0;
  if (n <= 64) {
    const unsigned __int128 mask =
        n == 64 ? ~static_cast<unsigned __int128>(0) : ((static_cast<unsigned __int128>(1) << (2 * n)) - 1);
    std::unordered_set<unsigned __int128, U128Hash> seen;
    seen.reserve(2 * (w.size() - n + 1));
    unsigned __int128 key = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      key = ((key << 2) | w[i]) & mask;
      if (i + 1 >= n) seen.insert(key);
    }
    return seen.size();
  }
  std::unordered_set<std::string_view> seen;
  const auto* base = reinterpret_cast<const char*>(w.data());
  for (std::size_t i = 0; i + n <= w.size(); ++i) seen.emplace(base + i, n);
  return seen.size();
}

std::uint64_t count_distinct_parikh(std::span<const Letter> w, std::size_t n) {
  if (n < 1) throw DomainError("window length must be >= 1");
  if (w.size() < n) return 0;
  std::array<std::uint64_t, 3> c{};
  for (std::size_t i = 0; i < n; ++i) ++c[w[i]];
  std::set<std::array<std::uint64_t, 3>> seen{c};
  for (std::size_t i = n; i < w.size(); ++i) {
    ++c[w[i]];
    --c[w[i - n]];
    seen.insert(c);
  }
  return seen.size();
}

CountResult factor_complexity(PrefixBuffer& src, std::size_t n, std::size_t budget,
                              std::optional<std::uint64_t> certificate) {
  return stabilize(src, n, budget, certificate, count_distinct_factors);
}

CountResult abelian_complexity(PrefixBuffer& src, std::size_t n, std::size_t budget,
                               std::optional<std::uint64_t> certificate) {
  return stabilize(src, n, budget, certificate, count_distinct_parikh);
}

std::uint64_t upper_bound(const QuadNum& alpha, std::uint64_t n) {
  auto fl = floor(QuadNum(static_cast<std::int64_t>(n)) * alpha).to_int64().value();
  return palpha_geometric(alpha, n) + (n + 1) * (static_cast<std::uint64_t>(fl) + 1);
}

std::uint64_t BalanceReport::balance_constant() const {
  return *std::max_element(max_spread.begin(), max_spread.end());
}

BalanceReport balance_scan(std::span<const Letter> w, std::size_t letters, std::size_t window_max) {
  if (letters < 1 || letters > 3) throw DomainError("alphabet size must be 1..3");
  if (window_max < 1 || window_max > w.size()) throw DomainError("window_max must be in 1..prefix length");
  std::vector<std::array<std::uint32_t, 3>> sums(w.size() + 1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    sums[i + 1] = sums[i];
    ++sums[i + 1][w[i]];
  }
  BalanceReport r;
  r.prefix_length = w.size();
  r.window_max = window_max;
  r.spread.assign(window_max + 1, {0, 0, 0});
  for (std::size_t len = 1; len <= window_max; ++len) {
    for (std::size_t l = 0; l < letters; ++l) {
      std::uint32_t lo = UINT32_MAX, hi = 0;
      for (std::size_t i = 0; i + len <= w.size(); ++i) {
        std::uint32_t c = sums[i + len][l] - sums[i][l];
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      r.spread[len][l] = hi - lo;
      r.max_spread[l] = std::max<std::uint64_t>(r.max_spread[l], hi - lo);
    }
  }
  return r;
}

std::vector<ComplexityReport> complexity_reports(const ColouringParams& p, std::uint64_t n_lo,
                                                 std::uint64_t n_hi, std::size_t budget) {
  if (n_lo < 1 || n_hi < n_lo) throw DomainError("need 1 <= n_lo <= n_hi");
  PrefixBuffer src(Alphabet::ternary, coloured_generator(p));
  std::vector<ComplexityReport> rows;
  for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
    ComplexityReport r;
    r.n = n;
    r.upper_bound = upper_bound(p.alpha(), n);
    CountResult f = factor_complexity(src, n, budget, r.upper_bound);
    CountResult a = abelian_complexity(src, n, budget);
    r.factor_count = f.value;
    r.factor_stable = f.stable;
    r.abelian_count = a.value;
    r.abelian_stable = a.stable;
    r.prefix_length_used = std::max(f.prefix_length, a.prefix_length);
    r.bound_attained = f.value == r.upper_bound;
    rows.push_back(r);
  }
  return rows;
}

bool AttainmentTable::all_attained() const {
  return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.bound_attained; });
}

AttainmentTable attainment_check(const QuadNum& alpha, const QuadNum& gamma, std::uint64_t n_max,
                                 std::size_t budget) {
  AttainmentTable t;
  t.independence = structural_independence(alpha, gamma);
  t.caveat = t.independence == Independence::unknown;
  t.rows = complexity_reports(ColouringParams(alpha, gamma), 1, n_max, budget);
  return t;
}

}  // namespace balword
