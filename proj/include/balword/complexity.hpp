#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "balword/colouring.hpp"
#include "balword/quadnum.hpp"
#include "balword/rectexch.hpp"
#include "balword/word.hpp"

namespace balword {

/// Letters to materialize before giving up on stabilization. Reads BALWORD_BUDGET if set.
std::size_t default_budget();

/// Count of distinct length-n windows of a finite word.
std::uint64_t count_distinct_factors(std::span<const Letter> w, std::size_t n);
/// Count of distinct Parikh vectors of length-n windows.
std::uint64_t count_distinct_parikh(std::span<const Letter> w, std::size_t n);

/// A count over a finite prefix. `stable` means two consecutive prefix lengths
/// (the second twice the first) agreed, or the count reached the supplied certificate.
struct CountResult {
  std::uint64_t value = 0;
  std::size_t prefix_length = 0;
  bool stable = false;
};

/// Factor complexity of the stream behind `src`, by doubling the prefix until the
/// count stops changing or `budget` letters are used.
CountResult factor_complexity(PrefixBuffer& src, std::size_t n, std::size_t budget,
                              std::optional<std::uint64_t> certificate = std::nullopt);
CountResult abelian_complexity(PrefixBuffer& src, std::size_t n, std::size_t budget,
                               std::optional<std::uint64_t> certificate = std::nullopt);

/// P_alpha(n) + (n+1)(floor(n alpha) + 1).
std::uint64_t upper_bound(const QuadNum& alpha, std::uint64_t n);

/// Per-letter spread (max minus min count over all windows of each length).
struct BalanceReport {
  std::size_t prefix_length = 0;
  std::size_t window_max = 0;
  std::vector<std::array<std::uint64_t, 3>> spread;  // spread[w], w = 1..window_max
  std::array<std::uint64_t, 3> max_spread{};
  /// Smallest C such that the prefix is C-balanced for every letter.
  std::uint64_t balance_constant() const;
};

BalanceReport balance_scan(std::span<const Letter> w, std::size_t letters, std::size_t window_max);

struct ComplexityReport {
  std::uint64_t n = 0;
  std::uint64_t factor_count = 0;
  std::uint64_t abelian_count = 0;
  std::uint64_t upper_bound = 0;
  bool bound_attained = false;
  std::size_t prefix_length_used = 0;
  bool factor_stable = false;
  bool abelian_stable = false;
};

/// Reports for n = n_lo..n_hi on colour(u_alpha, u_gamma), intercepts 0.
std::vector<ComplexityReport> complexity_reports(const ColouringParams& p, std::uint64_t n_lo,
                                                 std::uint64_t n_hi, std::size_t budget);

/// Whether C_v(n) equals the upper bound for every n <= n_max. `caveat` is set when
/// independence of 1, alpha, alpha*gamma could not be decided structurally.
struct AttainmentTable {
  Independence independence = Independence::unknown;
  bool caveat = false;
  std::vector<ComplexityReport> rows;
  bool all_attained() const;
};

AttainmentTable attainment_check(const QuadNum& alpha, const QuadNum& gamma, std::uint64_t n_max,
                                 std::size_t budget);

}  // namespace balword
