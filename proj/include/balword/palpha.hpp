#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "balword/quadnum.hpp"

namespace balword {

/// P_alpha(n) = #{1 <= k <= n : frac(k alpha) <= frac(n alpha)}, for irrational alpha in (0,1).
std::uint64_t palpha_geometric(const QuadNum& alpha, std::uint64_t n);

/// P_alpha(1..n_max) in one pass (exact sort of the fractional parts plus a Fenwick tree).
/// Entry 0 is unused and set to 0.
std::vector<std::uint64_t> palpha_geometric_range(const QuadNum& alpha, std::uint64_t n_max);

/// P_alpha(n) as the number of length-n factors of the intercept-0 coding with
/// ceil(n alpha) letters b.
std::uint64_t palpha_combinatorial(const QuadNum& alpha, std::uint64_t n);

/// Size of the other Parikh class: n + 1 - P_alpha(n).
std::uint64_t palpha_complement(const QuadNum& alpha, std::uint64_t n);

/// P_alpha(n+1) - P_alpha(n) for alpha = 1/beta_m, from the last digit b0 of (n+1)_U:
/// floor(n alpha) + 1 if b0 != 0, floor(n alpha) - n + 1 otherwise.
std::int64_t delta_palpha(const QuadNum& alpha, std::uint64_t n);

enum class PalphaMethod { geometric, combinatorial, symbolic };

PalphaMethod parse_palpha_method(std::string_view text);
std::string_view method_name(PalphaMethod m);

struct PalphaRecord {
  std::uint64_t n;
  std::uint64_t value;
  PalphaMethod method;
};

/// Dispatches to one method; symbolic requires alpha = 1/beta_m.
PalphaRecord palpha(const QuadNum& alpha, std::uint64_t n, PalphaMethod method);

}  // namespace balword
