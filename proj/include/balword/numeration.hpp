#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "balword/quadnum.hpp"

namespace balword {

/// Finite digit word, most significant digit first. The empty word encodes 0.
struct DigitString {
  std::vector<std::uint8_t> digits;

  static DigitString parse(std::string_view text);
  std::string str() const;
  std::size_t size() const { return digits.size(); }
  bool empty() const { return digits.empty(); }
  DigitString reversed() const;

  friend bool operator==(const DigitString&, const DigitString&) = default;
};

/// U_{-1} = 0, U_0 = 1, U_{k+1} = m U_k - U_{k-1}, tabulated up to the int64 limit.
/// Immutable after construction, so shared instances are safe to read concurrently.
class USequence {
 public:
  explicit USequence(int m);

  int m() const { return m_; }
  /// U_k for -1 <= k <= max_index(); throws std::out_of_range past the table.
  std::int64_t operator()(int k) const;
  int max_index() const { return static_cast<int>(values_.size()) - 2; }

 private:
  int m_;
  std::vector<std::int64_t> values_;  // values_[k + 1] = U_k
};

std::int64_t u_value(int m, int k);

/// Greedy U-expansion of n.
DigitString u_expand(int m, std::uint64_t n);
/// Value of any U-representation (admissible or not). Digits must be < m.
std::uint64_t u_decode(int m, const DigitString& digits);
/// No factor (m-1)(m-2)^{k-1}(m-1), k >= 1; checked with a two-state automaton.
bool is_admissible(int m, const DigitString& digits);
/// Nonzero leading digit and every suffix a_i..a_0 worth less than U_{i+1}.
bool is_greedy_expansion(int m, const DigitString& digits);

/// beta = (m + sqrt(m^2 - 4)) / 2, the larger root of x^2 - m x + 1, and alpha = 1/beta.
class ParryUnit {
 public:
  explicit ParryUnit(int m);

  int m() const { return m_; }
  const QuadNum& beta() const { return beta_; }
  const QuadNum& alpha() const { return alpha_; }
  /// Digit i (1-based) of the quasi-greedy expansion of 1, (m-1)(m-2)^omega.
  int dstar_digit(std::size_t i) const { return i == 1 ? m_ - 1 : m_ - 2; }
  const USequence& u() const { return u_; }

 private:
  int m_;
  QuadNum beta_;
  QuadNum alpha_;
  USequence u_;
};

/// m >= 3 with alpha == 1/beta_m, if alpha belongs to that family.
std::optional<int> parry_family_parameter(const QuadNum& alpha);

/// First `count` digits of the greedy beta-expansion of x in [0,1), via T(x) = beta x - floor(beta x).
std::vector<std::uint8_t> beta_expand(const ParryUnit& pu, const QuadNum& x, std::size_t count);

/// No shift of the digit prefix compares lexicographically above d*(1) = (m-1)(m-2)^omega.
/// A shift that agrees with d*(1) up to the end of the prefix is undecided and not reported;
/// pad finite expansions with zeros to decide them.
bool below_quasi_greedy(const ParryUnit& pu, std::span<const std::uint8_t> digits);

/// floor(n / beta) and the beta-expansion of frac(n / beta), with both identities checked:
/// (floor(n/beta))_U is (n)_U without its last digit, and the expansion is (n)_U reversed, then zeros.
struct ShiftIdentity {
  std::uint64_t integer_part = 0;
  std::vector<std::uint8_t> fraction_digits;
  bool integer_part_matches = false;
  bool fraction_matches = false;
};
ShiftIdentity shift_identity(const ParryUnit& pu, std::uint64_t n);

/// P_alpha(n) for alpha = 1/beta from the digits a_N..a_0 of (n)_U:
/// sum_{i>=1} a_i (r_i + 1) + a_0 where r_i has U-representation a_0 a_1 .. a_{i-1}.
std::uint64_t palpha_symbolic(const ParryUnit& pu, std::uint64_t n);

}  // namespace balword
