#include "balword/numeration.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "balword/errors.hpp"

namespace balword {

DigitString DigitString::parse(std::string_view text) {
  DigitString d;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError("digit string may only contain 0-9");
    d.digits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return d;
}

std::string DigitString::str() const {
  std::string s;
  for (auto d : digits) {
    if (d > 9) throw DomainError("digit > 9 has no single-character form");
    s.push_back(static_cast<char>('0' + d));
  }
  return s;
}

DigitString DigitString::reversed() const {
  return DigitString{std::vector<std::uint8_t>(digits.rbegin(), digits.rend())};
}

USequence::USequence(int m) : m_(m) {
  if (m < 3) throw DomainError("recurrence parameter m must be >= 3");
  values_ = {0, 1};
  for (;;) {
    std::int64_t next;
    std::int64_t a = values_.back();
    std::int64_t b = values_[values_.size() - 2];
    if (__builtin_mul_overflow(a, static_cast<std::int64_t>(m), &next)) break;
    next -= b;
    values_.push_back(next);
  }
}

std::int64_t USequence::operator()(int k) const {
  if (k < -1 || k > max_index()) {
    throw std::out_of_range("U_" + std::to_string(k) + " exceeds the 64-bit table");
  }
  return values_[static_cast<std::size_t>(k + 1)];
}

std::int64_t u_value(int m, int k) { return USequence(m)(k); }

DigitString u_expand(int m, std::uint64_t n) {
  USequence u(m);
  if (n > static_cast<std::uint64_t>(u(u.max_index()))) throw DomainError("n too large");
  int top = 0;
  while (top + 1 <= u.max_index() && static_cast<std::uint64_t>(u(top + 1)) <= n) ++top;
  DigitString out;
  std::uint64_t rest = n;
  for (int k = top; k >= 0; --k) {
    auto uk = static_cast<std::uint64_t>(u(k));
    auto digit = static_cast<std::uint8_t>(rest / uk);
    rest -= digit * uk;
    if (!out.digits.empty() || digit != 0) out.digits.push_back(digit);
  }
  return out;
}

std::uint64_t u_decode(int m, const DigitString& digits) {
  USequence u(m);
  std::uint64_t total = 0;
  const int len = static_cast<int>(digits.size());
  for (int i = 0; i < len; ++i) {
    std::uint8_t d = digits.digits[static_cast<std::size_t>(i)];
    if (d >= m) throw DomainError("digit " + std::to_string(d) + " >= m = " + std::to_string(m));
    auto uk = static_cast<std::uint64_t>(u(len - 1 - i));
    std::uint64_t term;
    if (__builtin_mul_overflow(static_cast<std::uint64_t>(d), uk, &term) ||
        __builtin_add_overflow(total, term, &total)) {
      throw DomainError("U-representation value overflows 64 bits");
    }
  }
  return total;
}

bool is_admissible(int m, const DigitString& digits) {
  const int top = m - 1;
  const int mid = m - 2;
  bool armed = false;  // saw (m-1) followed only by (m-2)'s
  for (auto d : digits.digits) {
    if (d >= m) throw DomainError("digit " + std::to_string(d) + " >= m = " + std::to_string(m));
    if (d == top) {
      if (armed) return false;
      armed = true;
    } else if (d != mid) {
      armed = false;
    }
  }
  return true;
}

bool is_greedy_expansion(int m, const DigitString& digits) {
  if (digits.empty()) return true;
  if (digits.digits.front() == 0) return false;
  USequence u(m);
  std::uint64_t suffix = 0;
  const int len = static_cast<int>(digits.size());
  for (int k = 0; k < len; ++k) {
    std::uint8_t d = digits.digits[static_cast<std::size_t>(len - 1 - k)];
    if (d >= m) return false;
    suffix += d * static_cast<std::uint64_t>(u(k));
    if (suffix >= static_cast<std::uint64_t>(u(k + 1))) return false;
  }
  return true;
}

ParryUnit::ParryUnit(int m) : m_(m), u_(m) {
  QuadNum mm(m);
  beta_ = (mm + QuadNum::sqrt(static_cast<std::int64_t>(m) * m - 4)) / QuadNum(2);
  alpha_ = mm - beta_;
  if (!(beta_ * beta_ == mm * beta_ - QuadNum(1)) || !(alpha_ * beta_ == QuadNum(1))) {
    throw std::logic_error("beta is not a root of x^2 - m x + 1");
  }
}

std::optional<int> parry_family_parameter(const QuadNum& alpha) {
  if (alpha.is_rational() || alpha.sign() <= 0 || alpha >= QuadNum(1)) return std::nullopt;
  QuadNum s = alpha + alpha.inverse();
  if (!s.is_rational() || !s.a().is_integer()) return std::nullopt;
  auto m = s.a().num().to_int64();
  if (!m || *m < 3 || *m > std::numeric_limits<int>::max()) return std::nullopt;
  return static_cast<int>(*m);
}

std::vector<std::uint8_t> beta_expand(const ParryUnit& pu, const QuadNum& x, std::size_t count) {
  if (x.sign() < 0 || x >= QuadNum(1)) throw DomainError("beta-expansion needs x in [0,1)");
  std::vector<std::uint8_t> out;
  out.reserve(count);
  QuadNum t = x;
  for (std::size_t i = 0; i < count; ++i) {
    QuadNum bx = pu.beta() * t;
    Integer a = floor(bx);
    out.push_back(static_cast<std::uint8_t>(a.to_int64().value()));
    t = bx - QuadNum(Rational(a));
  }
  return out;
}

bool below_quasi_greedy(const ParryUnit& pu, std::span<const std::uint8_t> digits) {
  for (std::size_t i = 0; i < digits.size(); ++i) {
    for (std::size_t j = i; j < digits.size(); ++j) {
      int ref = pu.dstar_digit(j - i + 1);
      if (digits[j] < ref) break;
      if (digits[j] > ref) return false;
    }
  }
  return true;
}

ShiftIdentity shift_identity(const ParryUnit& pu, std::uint64_t n) {
  if (n < 1) throw DomainError("shift identity needs n >= 1");
  ShiftIdentity out;
  QuadNum t = QuadNum(static_cast<std::int64_t>(n)) * pu.alpha();
  Integer q = floor(t);
  out.integer_part = static_cast<std::uint64_t>(q.to_int64().value());
  DigitString expansion = u_expand(pu.m(), n);
  constexpr std::size_t kTrailingZeros = 8;
  out.fraction_digits = beta_expand(pu, t - QuadNum(Rational(q)), expansion.size() + kTrailingZeros);

  DigitString head = expansion;
  head.digits.pop_back();
  out.integer_part_matches = u_expand(pu.m(), out.integer_part) == head;

  std::vector<std::uint8_t> expected = expansion.reversed().digits;
  expected.resize(expansion.size() + kTrailingZeros, 0);
  out.fraction_matches = out.fraction_digits == expected;
  return out;
}

std::uint64_t palpha_symbolic(const ParryUnit& pu, std::uint64_t n) {
  if (n < 1) throw DomainError("P_alpha is defined for n >= 1");
  DigitString e = u_expand(pu.m(), n);
  // a[i] is the coefficient of U_i.
  std::vector<std::uint8_t> a(e.digits.rbegin(), e.digits.rend());
  std::uint64_t total = a[0];
  DigitString low;  // a_0 a_1 ... a_{i-1}, a_0 most significant
  for (std::size_t i = 1; i < a.size(); ++i) {
    low.digits.push_back(a[i - 1]);
    std::uint64_t r = u_decode(pu.m(), low);
    total += a[i] * (r + 1);
  }
  return total;
}

}  // namespace balword
