#pragma once

#include <cstdint>
#include <set>
#include <utility>

#include "balword/quadnum.hpp"
#include "balword/word.hpp"

namespace balword {

inline constexpr Letter kLetterA = 0;
inline constexpr Letter kLetterB = 1;

/// Two-interval exchange x -> x + alpha mod 1 with I_a = [0, 1-alpha), I_b = [1-alpha, 1),
/// started at the intercept rho. Rational alpha gives a periodic coding.
class IetParams {
 public:
  explicit IetParams(QuadNum alpha, QuadNum rho = QuadNum(0));

  const QuadNum& alpha() const { return alpha_; }
  const QuadNum& rho() const { return rho_; }
  const QuadNum& threshold() const { return threshold_; }  // 1 - alpha
  bool periodic() const { return alpha_.is_rational(); }

 private:
  QuadNum alpha_;
  QuadNum rho_;
  QuadNum threshold_;
};

/// Letter n of the coding: b iff frac(n alpha + rho) >= 1 - alpha.
Letter iet_letter(const IetParams& p, std::uint64_t n);

Word iet_prefix(const IetParams& p, std::size_t n);

/// All n+1 factors of length n, one per cell of the partition of [0,1) cut at
/// T^-k(1 - alpha), k = 0..n-1. Requires irrational alpha.
std::set<Word> iet_language(const IetParams& p, std::size_t n);

/// Coding of x, T(x), ..., T^{n-1}(x).
Word iet_coding_from(const QuadNum& alpha, QuadNum x, std::size_t n);

/// The two Parikh vectors of length-n factors: first the one with ceil(n alpha) b's
/// (ceil/floor as in (floor((1-alpha)n), ceil(n alpha))), then the other one.
std::pair<ParikhVector, ParikhVector> sturmian_parikh_classes(const QuadNum& alpha, std::uint64_t n);

/// Streaming coding; one exact addition and comparison per letter.
class IetStream {
 public:
  explicit IetStream(const IetParams& p);
  Letter next();
  const QuadNum& position() const { return x_; }

 private:
  QuadNum alpha_;
  QuadNum threshold_;
  QuadNum x_;
};

LetterGenerator iet_generator(const IetParams& p);

}  // namespace balword
