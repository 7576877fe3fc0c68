#pragma once

#include <array>
#include <cstdint>
#include <variant>

#include "balword/biquad.hpp"
#include "balword/sturmian.hpp"
#include "balword/word.hpp"

namespace balword {

// Ternary letters 1, 2, 3 as alphabet indices.
inline constexpr Letter kColour1 = 0;
inline constexpr Letter kColour2 = 1;
inline constexpr Letter kColour3 = 2;

/// Colouring of a 2iet sequence u (slope alpha, intercept rho1) by the constant
/// sequence 1^omega on a-positions and a 2iet paint sequence over {2,3}
/// (slope gamma = frequency of 3, intercept rho2) on b-positions.
class ColouringParams {
 public:
  ColouringParams(IetParams base, IetParams paint) : base_(std::move(base)), paint_(std::move(paint)) {}
  ColouringParams(const QuadNum& alpha, const QuadNum& gamma)
      : ColouringParams(IetParams(alpha), IetParams(gamma)) {}

  const IetParams& base() const { return base_; }
  const IetParams& paint() const { return paint_; }
  const QuadNum& alpha() const { return base_.alpha(); }
  const QuadNum& gamma() const { return paint_.alpha(); }
  /// Rational slope on either side gives an eventually periodic v.
  bool periodic() const { return base_.periodic() || paint_.periodic(); }

 private:
  IetParams base_;
  IetParams paint_;
};

/// a-positions become 1; the k-th b becomes the k-th paint letter (2 or 3).
/// Throws InsufficientPaint if paint is shorter than |u|_b.
Word colour(const Word& u, const Word& paint);

/// 1 -> a, {2,3} -> b.
Word project_pi(const Word& v);
/// Erases 1, keeps 2 and 3.
Word project_Pi(const Word& v);

/// Index-based closed form: 1 iff frac(n alpha + rho1) < 1 - alpha; otherwise 2 or 3
/// according to frac(gamma k + rho2) against 1 - gamma with k = floor(n alpha + rho1),
/// the number of b's before position n.
Letter coloured_letter(const ColouringParams& p, std::uint64_t n);

/// Lazy single-pass colouring of the two 2iet streams.
class ColouredStream {
 public:
  explicit ColouredStream(const ColouringParams& p) : base_(p.base()), paint_(p.paint()) {}
  Letter next() {
    return base_.next() == kLetterA ? kColour1 : static_cast<Letter>(paint_.next() + 1);
  }

 private:
  IetStream base_;
  IetStream paint_;
};

LetterGenerator coloured_generator(const ColouringParams& p);
Word coloured_prefix(const ColouringParams& p, std::size_t n);

/// Parameters whose coloured sequence has letter frequencies (f1, f2, f3):
/// alpha = 1 - f1, gamma = f3 / alpha. Inputs must be positive and sum to 1.
ColouringParams from_frequencies(const QuadNum& f1, const QuadNum& f2, const QuadNum& f3);
/// Same, for frequencies mixing two quadratic fields; alpha and gamma must each
/// land in a single quadratic field.
ColouringParams from_frequencies(const BiQuadNum& f1, const BiQuadNum& f2, const BiQuadNum& f3);

/// Exact letter frequencies (1 - alpha, alpha (1 - gamma), alpha gamma) of the coloured sequence.
class FrequencyVector {
 public:
  explicit FrequencyVector(const ColouringParams& p);

  /// |count - f(letter) * length| <= bound, decided exactly.
  bool deviation_within(Letter letter, std::uint64_t count, std::uint64_t length,
                        std::int64_t bound) const;
  std::string str(Letter letter) const;

 private:
  std::variant<std::array<QuadNum, 3>, std::array<BiQuadNum, 3>> f_;
};

}  // namespace balword
