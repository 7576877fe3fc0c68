#pragma once

#include <cstdint>
#include <optional>

#include "balword/biquad.hpp"
#include "balword/colouring.hpp"
#include "balword/quadnum.hpp"
#include "balword/word.hpp"

namespace balword {

/// Point of [0,1)^2; x lives in the field of alpha, y in the field of gamma.
struct RectPoint {
  QuadNum x;
  QuadNum y;
  friend bool operator==(const RectPoint&, const RectPoint&) = default;
};

/// Rectangle exchange on [0,1)^2:
///   S(x, y) = (x + alpha mod 1, y)            on R1 = [0, 1-alpha) x [0,1)
///   S(x, y) = (x + alpha mod 1, y + gamma mod 1) on R2 u R3 = [1-alpha, 1) x [0,1),
/// with R2 = [1-alpha,1) x [0,1-gamma) and R3 = [1-alpha,1) x [1-gamma,1).
class RectParams {
 public:
  RectParams(QuadNum alpha, QuadNum gamma);
  explicit RectParams(const ColouringParams& c) : RectParams(c.alpha(), c.gamma()) {}

  const QuadNum& alpha() const { return alpha_; }
  const QuadNum& gamma() const { return gamma_; }
  const QuadNum& x_threshold() const { return x_threshold_; }  // 1 - alpha
  const QuadNum& y_threshold() const { return y_threshold_; }  // 1 - gamma

  /// Index of the rectangle containing pt (kColour1..kColour3).
  Letter cell(const RectPoint& pt) const;
  void check_point(const RectPoint& pt) const;

 private:
  QuadNum alpha_;
  QuadNum gamma_;
  QuadNum x_threshold_;
  QuadNum y_threshold_;
};

RectPoint rect_step(const RectParams& p, const RectPoint& pt);

/// Letter k is i iff S^k(start) lies in R_i.
Word rect_coding(const RectParams& p, const RectPoint& start, std::size_t n);

/// S^n(0,0) = (frac(n alpha), frac(gamma floor(n alpha))), evaluated directly.
RectPoint orbit_closed_form(const RectParams& p, std::uint64_t n);

/// Streaming orbit: yields the cell of the current point, then steps.
class RectOrbit {
 public:
  RectOrbit(const RectParams& p, RectPoint start);
  Letter next();
  const RectPoint& point() const { return pt_; }

 private:
  RectParams params_;
  RectPoint pt_;
};

LetterGenerator rect_generator(const RectParams& p, RectPoint start);

enum class ConjugacyOutcome { holds, fails, flagged };

/// Evaluates Phi(R_theta(pt)) == S(Phi(pt)) exactly, with Phi(x,y) = (x, y - gamma x mod 1)
/// and R_theta the torus rotation by (alpha, alpha gamma). Points with x == 1 - alpha sit
/// on the branch boundary of S and are reported as flagged.
///
/// This overload is for alpha and gamma from two different quadratic fields.
ConjugacyOutcome conjugacy_check(const RectParams& p, const BiQuadNum& x, const BiQuadNum& y);
/// Same-field (or rational) parameters.
ConjugacyOutcome conjugacy_check(const RectParams& p, const QuadNum& x, const QuadNum& y);

/// Whether 1, alpha, alpha*gamma are rationally independent, judged structurally:
/// two irrationals from distinct quadratic fields are independent, a rational slope is
/// dependent, and anything else is unknown.
enum class Independence { independent, dependent, unknown };
Independence structural_independence(const QuadNum& alpha, const QuadNum& gamma);

/// Half-open interval [lo, hi) with exact endpoints.
struct HalfOpen {
  QuadNum lo;
  QuadNum hi;
  bool contains(const QuadNum& v) const { return v >= lo && v < hi; }
};

/// Smallest m <= max_steps with S^m(0,0) in xcell x ycell, or nullopt. Sound, not complete.
std::optional<std::uint64_t> witness_search(const RectParams& p, const HalfOpen& xcell,
                                            const HalfOpen& ycell, std::uint64_t max_steps);

}  // namespace balword
