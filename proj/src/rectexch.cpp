#include "balword/rectexch.hpp"

#include <algorithm>
#include <memory>

#include "balword/errors.hpp"

namespace balword {

RectParams::RectParams(QuadNum alpha, QuadNum gamma)
    : alpha_(std::move(alpha)),
      gamma_(std::move(gamma)),
      x_threshold_(QuadNum(1) - alpha_),
      y_threshold_(QuadNum(1) - gamma_) {
  for (const QuadNum* v : {&alpha_, &gamma_}) {
    if (v->sign() <= 0 || *v >= QuadNum(1)) {
      throw DomainError("rectangle exchange parameters must lie in (0,1), got " + v->str());
    }
  }
}

void RectParams::check_point(const RectPoint& pt) const {
  if (pt.x.sign() < 0 || pt.x >= QuadNum(1) || pt.y.sign() < 0 || pt.y >= QuadNum(1)) {
    throw DomainError("point (" + pt.x.str() + ", " + pt.y.str() + ") is outside [0,1)^2");
  }
}

Letter RectParams::cell(const RectPoint& pt) const {
  if (pt.x < x_threshold_) return kColour1;
  return pt.y < y_threshold_ ? kColour2 : kColour3;
}

RectPoint rect_step(const RectParams& p, const RectPoint& pt) {
  RectPoint out = pt;
  const bool right = pt.x >= p.x_threshold();
  out.x += p.alpha();
  if (right) {
    out.x -= QuadNum(1);
    out.y += p.gamma();
    if (out.y >= QuadNum(1)) out.y -= QuadNum(1);
  }
  return out;
}

RectOrbit::RectOrbit(const RectParams& p, RectPoint start) : params_(p), pt_(std::move(start)) {
  params_.check_point(pt_);
}

Letter RectOrbit::next() {
  Letter l = params_.cell(pt_);
  pt_ = rect_step(params_, pt_);
  return l;
}

LetterGenerator rect_generator(const RectParams& p, RectPoint start) {
  auto orbit = std::make_shared<RectOrbit>(p, std::move(start));
  return [orbit] { return orbit->next(); };
}

Word rect_coding(const RectParams& p, const RectPoint& start, std::size_t n) {
  RectOrbit orbit(p, start);
  Word w(Alphabet::ternary);
  for (std::size_t i = 0; i < n; ++i) w.push_back(orbit.next());
  return w;
}

RectPoint orbit_closed_form(const RectParams& p, std::uint64_t n) {
  QuadNum t = QuadNum(static_cast<std::int64_t>(n)) * p.alpha();
  QuadNum k(Rational(floor(t)));
  return {t - k, frac(p.gamma() * k)};
}

// ---------------------------------------------------------------------------

namespace {

template <typename T>
struct ConjugacyField {
  T alpha, gamma, one;
  T embed(const QuadNum& v) const;
};

template <>
QuadNum ConjugacyField<QuadNum>::embed(const QuadNum& v) const {
  return v;
}

template <>
BiQuadNum ConjugacyField<BiQuadNum>::embed(const QuadNum& v) const {
  return BiQuadNum::lift(v, one.d1(), one.d2());
}

template <typename T>
ConjugacyOutcome check_conjugacy(const ConjugacyField<T>& f, const T& x, const T& y) {
  const T zero = f.embed(QuadNum(0));
  if (x < zero || x >= f.one || y < zero || y >= f.one) {
    throw DomainError("conjugacy test point outside [0,1)^2");
  }
  const T threshold = f.one - f.alpha;
  if (x == threshold) return ConjugacyOutcome::flagged;

  auto phi_y = [&](const T& px, const T& py) { return frac(py - f.gamma * px); };

  // Left side: Phi(R_theta(x, y)).
  const T rx = frac(x + f.alpha);
  const T ry = frac(y + f.alpha * f.gamma);
  const T left_x = rx;
  const T left_y = phi_y(rx, ry);

  // Right side: S(Phi(x, y)).
  const T py = phi_y(x, y);
  const T right_x = frac(x + f.alpha);
  const T right_y = x < threshold ? py : frac(py + f.gamma);

  return (left_x == right_x && left_y == right_y) ? ConjugacyOutcome::holds
                                                  : ConjugacyOutcome::fails;
}

}  // namespace

ConjugacyOutcome conjugacy_check(const RectParams& p, const BiQuadNum& x, const BiQuadNum& y) {
  if (x.d1() != y.d1() || x.d2() != y.d2()) throw FieldMismatch("point coordinates in different fields");
  ConjugacyField<BiQuadNum> f{BiQuadNum::lift(p.alpha(), x.d1(), x.d2()),
                              BiQuadNum::lift(p.gamma(), x.d1(), x.d2()),
                              BiQuadNum::lift(QuadNum(1), x.d1(), x.d2())};
  return check_conjugacy(f, x, y);
}

ConjugacyOutcome conjugacy_check(const RectParams& p, const QuadNum& x, const QuadNum& y) {
  ConjugacyField<QuadNum> f{p.alpha(), p.gamma(), QuadNum(1)};
  return check_conjugacy(f, x, y);
}

Independence structural_independence(const QuadNum& alpha, const QuadNum& gamma) {
  if (alpha.is_rational() || gamma.is_rational()) return Independence::dependent;
  if (alpha.field() != gamma.field()) return Independence::independent;
  return Independence::unknown;
}

std::optional<std::uint64_t> witness_search(const RectParams& p, const HalfOpen& xcell,
                                            const HalfOpen& ycell, std::uint64_t max_steps) {
  for (const HalfOpen* c : {&xcell, &ycell}) {
    if (!(c->lo < c->hi)) throw DomainError("empty search cell");
    if (c->lo.sign() < 0 || c->hi > QuadNum(1)) throw DomainError("search cell outside [0,1)");
  }
  for (std::uint64_t m = 0; m <= max_steps; ++m) {
    RectPoint pt = orbit_closed_form(p, m);
    if (xcell.contains(pt.x) && ycell.contains(pt.y)) return m;
  }
  return std::nullopt;
}

}  // namespace balword
