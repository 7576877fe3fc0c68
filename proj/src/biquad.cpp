#include "balword/biquad.hpp"

#include "balword/errors.hpp"

namespace balword {

namespace {

constexpr unsigned kStartPrecision = 32;
constexpr unsigned kMaxPrecision = 1u << 20;

}  // namespace

BiQuadNum::BiQuadNum(std::int64_t d1, std::int64_t d2) : d1_(d1), d2_(d2) {
  if (d1 == d2 || d1 < 2 || d2 < 2 || !is_square_free(d1) || !is_square_free(d2)) {
    throw DomainError("biquadratic field needs distinct square-free d1, d2 >= 2");
  }
}

BiQuadNum BiQuadNum::lift(const QuadNum& x, std::int64_t d1, std::int64_t d2) {
  BiQuadNum out(d1, d2);
  out.c_[0] = x.p();
  out.den_ = x.r();
  if (!x.is_rational()) {
    if (x.field() == d1) {
      out.c_[1] = x.q();
    } else if (x.field() == d2) {
      out.c_[2] = x.q();
    } else {
      throw FieldMismatch("cannot lift Q(sqrt" + std::to_string(x.field()) + ") into Q(sqrt" +
                          std::to_string(d1) + ", sqrt" + std::to_string(d2) + ")");
    }
  }
  return out;
}

BiQuadNum BiQuadNum::from_coefficients(const std::array<Rational, 4>& c, std::int64_t d1,
                                       std::int64_t d2) {
  BiQuadNum out(d1, d2);
  Integer den(1);
  for (const auto& r : c) den *= r.den();
  for (int i = 0; i < 4; ++i) out.c_[i] = div_exact(c[i].num() * den, c[i].den());
  out.den_ = den;
  out.normalize();
  return out;
}

std::array<Rational, 4> BiQuadNum::coefficients() const {
  return {Rational(c_[0], den_), Rational(c_[1], den_), Rational(c_[2], den_),
          Rational(c_[3], den_)};
}

void BiQuadNum::normalize() {
  Integer g = den_;
  for (const auto& c : c_) g = gcd(g, c);
  if (!(g == Integer(1))) {
    for (auto& c : c_) c = div_exact(c, g);
    den_ = div_exact(den_, g);
  }
}

void BiQuadNum::check_same(const BiQuadNum& o) const {
  if (d1_ != o.d1_ || d2_ != o.d2_) throw FieldMismatch("biquadratic fields differ");
}

bool BiQuadNum::is_zero() const {
  for (const auto& c : c_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::pair<Integer, Integer> BiQuadNum::enclosure(unsigned k) const {
  const std::array<Integer, 3> radicands{Integer(d1_), Integer(d2_), Integer(d1_) * Integer(d2_)};
  Integer lo = shift_left(c_[0], k);
  Integer hi = lo;
  for (int i = 0; i < 3; ++i) {
    const Integer& c = c_[i + 1];
    if (c.is_zero()) continue;
    // floor(sqrt(D) 2^k) < sqrt(D) 2^k < floor(...) + 1 since D is not a square.
    Integer s = isqrt(shift_left(radicands[i], 2 * k));
    Integer s1 = s + Integer(1);
    if (c.sign() > 0) {
      lo += c * s;
      hi += c * s1;
    } else {
      lo += c * s1;
      hi += c * s;
    }
  }
  return {lo, hi};
}

int BiQuadNum::sign() const {
  if (c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero()) return c_[0].sign();
  for (unsigned k = kStartPrecision; k <= kMaxPrecision; k *= 2) {
    auto [lo, hi] = enclosure(k);
    if (lo.sign() >= 0) return 1;
    if (hi.sign() <= 0) return -1;
  }
  throw std::logic_error("BiQuadNum::sign did not separate from zero");
}

std::strong_ordering operator<=>(const BiQuadNum& x, const BiQuadNum& y) {
  int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer floor(const BiQuadNum& x) {
  if (x.c_[1].is_zero() && x.c_[2].is_zero() && x.c_[3].is_zero()) {
    return floor_div(x.c_[0], x.den_);
  }
  // Irrational: refine until both enclosure ends share an integer part.
  for (unsigned k = kStartPrecision; k <= kMaxPrecision; k *= 2) {
    auto [lo, hi] = x.enclosure(k);
    Integer scale = shift_left(x.den_, k);
    Integer flo = floor_div(lo, scale);
    if (flo == floor_div(hi, scale)) return flo;
  }
  throw std::logic_error("floor(BiQuadNum) did not converge");
}

BiQuadNum frac(const BiQuadNum& x) {
  return x - BiQuadNum::lift(QuadNum(Rational(floor(x))), x.d1(), x.d2());
}

std::optional<QuadNum> BiQuadNum::to_quad() const {
  auto c = coefficients();
  const bool z1 = c_[1].is_zero(), z2 = c_[2].is_zero(), z3 = c_[3].is_zero();
  if (z1 && z2 && z3) return QuadNum(c[0]);
  if (z2 && z3) return QuadNum::from_parts(c[0], c[1], d1_);
  if (z1 && z3) return QuadNum::from_parts(c[0], c[2], d2_);
  if (z1 && z2) {
    return QuadNum(c[0]) + QuadNum(c[3]) * QuadNum::sqrt(d1_ * d2_);
  }
  return std::nullopt;
}

std::string BiQuadNum::str() const {
  static const char* names[] = {"", "sqrt(", "sqrt(", "sqrt("};
  const std::int64_t rad[] = {1, d1_, d2_, d1_ * d2_};
  auto c = coefficients();
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (c[i].sign() == 0 && !(i == 0 && is_zero())) continue;
    std::string term = (c[i].sign() < 0 ? -c[i] : c[i]).str();
    if (i > 0) term += "*" + std::string(names[i]) + std::to_string(rad[i]) + ")";
    if (out.empty()) {
      out = (c[i].sign() < 0 ? "-" : "") + term;
    } else {
      out += (c[i].sign() < 0 ? "-" : "+") + term;
    }
  }
  return out;
}

BiQuadNum BiQuadNum::operator-() const {
  BiQuadNum out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

BiQuadNum& BiQuadNum::operator+=(const BiQuadNum& o) {
  check_same(o);
  for (int i = 0; i < 4; ++i) c_[i] = c_[i] * o.den_ + o.c_[i] * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

BiQuadNum& BiQuadNum::operator-=(const BiQuadNum& o) { return *this += -o; }

BiQuadNum& BiQuadNum::operator*=(const BiQuadNum& o) {
  check_same(o);
  const Integer d1(d1_), d2(d2_), d12 = Integer(d1_) * Integer(d2_);
  const auto& a = c_;
  const auto& b = o.c_;
  // 1, e1 = sqrt d1, e2 = sqrt d2, e3 = sqrt(d1 d2):
  // e1 e2 = e3, e1 e3 = d1 e2, e2 e3 = d2 e1.
  std::array<Integer, 4> r{
      a[0] * b[0] + d1 * a[1] * b[1] + d2 * a[2] * b[2] + d12 * a[3] * b[3],
      a[0] * b[1] + a[1] * b[0] + d2 * (a[2] * b[3] + a[3] * b[2]),
      a[0] * b[2] + a[2] * b[0] + d1 * (a[1] * b[3] + a[3] * b[1]),
      a[0] * b[3] + a[3] * b[0] + a[1] * b[2] + a[2] * b[1]};
  c_ = std::move(r);
  den_ *= o.den_;
  normalize();
  return *this;
}

BiQuadNum BiQuadNum::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  // Conjugate away sqrt d2, then sqrt d1; what remains is rational.
  BiQuadNum conj2 = *this;
  conj2.c_[2] = -conj2.c_[2];
  conj2.c_[3] = -conj2.c_[3];
  BiQuadNum partial = *this * conj2;  // no sqrt d2, sqrt(d1 d2) terms
  BiQuadNum conj1 = partial;
  conj1.c_[1] = -conj1.c_[1];
  BiQuadNum norm = partial * conj1;  // rational
  BiQuadNum out = conj2 * conj1;
  // Divide by the rational norm = c0 / den.
  for (auto& c : out.c_) c *= norm.den_;
  out.den_ *= norm.c_[0];
  if (out.den_.sign() < 0) {
    for (auto& c : out.c_) c = -c;
    out.den_ = -out.den_;
  }
  out.normalize();
  return out;
}

}  // namespace balword
