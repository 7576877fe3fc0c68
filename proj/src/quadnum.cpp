#include "balword/quadnum.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "balword/biquad.hpp"
#include "balword/errors.hpp"

namespace balword {

QuadNum::QuadNum(const Rational& v) : p_(v.num()), r_(v.den()) {}

QuadNum::QuadNum(Integer p, Integer q, Integer r, std::int64_t d)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(d) {
  normalize();
}

void QuadNum::normalize() {
  if (r_.sign() < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
  if (q_.is_zero()) d_ = kRationalField;
  if (r_ == Integer(1)) return;
  Integer g = gcd(gcd(p_, q_), r_);
  if (!(g == Integer(1))) {
    p_ = div_exact(p_, g);
    q_ = div_exact(q_, g);
    r_ = div_exact(r_, g);
  }
}

QuadNum QuadNum::from_parts(const Rational& a, const Rational& b, std::int64_t d) {
  if (b.sign() == 0) return QuadNum(a);
  if (!is_square_free(d) || d < 2) {
    throw DomainError("quadratic field needs a square-free d >= 2, got " + std::to_string(d));
  }
  Integer r = a.den() * b.den();
  return QuadNum(a.num() * b.den(), b.num() * a.den(), r, d);
}

QuadNum QuadNum::sqrt(std::int64_t n) {
  if (n < 0) throw DomainError("sqrt of a negative integer");
  if (n == 0) return QuadNum();
  auto [root, core] = split_square_free(n);
  if (core == 1) return QuadNum(root);
  return QuadNum(Integer(0), Integer(root), Integer(1), core);
}

std::int64_t QuadNum::joint_field(const QuadNum& o) const {
  if (d_ == kRationalField) return o.d_;
  if (o.d_ == kRationalField || o.d_ == d_) return d_;
  throw FieldMismatch("arithmetic across fields Q(sqrt" + std::to_string(d_) + ") and Q(sqrt" +
                      std::to_string(o.d_) + ")");
}

int QuadNum::sign() const {
  int sp = p_.sign();
  int sq = q_.sign();
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: |p| vs |q|*sqrt(d), decided by squaring. Never equal.
  return (p_ * p_ > q_ * q_ * Integer(d_)) ? sp : sq;
}

QuadNum QuadNum::conj() const { return QuadNum(p_, -q_, r_, d_); }

QuadNum QuadNum::inverse() const {
  if (p_.is_zero() && q_.is_zero()) throw DomainError("division by zero");
  // r / (p + q sqrt d) = r (p - q sqrt d) / (p^2 - q^2 d)
  Integer norm = p_ * p_ - q_ * q_ * Integer(d_);
  return QuadNum(r_ * p_, -(r_ * q_), norm, d_);
}

QuadNum QuadNum::operator-() const { return QuadNum(-p_, -q_, r_, d_); }

QuadNum& QuadNum::operator+=(const QuadNum& o) {
  d_ = joint_field(o);
  if (r_ == o.r_) {
    p_ += o.p_;
    q_ += o.q_;
  } else {
    p_ = p_ * o.r_ + o.p_ * r_;
    q_ = q_ * o.r_ + o.q_ * r_;
    r_ *= o.r_;
  }
  normalize();
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
  d_ = joint_field(o);
  if (r_ == o.r_) {
    p_ -= o.p_;
    q_ -= o.q_;
  } else {
    p_ = p_ * o.r_ - o.p_ * r_;
    q_ = q_ * o.r_ - o.q_ * r_;
    r_ *= o.r_;
  }
  normalize();
  return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
  std::int64_t d = joint_field(o);
  Integer p = p_ * o.p_ + q_ * o.q_ * Integer(d);
  Integer q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  r_ *= o.r_;
  d_ = d;
  normalize();
  return *this;
}

std::strong_ordering compare(const QuadNum& x, const QuadNum& y) {
  int s;
  if (x.is_rational() || y.is_rational() || x.field() == y.field()) {
    s = (x - y).sign();
  } else {
    std::int64_t d1 = std::min(x.field(), y.field());
    std::int64_t d2 = std::max(x.field(), y.field());
    s = (BiQuadNum::lift(x, d1, d2) - BiQuadNum::lift(y, d1, d2)).sign();
  }
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) { return compare(x, y); }

Integer floor(const QuadNum& x) {
  if (x.q().is_zero()) return floor_div(x.p(), x.r());
  // q*sqrt(d) lies strictly between consecutive integers t and t+1 (resp. -t-1, -t).
  Integer t = isqrt(x.q() * x.q() * Integer(x.field()));
  Integer lower = x.q().sign() > 0 ? x.p() + t : x.p() - t - Integer(1);
  return floor_div(lower, x.r());
}

QuadNum frac(const QuadNum& x) { return x - QuadNum(Rational(floor(x))); }

std::string decimal_string(const QuadNum& x, int digits) {
  Integer scale(1);
  for (int i = 0; i < digits; ++i) scale *= Integer(10);
  Integer scaled = floor(x * QuadNum(Rational(scale)) + QuadNum(Rational(1, 2)));
  bool negative = scaled.sign() < 0;
  std::string s = abs(scaled).str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + s : s;
}

QuadNum golden_mean() {
  return QuadNum::from_parts(Rational(1, 2), Rational(1, 2), 5);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string squeeze(std::string_view text) {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s.push_back('-');
      i += 2;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(text[i]))) s.push_back(text[i]);
  }
  return s;
}

}  // namespace

QuadNum QuadNum::parse(std::string_view text) {
  std::string s = squeeze(text);
  if (s == "1/tau") return golden_mean().inverse();
  if (s == "1/tau^2") return (golden_mean() * golden_mean()).inverse();
  if (s == "2-sqrt3") return QuadNum(2) - QuadNum::sqrt(3);
  if (s == "3-2sqrt2") return QuadNum(3) - QuadNum(2) * QuadNum::sqrt(2);

  const std::string marker = "sqrt(";
  auto m = s.find(marker);
  try {
    if (m == std::string::npos) return QuadNum(Rational::parse(s));
    if (s.back() != ')') throw ParseError("missing ')'");
    std::string radicand = s.substr(m + marker.size(), s.size() - m - marker.size() - 1);
    auto d = Integer::parse(radicand).to_int64();
    if (!d || *d < 0) throw ParseError("radicand must be a non-negative 64-bit integer");
    std::string head = s.substr(0, m);
    bool implicit_one = head.empty() || head.back() == '+' || head.back() == '-';
    if (!implicit_one) {
      if (head.back() != '*') throw ParseError("expected '*' before sqrt");
      head.pop_back();
    }
    if (implicit_one) head += "1";
    // Split "<rat>(+|-)<rat>" at the last sign that is not the leading one.
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
      if (head[i] == '+' || head[i] == '-') {
        split = i;
        break;
      }
    }
    Rational a(0);
    Rational b(0);
    if (split == std::string::npos) {
      b = Rational::parse(head);
    } else {
      a = Rational::parse(head.substr(0, split));
      std::string coeff = head.substr(split + 1);
      if (coeff.empty() || coeff[0] == '+' || coeff[0] == '-') throw ParseError("doubled sign");
      b = Rational::parse(coeff);
      if (head[split] == '-') b = -b;
    }
    return QuadNum(a) + QuadNum(b) * QuadNum::sqrt(*d);
  } catch (const ParseError& e) {
    throw ParseError("cannot parse number '" + std::string(text) + "': " + e.what());
  }
}

std::string QuadNum::str() const {
  if (is_rational()) return a().str();
  Rational bb = b();
  std::string out = a().str();
  out += bb.sign() > 0 ? "+" : "-";
  out += (bb.sign() > 0 ? bb : -bb).str();
  out += "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const QuadNum& x) { return os << x.str(); }

}  // namespace balword
