#include "balword/integer.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>

#include "balword/errors.hpp"

namespace balword {

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();

mpz_class to_big(std::int64_t v) {
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

}  // namespace

Integer::Integer(const mpz_class& v) { assign(v); }

void Integer::assign(mpz_class v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    rep_ = static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
  } else {
    rep_ = std::move(v);
  }
}

Integer Integer::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw ParseError("bad integer literal '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw ParseError("bad integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Integer(mpz_class(s, 10));
}

std::optional<std::int64_t> Integer::to_int64() const {
  if (is_small()) return small();
  return std::nullopt;
}

mpz_class Integer::to_mpz() const { return is_small() ? to_big(small()) : big(); }

std::string Integer::str() const {
  return is_small() ? std::to_string(small()) : big().get_str(10);
}

int Integer::sign() const {
  if (is_small()) return (small() > 0) - (small() < 0);
  return sgn(big());
}

Integer Integer::operator-() const {
  if (is_small() && small() != kMin) return Integer(-small());
  return Integer(mpz_class(-to_mpz()));
}

Integer& Integer::operator+=(const Integer& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_add_overflow(small(), o.small(), &r)) {
      rep_ = r;
      return *this;
    }
  }
  assign(to_mpz() + o.to_mpz());
  return *this;
}

Integer& Integer::operator-=(const Integer& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_sub_overflow(small(), o.small(), &r)) {
      rep_ = r;
      return *this;
    }
  }
  assign(to_mpz() - o.to_mpz());
  return *this;
}

Integer& Integer::operator*=(const Integer& o) {
  if (is_small() && o.is_small()) {
    std::int64_t r;
    if (!__builtin_mul_overflow(small(), o.small(), &r)) {
      rep_ = r;
      return *this;
    }
  }
  assign(to_mpz() * o.to_mpz());
  return *this;
}

bool operator==(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return a.small() == b.small();
  // Canonical demotion means a small and a big value are never equal.
  if (a.is_small() != b.is_small()) return false;
  return a.big() == b.big();
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small()) return a.small() <=> b.small();
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.is_small() && b.is_small() && !(a.small() == kMin && b.small() == -1)) {
    std::int64_t q = a.small() / b.small();
    std::int64_t r = a.small() % b.small();
    if (r != 0 && ((r < 0) != (b.small() < 0))) --q;
    return Integer(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer div_exact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.is_small() && b.is_small() && !(a.small() == kMin && b.small() == -1)) {
    return Integer(a.small() / b.small());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small() != kMin && b.small() != kMin) {
    return Integer(std::gcd(a.small(), b.small()));
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

Integer isqrt(const Integer& a) {
  if (a.sign() < 0) throw DomainError("isqrt of negative integer");
  if (a.is_small()) {
    auto n = static_cast<unsigned __int128>(a.small());
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(a.small())));
    while (static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return Integer(static_cast<std::int64_t>(r));
  }
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), a.big().get_mpz_t());
  return Integer(r);
}

Integer shift_left(const Integer& a, unsigned k) {
  mpz_class r;
  mpz_mul_2exp(r.get_mpz_t(), a.to_mpz().get_mpz_t(), k);
  return Integer(r);
}

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

// ---------------------------------------------------------------------------

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator");
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Integer g = gcd(num_, den_);
  if (!(g == Integer(1))) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(Integer::parse(text));
  return Rational(Integer::parse(text.substr(0, slash)), Integer::parse(text.substr(slash + 1)));
}

std::string Rational::str() const {
  if (is_integer()) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_.is_zero()) throw DomainError("division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.str(); }

SquareFreeSplit split_square_free(std::int64_t n) {
  if (n <= 0) throw DomainError("square-free split needs a positive integer");
  std::int64_t root = 1;
  std::int64_t core = 1;
  std::int64_t rest = n;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) root *= p;
    if (e % 2) core *= p;
  }
  core *= rest;
  return {root, core};
}

bool is_square_free(std::int64_t n) { return n > 0 && split_square_free(n).square_root_factor == 1; }

}  // namespace balword
