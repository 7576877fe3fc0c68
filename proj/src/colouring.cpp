#include "balword/colouring.hpp"

#include <algorithm>
#include <memory>

#include "balword/errors.hpp"

namespace balword {

Word colour(const Word& u, const Word& paint) {
  if (u.alphabet() != Alphabet::binary || paint.alphabet() != Alphabet::paint) {
    throw DomainError("colour() expects a word over {a,b} and paint over {2,3}");
  }
  if (paint.size() < u.count(kLetterB)) {
    throw InsufficientPaint("paint has " + std::to_string(paint.size()) + " letters but u has " +
                            std::to_string(u.count(kLetterB)) + " b's");
  }
  Word v(Alphabet::ternary);
  std::size_t k = 0;
  for (Letter l : u.symbols()) {
    v.push_back(l == kLetterA ? kColour1 : static_cast<Letter>(paint[k++] + 1));
  }
  return v;
}

Word project_pi(const Word& v) {
  if (v.alphabet() != Alphabet::ternary) throw DomainError("projection expects a word over {1,2,3}");
  Word u(Alphabet::binary);
  for (Letter l : v.symbols()) u.push_back(l == kColour1 ? kLetterA : kLetterB);
  return u;
}

Word project_Pi(const Word& v) {
  if (v.alphabet() != Alphabet::ternary) throw DomainError("projection expects a word over {1,2,3}");
  Word z(Alphabet::paint);
  for (Letter l : v.symbols()) {
    if (l != kColour1) z.push_back(static_cast<Letter>(l - 1));
  }
  return z;
}

Letter coloured_letter(const ColouringParams& p, std::uint64_t n) {
  QuadNum t = QuadNum(static_cast<std::int64_t>(n)) * p.alpha() + p.base().rho();
  Integer k = floor(t);
  if (t - QuadNum(Rational(k)) < p.base().threshold()) return kColour1;
  QuadNum y = frac(p.gamma() * QuadNum(Rational(k)) + p.paint().rho());
  return y < p.paint().threshold() ? kColour2 : kColour3;
}

LetterGenerator coloured_generator(const ColouringParams& p) {
  auto stream = std::make_shared<ColouredStream>(p);
  return [stream] { return stream->next(); };
}

Word coloured_prefix(const ColouringParams& p, std::size_t n) {
  ColouredStream s(p);
  Word v(Alphabet::ternary);
  for (std::size_t i = 0; i < n; ++i) v.push_back(s.next());
  return v;
}

ColouringParams from_frequencies(const QuadNum& f1, const QuadNum& f2, const QuadNum& f3) {
  if (f1.sign() <= 0 || f2.sign() <= 0 || f3.sign() <= 0) {
    throw DomainError("letter frequencies must be positive");
  }
  if (!(f1 + f2 + f3 == QuadNum(1))) throw DomainError("letter frequencies must sum to 1");
  QuadNum alpha = QuadNum(1) - f1;
  QuadNum gamma = f3 / alpha;
  return ColouringParams(alpha, gamma);
}

ColouringParams from_frequencies(const BiQuadNum& f1, const BiQuadNum& f2, const BiQuadNum& f3) {
  if (f1.sign() <= 0 || f2.sign() <= 0 || f3.sign() <= 0) {
    throw DomainError("letter frequencies must be positive");
  }
  BiQuadNum one = BiQuadNum::lift(QuadNum(1), f1.d1(), f1.d2());
  if (!(f1 + f2 + f3 == one)) throw DomainError("letter frequencies must sum to 1");
  BiQuadNum alpha = one - f1;
  BiQuadNum gamma = f3 / alpha;
  auto qa = alpha.to_quad();
  auto qg = gamma.to_quad();
  if (!qa || !qg) {
    throw DomainError("frequencies do not split into two quadratic slopes alpha, gamma");
  }
  return ColouringParams(*qa, *qg);
}

FrequencyVector::FrequencyVector(const ColouringParams& p) {
  const QuadNum& a = p.alpha();
  const QuadNum& g = p.gamma();
  if (a.is_rational() || g.is_rational() || a.field() == g.field()) {
    f_ = std::array<QuadNum, 3>{QuadNum(1) - a, a * (QuadNum(1) - g), a * g};
  } else {
    std::int64_t d1 = std::min(a.field(), g.field());
    std::int64_t d2 = std::max(a.field(), g.field());
    BiQuadNum ba = BiQuadNum::lift(a, d1, d2);
    BiQuadNum bg = BiQuadNum::lift(g, d1, d2);
    BiQuadNum one = BiQuadNum::lift(QuadNum(1), d1, d2);
    f_ = std::array<BiQuadNum, 3>{one - ba, ba * (one - bg), ba * bg};
  }
}

bool FrequencyVector::deviation_within(Letter letter, std::uint64_t count, std::uint64_t length,
                                       std::int64_t bound) const {
  const auto c = static_cast<std::int64_t>(count);
  const auto n = static_cast<std::int64_t>(length);
  return std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f[0])>;
        auto embed = [&](std::int64_t v) {
          if constexpr (std::is_same_v<T, QuadNum>) {
            return QuadNum(v);
          } else {
            return BiQuadNum::lift(QuadNum(v), f[0].d1(), f[0].d2());
          }
        };
        T dev = embed(c) - f[letter] * embed(n);
        return dev <= embed(bound) && dev >= embed(-bound);
      },
      f_);
}

std::string FrequencyVector::str(Letter letter) const {
  return std::visit([&](const auto& f) { return f[letter].str(); }, f_);
}

}  // namespace balword
