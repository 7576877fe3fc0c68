#include "balword/sturmian.hpp"

#include <algorithm>
#include <memory>
#include <vector>

#include "balword/errors.hpp"

namespace balword {

IetParams::IetParams(QuadNum alpha, QuadNum rho)
    : alpha_(std::move(alpha)), rho_(std::move(rho)), threshold_(QuadNum(1) - alpha_) {
  if (alpha_.sign() <= 0 || alpha_ >= QuadNum(1)) {
    throw DomainError("slope must lie in (0,1), got " + alpha_.str());
  }
  if (rho_.sign() < 0 || rho_ >= QuadNum(1)) {
    throw DomainError("intercept must lie in [0,1), got " + rho_.str());
  }
  if (!rho_.is_rational() && !alpha_.is_rational() && rho_.field() != alpha_.field()) {
    throw FieldMismatch("intercept and slope must share a quadratic field");
  }
}

Letter iet_letter(const IetParams& p, std::uint64_t n) {
  QuadNum x = frac(QuadNum(static_cast<std::int64_t>(n)) * p.alpha() + p.rho());
  return x >= p.threshold() ? kLetterB : kLetterA;
}

IetStream::IetStream(const IetParams& p)
    : alpha_(p.alpha()), threshold_(p.threshold()), x_(p.rho()) {}

Letter IetStream::next() {
  Letter l = x_ >= threshold_ ? kLetterB : kLetterA;
  // T(x) = x + alpha, minus 1 exactly on I_b.
  x_ += alpha_;
  if (l == kLetterB) x_ -= QuadNum(1);
  return l;
}

LetterGenerator iet_generator(const IetParams& p) {
  auto stream = std::make_shared<IetStream>(p);
  return [stream] { return stream->next(); };
}

Word iet_prefix(const IetParams& p, std::size_t n) {
  IetStream s(p);
  Word w(Alphabet::binary);
  for (std::size_t i = 0; i < n; ++i) w.push_back(s.next());
  return w;
}

Word iet_coding_from(const QuadNum& alpha, QuadNum x, std::size_t n) {
  return iet_prefix(IetParams(alpha, std::move(x)), n);
}

std::set<Word> iet_language(const IetParams& p, std::size_t n) {
  if (p.periodic()) throw UnsupportedRational("language enumeration needs an irrational slope");
  if (n == 0) return {Word(Alphabet::binary)};
  // Cell boundaries: 0 and T^{-k}(1 - alpha) = frac(-(k+1) alpha), k = 0..n-1.
  std::vector<QuadNum> cuts;
  cuts.reserve(n + 1);
  cuts.emplace_back(0);
  QuadNum point = p.threshold();
  for (std::size_t k = 0; k < n; ++k) {
    cuts.push_back(point);
    point -= p.alpha();
    if (point.sign() < 0) point += QuadNum(1);
  }
  std::sort(cuts.begin(), cuts.end());
  std::set<Word> language;
  for (const auto& left : cuts) language.insert(iet_coding_from(p.alpha(), left, n));
  return language;
}

std::pair<ParikhVector, ParikhVector> sturmian_parikh_classes(const QuadNum& alpha,
                                                              std::uint64_t n) {
  if (alpha.is_rational()) throw UnsupportedRational("Parikh classes need an irrational slope");
  if (n == 0) return {ParikhVector{0, 0}, ParikhVector{0, 0}};
  auto fb = floor(QuadNum(static_cast<std::int64_t>(n)) * alpha).to_int64().value();
  auto nb = static_cast<std::uint64_t>(fb);
  // n alpha is never an integer for n >= 1, so ceil = floor + 1.
  ParikhVector heavy{n - nb - 1, nb + 1};
  ParikhVector light{n - nb, nb};
  return {heavy, light};
}

}  // namespace balword
