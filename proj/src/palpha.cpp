#include "balword/palpha.hpp"

#include <algorithm>
#include <numeric>

#include "balword/errors.hpp"
#include "balword/numeration.hpp"
#include "balword/sturmian.hpp"

namespace balword {

namespace {

void require_slope(const QuadNum& alpha) {
  if (alpha.is_rational()) throw UnsupportedRational("P_alpha needs irrational alpha, got " + alpha.str());
  if (alpha.sign() <= 0 || alpha >= QuadNum(1)) throw DomainError("alpha must lie in (0,1)");
}

void require_n(std::uint64_t n) {
  if (n < 1) throw DomainError("P_alpha is defined for n >= 1");
}

class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}
  void add(std::size_t i) {
    for (++i; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
  }
  std::uint64_t prefix(std::size_t i) const {  // entries 0..i
    std::uint64_t s = 0;
    for (++i; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<std::uint64_t> tree_;
};

}  // namespace

std::uint64_t palpha_geometric(const QuadNum& alpha, std::uint64_t n) {
  require_slope(alpha);
  require_n(n);
  const QuadNum target = frac(QuadNum(static_cast<std::int64_t>(n)) * alpha);
  std::uint64_t count = 0;
  QuadNum x(0);
  for (std::uint64_t k = 1; k <= n; ++k) {
    x += alpha;
    if (x >= QuadNum(1)) x -= QuadNum(1);
    if (x <= target) ++count;
  }
  return count;
}

std::vector<std::uint64_t> palpha_geometric_range(const QuadNum& alpha, std::uint64_t n_max) {
  require_slope(alpha);
  std::vector<QuadNum> fr(n_max + 1);
  QuadNum x(0);
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    x += alpha;
    if (x >= QuadNum(1)) x -= QuadNum(1);
    fr[k] = x;
  }
  std::vector<std::uint64_t> order(n_max);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](auto i, auto j) { return fr[i] < fr[j]; });
  std::vector<std::size_t> rank(n_max + 1);
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;

  std::vector<std::uint64_t> out(n_max + 1, 0);
  Fenwick tree(n_max);
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    tree.add(rank[n]);
    out[n] = tree.prefix(rank[n]);
  }
  return out;
}

std::uint64_t palpha_combinatorial(const QuadNum& alpha, std::uint64_t n) {
  require_slope(alpha);
  require_n(n);
  const ParikhVector heavy = sturmian_parikh_classes(alpha, n).first;
  std::uint64_t count = 0;
  for (const Word& w : iet_language(IetParams(alpha), n)) {
    if (w.parikh() == heavy) ++count;
  }
  return count;
}

std::uint64_t palpha_complement(const QuadNum& alpha, std::uint64_t n) {
  return n + 1 - palpha_geometric(alpha, n);
}

std::int64_t delta_palpha(const QuadNum& alpha, std::uint64_t n) {
  require_n(n);
  auto m = parry_family_parameter(alpha);
  if (!m) throw DomainError("increment formula needs alpha = 1/beta with beta^2 = m beta - 1, m >= 3");
  DigitString e = u_expand(*m, n + 1);
  auto fl = floor(QuadNum(static_cast<std::int64_t>(n)) * alpha).to_int64().value();
  if (e.digits.back() != 0) return fl + 1;
  return fl - static_cast<std::int64_t>(n) + 1;
}

PalphaMethod parse_palpha_method(std::string_view text) {
  if (text == "geometric") return PalphaMethod::geometric;
  if (text == "combinatorial") return PalphaMethod::combinatorial;
  if (text == "symbolic") return PalphaMethod::symbolic;
  throw ParseError("unknown method '" + std::string(text) + "'");
}

std::string_view method_name(PalphaMethod m) {
  switch (m) {
    case PalphaMethod::geometric: return "geometric";
    case PalphaMethod::combinatorial: return "combinatorial";
    case PalphaMethod::symbolic: return "symbolic";
  }
  return "?";
}

PalphaRecord palpha(const QuadNum& alpha, std::uint64_t n, PalphaMethod method) {
  switch (method) {
    case PalphaMethod::geometric:
      return {n, palpha_geometric(alpha, n), method};
    case PalphaMethod::combinatorial:
      return {n, palpha_combinatorial(alpha, n), method};
    case PalphaMethod::symbolic: {
      auto m = parry_family_parameter(alpha);
      if (!m) throw DomainError("symbolic method needs alpha = 1/beta with beta^2 = m beta - 1, m >= 3");
      return {n, palpha_symbolic(ParryUnit(*m), n), method};
    }
  }
  throw DomainError("unknown method");
}

}  // namespace balword
