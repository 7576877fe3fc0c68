#include "balword/word.hpp"

#include <algorithm>

#include "balword/errors.hpp"

namespace balword {

namespace {
constexpr std::string_view kBinary = "ab";
constexpr std::string_view kPaint = "23";
constexpr std::string_view kTernary = "123";

std::string_view letters_of(Alphabet a) {
  switch (a) {
    case Alphabet::binary: return kBinary;
    case Alphabet::paint: return kPaint;
    case Alphabet::ternary: return kTernary;
  }
  return kBinary;
}
}  // namespace

std::size_t alphabet_size(Alphabet a) { return letters_of(a).size(); }

char letter_char(Alphabet a, Letter l) { return letters_of(a).at(l); }

Letter letter_index(Alphabet a, char c) {
  auto pos = letters_of(a).find(c);
  if (pos == std::string_view::npos) {
    throw ParseError(std::string("letter '") + c + "' not in alphabet '" +
                     std::string(letters_of(a)) + "'");
  }
  return static_cast<Letter>(pos);
}

ParikhVector::ParikhVector(std::initializer_list<std::uint64_t> counts) : letters_(counts.size()) {
  if (counts.size() > counts_.size()) throw DomainError("at most three letters");
  std::copy(counts.begin(), counts.end(), counts_.begin());
}

std::uint64_t ParikhVector::total() const {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < letters_; ++i) t += counts_[i];
  return t;
}

std::string ParikhVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < letters_; ++i) {
    if (i) s += ",";
    s += std::to_string(counts_[i]);
  }
  return s + ")";
}

Word::Word(Alphabet alphabet, std::vector<Letter> symbols)
    : alphabet_(alphabet), symbols_(std::move(symbols)), parikh_(alphabet_size(alphabet)) {
  for (Letter l : symbols_) {
    if (l >= parikh_.letters()) throw DomainError("letter index out of alphabet");
    ++parikh_[l];
  }
}

Word Word::parse(Alphabet alphabet, std::string_view text) {
  std::vector<Letter> s;
  s.reserve(text.size());
  for (char c : text) s.push_back(letter_index(alphabet, c));
  return Word(alphabet, std::move(s));
}

void Word::push_back(Letter l) {
  if (l >= parikh_.letters()) throw DomainError("letter index out of alphabet");
  symbols_.push_back(l);
  ++parikh_[l];
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos + len > symbols_.size()) throw DomainError("factor out of range");
  return Word(alphabet_, std::vector<Letter>(symbols_.begin() + static_cast<std::ptrdiff_t>(pos),
                                             symbols_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

std::string Word::str() const {
  std::string s;
  s.reserve(symbols_.size());
  for (Letter l : symbols_) s.push_back(letter_char(alphabet_, l));
  return s;
}

std::strong_ordering operator<=>(const Word& x, const Word& y) {
  if (auto c = x.alphabet_ <=> y.alphabet_; c != 0) return c;
  return std::lexicographical_compare_three_way(x.symbols_.begin(), x.symbols_.end(),
                                                y.symbols_.begin(), y.symbols_.end());
}

ParikhVector parikh(const Word& w) { return w.parikh(); }

std::span<const Letter> PrefixBuffer::prefix(std::size_t n) {
  if (letters_.size() < n) {
    letters_.reserve(n);
    while (letters_.size() < n) letters_.push_back(gen_());
  }
  return std::span<const Letter>(letters_.data(), n);
}

}  // namespace balword
