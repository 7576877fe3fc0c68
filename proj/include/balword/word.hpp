#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace balword {

/// Letter index within an alphabet (0-based).
using Letter = std::uint8_t;

/// The three alphabets in play: the Sturmian {a,b}, the paint {2,3} and the coloured {1,2,3}.
enum class Alphabet : std::uint8_t { binary, paint, ternary };

std::size_t alphabet_size(Alphabet a);
char letter_char(Alphabet a, Letter l);
Letter letter_index(Alphabet a, char c);

/// Per-letter occurrence counts.
class ParikhVector {
 public:
  ParikhVector() = default;
  explicit ParikhVector(std::size_t letters) : letters_(letters) {}
  ParikhVector(std::initializer_list<std::uint64_t> counts);

  std::size_t letters() const { return letters_; }
  std::uint64_t operator[](std::size_t i) const { return counts_[i]; }
  std::uint64_t& operator[](std::size_t i) { return counts_[i]; }
  std::uint64_t total() const;
  std::string str() const;

  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
  friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;

 private:
  std::array<std::uint64_t, 3> counts_{};
  std::size_t letters_ = 0;
};

/// Finite word over one of the small alphabets, with its Parikh vector cached.
class Word {
 public:
  explicit Word(Alphabet alphabet = Alphabet::binary) : alphabet_(alphabet), parikh_(alphabet_size(alphabet)) {}
  Word(Alphabet alphabet, std::vector<Letter> symbols);

  static Word parse(Alphabet alphabet, std::string_view text);

  Alphabet alphabet() const { return alphabet_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Letter operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Letter> symbols() const { return symbols_; }
  const ParikhVector& parikh() const { return parikh_; }
  std::uint64_t count(Letter l) const { return parikh_[l]; }

  void push_back(Letter l);
  Word factor(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return factor(0, len); }
  std::string str() const;

  friend bool operator==(const Word& x, const Word& y) {
    return x.alphabet_ == y.alphabet_ && x.symbols_ == y.symbols_;
  }
  friend std::strong_ordering operator<=>(const Word& x, const Word& y);

 private:
  Alphabet alphabet_;
  std::vector<Letter> symbols_;
  ParikhVector parikh_;
};

ParikhVector parikh(const Word& w);

/// Infinite letter stream; each call yields the next letter.
using LetterGenerator = std::function<Letter()>;

/// Lazily materialized prefix of an infinite stream, grown on demand.
class PrefixBuffer {
 public:
  PrefixBuffer(Alphabet alphabet, LetterGenerator gen)
      : alphabet_(alphabet), gen_(std::move(gen)) {}

  Alphabet alphabet() const { return alphabet_; }
  /// First n letters, generating more if needed.
  std::span<const Letter> prefix(std::size_t n);
  std::size_t materialized() const { return letters_.size(); }

 private:
  Alphabet alphabet_;
  LetterGenerator gen_;
  std::vector<Letter> letters_;
};

}  // namespace balword
