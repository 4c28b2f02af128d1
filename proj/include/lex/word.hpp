// word.hpp -- letters, alphabets, words, Hamming distance and sign runs.

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lex {

using Letter = int;

/// A finite set of integer letters, kept in ascending order. The position of
/// a letter in that order is its canonical index (0, ..., size-1).
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Letter> letters);

  /// {-N..-1, 1..N}, plus 0 when `includes_zero`.
  static Alphabet signed_letters(int N, bool includes_zero);
  /// {lo, lo+1, ..., hi}.
  static Alphabet range(Letter lo, Letter hi);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::span<const Letter> letters() const { return letters_; }
  Letter letter(std::size_t index) const { return letters_[index]; }

  bool contains(Letter l) const;
  /// Throws std::invalid_argument for letters outside the alphabet.
  std::size_t index_of(Letter l) const;

  bool operator==(const Alphabet&) const = default;

private:
  std::vector<Letter> letters_;
};

class Word {
public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  explicit Word(std::span<const Letter> letters)
      : letters_(letters.begin(), letters.end()) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  Letter& operator[](std::size_t i) { return letters_[i]; }

  std::span<const Letter> letters() const { return letters_; }
  std::vector<Letter>& mutable_letters() { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  Word subword(std::size_t start, std::size_t length) const;
  void append(const Word& other);
  void push_back(Letter l) { letters_.push_back(l); }

  /// Lexicographic in ascending letter value; a proper prefix sorts first.
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

private:
  std::vector<Letter> letters_;
};

Word concat(std::span<const Word> words);

/// Throws std::invalid_argument naming the first letter not in `alphabet`.
void require_letters_in(const Alphabet& alphabet, std::span<const Letter> w);

/// Accepts "1 1 0 0 -2" (whitespace separated) or the compact "0211221100"
/// form, in which every character is one decimal digit.
Word parse_word(std::string_view text);

/// Compact form when every letter is a digit 0..9, spaced form otherwise.
std::string format_word(const Word& w);
std::string format_word_spaced(const Word& w);

std::size_t hamming(std::span<const Letter> v, std::span<const Letter> w);
inline std::size_t hamming(const Word& v, const Word& w) {
  return hamming(v.letters(), w.letters());
}

enum class SignClass { negative, zero, positive };

inline SignClass sign_class(Letter l) {
  return l < 0 ? SignClass::negative
               : (l == 0 ? SignClass::zero : SignClass::positive);
}

char sign_symbol(SignClass s);

struct Run {
  SignClass sign;
  std::size_t start;
  std::size_t length;
  bool operator==(const Run&) const = default;
};

/// Maximal constant-sign-class segments, left to right. Throws on empty input.
std::vector<Run> run_decompose(std::span<const Letter> w);
inline std::vector<Run> run_decompose(const Word& w) {
  return run_decompose(w.letters());
}

/// Every word of length n over `alphabet` in lexicographic order.
std::vector<Word> all_words(const Alphabet& alphabet, std::size_t n);

/// Mixed-radix decode: the index-th word of `all_words(alphabet, n)`.
Word word_at(const Alphabet& alphabet, std::size_t n, unsigned long long index);

} // namespace lex
