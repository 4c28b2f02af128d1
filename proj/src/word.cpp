#include "lex/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace lex {

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::sort(letters_.begin(), letters_.end());
  letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
}

Alphabet Alphabet::signed_letters(int N, bool includes_zero) {
  if (N < 1)
    throw std::invalid_argument("alphabet magnitude N must be at least 1");
  std::vector<Letter> out;
  for (int i = -N; i <= N; ++i)
    if (i != 0 || includes_zero) out.push_back(i);
  return Alphabet(std::move(out));
}

Alphabet Alphabet::range(Letter lo, Letter hi) {
  if (hi < lo) throw std::invalid_argument("empty letter range");
  std::vector<Letter> out;
  for (Letter l = lo; l <= hi; ++l) out.push_back(l);
  return Alphabet(std::move(out));
}

bool Alphabet::contains(Letter l) const {
  return std::binary_search(letters_.begin(), letters_.end(), l);
}

std::size_t Alphabet::index_of(Letter l) const {
  auto it = std::lower_bound(letters_.begin(), letters_.end(), l);
  if (it == letters_.end() || *it != l)
    throw std::invalid_argument("letter " + std::to_string(l) +
                                " is not in the alphabet");
  return static_cast<std::size_t>(it - letters_.begin());
}

Word Word::subword(std::size_t start, std::size_t length) const {
  if (start + length > letters_.size())
    throw std::out_of_range("subword past end of word");
  return Word(std::span<const Letter>(letters_).subspan(start, length));
}

void Word::append(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

Word concat(std::span<const Word> words) {
  Word out;
  for (const auto& w : words) out.append(w);
  return out;
}

void require_letters_in(const Alphabet& alphabet, std::span<const Letter> w) {
  for (Letter l : w)
    if (!alphabet.contains(l))
      throw std::invalid_argument("letter " + std::to_string(l) +
                                  " is not in the alphabet");
}

Word parse_word(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return Word{};
  auto last = text.find_last_not_of(" \t\r\n");
  text = text.substr(first, last - first + 1);

  bool compact = std::all_of(text.begin(), text.end(),
                             [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  std::vector<Letter> letters;
  if (compact) {
    for (char c : text) letters.push_back(c - '0');
    return Word(std::move(letters));
  }
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size())
      throw std::invalid_argument("bad letter '" + token + "' in word");
    letters.push_back(value);
  }
  return Word(std::move(letters));
}

std::string format_word(const Word& w) {
  bool compact = std::all_of(w.begin(), w.end(), [](Letter l) { return l >= 0 && l <= 9; });
  if (!compact) return format_word_spaced(w);
  std::string out;
  for (Letter l : w) out.push_back(static_cast<char>('0' + l));
  return out;
}

std::string format_word_spaced(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  return out;
}

std::size_t hamming(std::span<const Letter> v, std::span<const Letter> w) {
  if (v.size() != w.size()) throw std::invalid_argument("unequal lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < v.size(); ++i) d += v[i] != w[i];
  return d;
}

char sign_symbol(SignClass s) {
  switch (s) {
  case SignClass::negative: return '-';
  case SignClass::zero: return '0';
  case SignClass::positive: return '+';
  }
  return '?';
}

std::vector<Run> run_decompose(std::span<const Letter> w) {
  if (w.empty()) throw std::invalid_argument("cannot decompose the empty word");
  std::vector<Run> runs;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (i == w.size() || sign_class(w[i]) != sign_class(w[start])) {
      runs.push_back({sign_class(w[start]), start, i - start});
      start = i;
    }
  }
  return runs;
}

Word word_at(const Alphabet& alphabet, std::size_t n, unsigned long long index) {
  std::vector<Letter> letters(n);
  const auto a = alphabet.size();
  for (std::size_t i = n; i-- > 0;) {
    letters[i] = alphabet.letter(index % a);
    index /= a;
  }
  return Word(std::move(letters));
}

std::vector<Word> all_words(const Alphabet& alphabet, std::size_t n) {
  unsigned long long total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= alphabet.size();
  std::vector<Word> out;
  out.reserve(total);
  for (unsigned long long k = 0; k < total; ++k) out.push_back(word_at(alphabet, n, k));
  return out;
}

} // namespace lex
