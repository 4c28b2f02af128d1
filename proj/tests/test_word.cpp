#include <doctest.h>

#include "lex/word.hpp"

#include <stdexcept>

using namespace lex;

TEST_CASE("alphabets") {
  auto with_zero = Alphabet::signed_letters(2, true);
  CHECK(with_zero.size() == 5);
  CHECK(with_zero.index_of(-2) == 0);
  CHECK(with_zero.index_of(0) == 2);
  auto no_zero = Alphabet::signed_letters(2, false);
  CHECK(no_zero.size() == 4);
  CHECK_FALSE(no_zero.contains(0));
  CHECK_THROWS_AS(no_zero.index_of(0), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::signed_letters(0, true), std::invalid_argument);
}

TEST_CASE("word text formats") {
  CHECK(parse_word("1 1 0 0 -2") == Word{1, 1, 0, 0, -2});
  CHECK(parse_word("0211221100") == Word{0, 2, 1, 1, 2, 2, 1, 1, 0, 0});
  CHECK(format_word(Word{0, 2, 1}) == "021");
  CHECK(format_word(Word{1, -1}) == "1 -1");
  CHECK(parse_word(format_word_spaced(Word{-3, 0, 12})) == Word{-3, 0, 12});
  CHECK_THROWS_AS(parse_word("1 x 2"), std::invalid_argument);
}

TEST_CASE("hamming") {
  CHECK(hamming(parse_word("0211221100"), parse_word("0211211100")) == 1);
  CHECK(hamming(parse_word("0211221100"), parse_word("0211221100")) == 0);
  CHECK(hamming(parse_word("000"), parse_word("111")) == 3);
  CHECK_THROWS_WITH_AS(hamming(Word{1}, Word{1, 2}), "unequal lengths", std::invalid_argument);
}

TEST_CASE("hamming is a metric on small cubes") {
  auto words = all_words(Alphabet::range(0, 2), 4);
  for (const auto& u : words)
    for (const auto& v : words) {
      const auto d = hamming(u, v);
      CHECK(d == hamming(v, u));
      CHECK((d == 0) == (u == v));
      for (std::size_t k = 0; k < words.size(); k += 7)
        CHECK(d <= hamming(u, words[k]) + hamming(words[k], v));
    }
}

TEST_CASE("run decomposition") {
  using S = SignClass;
  CHECK(run_decompose(Word{1, 1, 0, 0, -2}) ==
        std::vector<Run>{{S::positive, 0, 2}, {S::zero, 2, 2}, {S::negative, 4, 1}});
  CHECK(run_decompose(Word{0, 0, 0}) == std::vector<Run>{{S::zero, 0, 3}});
  CHECK(run_decompose(Word{1, -1, 1}) ==
        std::vector<Run>{{S::positive, 0, 1}, {S::negative, 1, 1}, {S::positive, 2, 1}});
  CHECK_THROWS_AS(run_decompose(Word{}), std::invalid_argument);
}

TEST_CASE("runs tile every word exactly") {
  auto alphabet = Alphabet::signed_letters(1, true);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& w : all_words(alphabet, n)) {
      auto runs = run_decompose(w);
      Word rebuilt;
      for (std::size_t r = 0; r < runs.size(); ++r) {
        if (r) REQUIRE(runs[r].sign != runs[r - 1].sign);
        auto piece = w.subword(runs[r].start, runs[r].length);
        for (Letter l : piece) REQUIRE(sign_class(l) == runs[r].sign);
        rebuilt.append(piece);
      }
      REQUIRE(rebuilt == w);
    }
  }
  // N = 2: without zero through length 12, with zero through length 9.
  for (bool zero : {false, true}) {
    auto wide = Alphabet::signed_letters(2, zero);
    const std::size_t top = zero ? 9 : 12;
    unsigned long long total = 1;
    for (std::size_t i = 0; i < top; ++i) total *= wide.size();
    for (unsigned long long k = 0; k < total; ++k) {
      const Word w = word_at(wide, top, k);
      Word rebuilt;
      for (const auto& r : run_decompose(w)) rebuilt.append(w.subword(r.start, r.length));
      REQUIRE(rebuilt == w);
    }
  }
}

TEST_CASE("lexicographic order follows letter values") {
  CHECK(Word{-1, 5} < Word{0});
  CHECK(Word{1} < Word{1, -9});
  auto words = all_words(Alphabet::range(-1, 1), 3);
  CHECK(std::is_sorted(words.begin(), words.end()));
}
