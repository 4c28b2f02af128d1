#include <doctest.h>

#include "lex/codes.hpp"

#include <random>

using namespace lex;

namespace {

const Alphabet kTernary = Alphabet::range(0, 2);
const Alphabet kBinary = Alphabet::range(0, 1);

ParityVector pv(const std::string& bits) {
  ParityVector v;
  for (char c : bits) v.push_back(c == '1');
  return v;
}

} // namespace

TEST_CASE("parity checks on the worked example") {
  CHECK(parity_checks(10) == 3);
  CHECK(parity_checks(1) == 0);
  CHECK(parity_checks(8) == 3);
  CHECK(t_membership(kTernary, 10, pv("010"), parse_word("0121200111").letters()));
  CHECK_FALSE(t_membership(kTernary, 10, pv("010"), parse_word("0211221100").letters()));
  CHECK(repair_T(kTernary, 10, pv("010"), parse_word("0211221100")) == parse_word("0211211100"));
  CHECK(repair_T(kTernary, 10, pv("010"), parse_word("0121200111")) == parse_word("0121200111"));
  CHECK_THROWS_AS(t_membership(kTernary, 10, pv("01"), parse_word("0121200111").letters()),
                  std::invalid_argument);
}

TEST_CASE("no constraints at n = 1") {
  for (Letter l : kTernary.letters()) CHECK(t_membership(kTernary, 1, {}, Word{l}.letters()));
  CHECK(count_t_class(kTernary, 1, {}) == 3);
}

TEST_CASE("class sizes") {
  // Brute force over {0,1}^4 and {0,1,2}^10 (tests/oracles/derive.py).
  CHECK(count_t_class(kBinary, 4, pv("00")) == 4);
  CHECK(count_t_class(kTernary, 10, pv("010")) == 7290);
  CHECK(count_t_class(kTernary, 10, pv("000")) == 8019);

  // Recurrence against direct filtering of the cube.
  for (std::size_t a : {2, 3, 4}) {
    auto alphabet = Alphabet::range(0, static_cast<Letter>(a) - 1);
    for (std::size_t n = 1; n <= 7; ++n) {
      const auto m = parity_checks(n);
      auto counts = count_t_classes(alphabet, n);
      std::vector<BigInt> direct(counts.size(), 0);
      for (const auto& w : all_words(alphabet, n))
        for (std::uint64_t mask = 0; mask < counts.size(); ++mask)
          if (t_membership(alphabet, n, parity_vector_from_mask(mask, m), w.letters())) direct[mask] += 1;
      CHECK(counts == direct);
    }
  }
}

TEST_CASE("classes partition the cube") {
  for (std::size_t a : {2, 3}) {
    auto alphabet = Alphabet::range(0, static_cast<Letter>(a) - 1);
    for (std::size_t n = 1; n <= 12; ++n) {
      BigInt sum = 0;
      for (const auto& c : count_t_classes(alphabet, n)) sum += c;
      CHECK(sum == ipow(BigInt(a), static_cast<unsigned>(n)));
    }
  }
}

TEST_CASE("build_T picks the smallest class") {
  auto t = build_T(kBinary, 4);
  CHECK(t.cardinality() == 4);
  CHECK(format_parity(t.parity()) == "00");

  auto t10 = build_T(kTernary, 10);
  CHECK(t10.cardinality() == 7290);
  CHECK(format_parity(t10.parity()) == "001"); // first of seven tied classes
  CHECK(Rational(t10.cardinality()) <= t_cardinality_bound(3, 10));

  auto single = build_T(kTernary, 1);
  CHECK(single.cardinality() == 3);
  CHECK(single.members().size() == 3);
}

TEST_CASE("repair_T lands in the class within distance one") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto m = parity_checks(n);
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
      auto v = parity_vector_from_mask(mask, m);
      for (const auto& w : all_words(kBinary, n)) {
        auto fixed = repair_T(kBinary, n, v, w);
        REQUIRE(t_membership(kBinary, n, v, fixed.letters()));
        REQUIRE(hamming(w, fixed) <= 1);
        REQUIRE(repair_T(kBinary, n, v, fixed) == fixed);
      }
    }
  }
}

TEST_CASE("U codes") {
  auto u = build_U(kBinary, 8);
  CHECK(u.cardinality() == u.first_half().cardinality() * u.second_half().cardinality());
  CHECK(verify_spanning(u, 2));
  CHECK(Rational(u.cardinality()) <= u_cardinality_bound(2, 8));

  auto u2 = build_U(kTernary, 2);
  CHECK(u2.cardinality() == 9);
  CHECK_THROWS_AS(build_U(kBinary, 1), std::invalid_argument);

  auto u7 = build_U(kTernary, 7);
  for (const auto& w : all_words(kTernary, 7)) {
    auto fixed = repair_spanning(u7, w);
    REQUIRE(u7.contains(fixed));
    REQUIRE(hamming(w, fixed) <= 2);
    REQUIRE(repair_spanning(u7, fixed) == fixed);
  }
}

TEST_CASE("V codes") {
  auto positive = Alphabet::range(1, 4);
  for (std::size_t n = 2; n <= 6; ++n)
    CHECK(build_V(positive, n).cardinality() == ipow(BigInt(4), static_cast<unsigned>(n - 2)));

  auto negative = Alphabet::range(-2, -1);
  auto v = build_V(negative, 3);
  CHECK(v.anchor() == -1);
  CHECK(v.members() == std::vector<Word>{{-1, -1, -2}, {-1, -1, -1}});

  CHECK(v_anchor(kBinary) == 1);
  CHECK(v_anchor(Alphabet::range(5, 7)) == 5);
  CHECK(repair_spanning(build_V(kBinary, 4), parse_word("0000")) == parse_word("1100"));
  CHECK_THROWS_AS(build_V(kBinary, 1), std::invalid_argument);
}

TEST_CASE("spanning and cardinality bounds, exhaustively") {
  for (std::size_t a : {2, 3, 4}) {
    auto alphabet = Alphabet::range(0, static_cast<Letter>(a) - 1);
    const std::size_t top = a == 2 ? 12 : (a == 3 ? 9 : 7);
    for (std::size_t n = 1; n <= top; ++n) {
      auto t = build_T(alphabet, n);
      REQUIRE(Rational(t.cardinality()) <= t_cardinality_bound(a, n));
      REQUIRE(verify_spanning(t, 1));
      if (n >= 2) {
        auto u = build_U(alphabet, n);
        auto v = build_V(alphabet, n);
        REQUIRE(Rational(u.cardinality()) <= u_cardinality_bound(a, n));
        REQUIRE(v.cardinality() == ipow(BigInt(a), static_cast<unsigned>(n - 2)));
        REQUIRE(verify_spanning(u, 2));
        REQUIRE(verify_spanning(v, 2));
      }
    }
  }
}

TEST_CASE("explicit member lists agree with the predicate") {
  auto u = build_U(kTernary, 5);
  auto members = u.members();
  CHECK(BigInt(members.size()) == u.cardinality());
  CHECK(std::is_sorted(members.begin(), members.end()));
  std::size_t in = 0;
  for (const auto& w : all_words(kTernary, 5)) in += u.contains(w);
  CHECK(in == members.size());
}

TEST_CASE("3-separated extraction") {
  auto W3 = all_words(kBinary, 3);
  auto s3 = extract_3_separated(W3, kBinary, 3);
  CHECK(verify_separated(s3.members(), 3));
  CHECK(s3.cardinality() >= 1);

  auto W7 = all_words(kBinary, 7);
  auto s7 = extract_3_separated(W7, kBinary, 7);
  CHECK(s7.cardinality() == 5); // largest class (0, 16), by enumeration
  CHECK(s7.residues() == std::pair<std::uint64_t, std::uint64_t>{0, 16});
  CHECK(verify_separated(s7.members(), 3));

  auto single = extract_3_separated({parse_word("0110")}, kBinary, 4);
  CHECK(single.members() == std::vector<Word>{parse_word("0110")});

  CHECK_THROWS_AS(extract_3_separated({}, kBinary, 3), std::invalid_argument);
  CHECK_THROWS_AS(repair_spanning(s7, W7[0]), std::logic_error);
}

TEST_CASE("no two words of one class differ in one or two places") {
  for (std::size_t a : {2, 3}) {
    auto alphabet = Alphabet::range(0, static_cast<Letter>(a) - 1);
    for (std::size_t n = 1; n <= 6; ++n) {
      std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<Word>> classes;
      for (const auto& w : all_words(alphabet, n))
        classes[separation_class(alphabet, w.letters())].push_back(w);
      for (const auto& [key, members] : classes)
        for (std::size_t i = 0; i < members.size(); ++i)
          for (std::size_t j = i + 1; j < members.size(); ++j) {
            const auto d = hamming(members[i], members[j]);
            REQUIRE(d != 1);
            REQUIRE(d != 2);
          }
    }
  }
}

TEST_CASE("extraction size bound on seeded random sets") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t a = 2 + trial % 2;
    const std::size_t n = 3 + trial % 5;
    auto alphabet = Alphabet::range(0, static_cast<Letter>(a) - 1);
    auto cube = all_words(alphabet, n);
    std::vector<Word> W;
    std::bernoulli_distribution keep(0.4);
    for (const auto& w : cube)
      if (keep(rng)) W.push_back(w);
    if (W.empty()) W.push_back(cube.front());
    auto s = extract_3_separated(W, alphabet, n);
    CHECK(verify_separated(s.members(), 3));
    CHECK(Rational(s.cardinality()) >= Rational(W.size(), 4 * n * a * a));
  }
}

TEST_CASE("verify_separated") {
  CHECK(verify_separated({parse_word("0101")}, 99));
  CHECK_FALSE(verify_separated({parse_word("000"), parse_word("011")}, 3));
  CHECK(verify_separated({parse_word("000"), parse_word("111")}, 3));
}

TEST_CASE("export format") {
  auto v = build_V(kBinary, 3);
  CHECK(export_code(v) == "family=V a=2 n=3 params=anchor=1 cardinality=2\n110\n111\n");
}
