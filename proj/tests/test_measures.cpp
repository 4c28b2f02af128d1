#include <doctest.h>

#include "lex/measures.hpp"

#include <cmath>
#include <random>

using namespace lex;

TEST_CASE("bernoulli weights") {
  auto positive = Alphabet::range(1, 10);
  CHECK(bernoulli_weight(positive, Word{1, 5, 10}) == Rational(1, 1000));
  CHECK(bernoulli_weight(positive, Word{1, -5}) == 0);
  CHECK(bernoulli_weight(positive, Word{}) == 1);
}

TEST_CASE("uniform bernoulli has entropy ln a at every level") {
  for (int a = 1; a <= 20; ++a) {
    auto letters = Alphabet::range(1, a);
    for (std::size_t n = 1; n <= 12; ++n) {
      auto d = CylinderDistribution::uniform_bernoulli(letters, n);
      auto hist = d.weight_histogram();
      REQUIRE(hist.size() == 1);
      // Exact mass before the log: a^n words of weight a^-n.
      REQUIRE(Rational(hist.begin()->second) * hist.begin()->first == 1);
      REQUIRE(level_entropy(d) == doctest::Approx(std::log(double(a))).epsilon(1e-14));
    }
  }
}

TEST_CASE("small explicit distributions") {
  auto point = CylinderDistribution::from_weights(3, {{Word{0, 1, 0}, Rational(1)}});
  CHECK(level_entropy(point) == 0.0);
  CHECK(support_count_check(point).holds);
  CHECK(point.support_size() == 1);

  auto coin = CylinderDistribution::from_weights(1, {{Word{0}, Rational(1, 2)}, {Word{1}, Rational(1, 2)}});
  CHECK(level_entropy(coin) == doctest::Approx(std::log(2.0)));

  CHECK_THROWS_AS(CylinderDistribution::from_weights(1, {{Word{0}, Rational(1, 3)}}), std::invalid_argument);
  CHECK_THROWS_AS(CylinderDistribution::from_weights(2, {{Word{0}, Rational(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(CylinderDistribution::from_weights(1, {{Word{0}, Rational(3, 2)}, {Word{1}, Rational(-1, 2)}}),
                  std::invalid_argument);
}

TEST_CASE("support count inequality") {
  for (int a : {2, 10, 20}) {
    for (std::size_t n = 1; n <= 12; ++n) {
      auto r = support_count_check(CylinderDistribution::uniform_bernoulli(Alphabet::range(1, a), n));
      REQUIRE(r.holds);
      REQUIRE(r.support == ipow(BigInt(a), static_cast<unsigned>(n)));
      REQUIRE(r.log_support == doctest::Approx(r.entropy_times_level).epsilon(1e-13));
    }
  }

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> raw(0, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::map<Word, Rational> weights;
    BigInt total = 0;
    std::vector<std::pair<Word, int>> draws;
    for (const auto& w : all_words(Alphabet::range(0, 1), 4)) {
      const int x = raw(rng);
      draws.emplace_back(w, x);
      total += x;
    }
    if (total == 0) continue;
    for (auto& [w, x] : draws) weights[w] = Rational(BigInt(x), total);
    auto r = support_count_check(CylinderDistribution::from_weights(4, weights));
    REQUIRE(r.holds);
  }
}

TEST_CASE("disjoint supports") {
  auto pos = Alphabet::range(1, 2), neg = Alphabet::range(-2, -1);
  auto both = Alphabet::signed_letters(2, false);
  for (std::size_t n = 1; n <= 12; ++n) {
    auto p = CylinderDistribution::uniform_bernoulli(pos, n);
    auto q = CylinderDistribution::uniform_bernoulli(neg, n);
    REQUIRE(disjoint_support_check(p, q));
    REQUIRE_FALSE(disjoint_support_check(p, p));
    REQUIRE_FALSE(disjoint_support_check(p, CylinderDistribution::uniform_bernoulli(both, n)));
  }
  auto explicit_p = CylinderDistribution::from_weights(2, CylinderDistribution::uniform_bernoulli(pos, 2).table());
  CHECK(disjoint_support_check(explicit_p, CylinderDistribution::uniform_bernoulli(neg, 2)));
  CHECK_FALSE(disjoint_support_check(explicit_p, CylinderDistribution::uniform_bernoulli(both, 2)));
  CHECK_THROWS_AS(disjoint_support_check(CylinderDistribution::uniform_bernoulli(pos, 2),
                                         CylinderDistribution::uniform_bernoulli(pos, 3)),
                  std::invalid_argument);
}

TEST_CASE("marginals of bernoulli tables are consistent") {
  auto letters = Alphabet::range(1, 3);
  for (std::size_t n = 2; n <= 8; ++n) {
    auto upper = CylinderDistribution::from_weights(n, CylinderDistribution::uniform_bernoulli(letters, n).table());
    auto lower = CylinderDistribution::uniform_bernoulli(letters, n - 1).table();
    REQUIRE(upper.marginal().table() == lower);
  }
  for (std::size_t n = 2; n <= 12; ++n) {
    auto m = CylinderDistribution::uniform_bernoulli(letters, n).marginal();
    REQUIRE(m.level() == n - 1);
    REQUIRE(m.weight(Word(std::vector<Letter>(n - 1, 2))) == bernoulli_weight(letters, Word(std::vector<Letter>(n - 1, 2))));
  }
}

TEST_CASE("sampled frequencies") {
  auto ten = Alphabet::range(1, 10);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto d = sample_and_frequencies(ten, 1000000, 2, seed);
    Rational sum = 0;
    double worst = 0;
    for (const auto& [w, p] : d.table()) {
      sum += p;
      worst = std::max(worst, std::abs(to_double(p) - 0.01));
    }
    CHECK(sum == 1);
    CHECK(d.support_size() == 100);
    CHECK(worst < 0.01);
    CHECK(support_count_check(d).holds);
  }
  auto a = sample_and_frequencies(ten, 5000, 3, 42);
  auto b = sample_and_frequencies(ten, 5000, 3, 42);
  CHECK(a.table() == b.table());
  CHECK(distribution_csv(a) == distribution_csv(b));
  CHECK_THROWS_AS(sample_and_frequencies(ten, 1, 2, 0), std::invalid_argument);
}

TEST_CASE("csv export") {
  auto d = CylinderDistribution::uniform_bernoulli(Alphabet::range(0, 1), 1);
  CHECK(distribution_csv(d) == "word,weight_numerator,weight_denominator\n0,1,2\n1,1,2\n");
}
