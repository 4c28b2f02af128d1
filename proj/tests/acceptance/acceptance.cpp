// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include "lex/aspec.hpp"
#include "lex/aws.hpp"
#include "lex/cli.hpp"
#include "lex/codes.hpp"
#include "lex/measures.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace lex;

namespace {

struct Outcome {
  bool pass = true;
  std::string details;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!details.empty()) details += "; ";
      details += what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) o.require(false, "took longer than " + std::to_string(limit_s) + " s");
  failures += !o.pass;
  std::printf("criterion %2d %s: %s (%.2f s)%s%s\n", id, o.pass ? "PASS" : "FAIL", title, s,
              o.details.empty() ? "" : " -- ", o.details.c_str());
  std::fflush(stdout);
}

std::string num(std::size_t x) { return std::to_string(x); }

} // namespace

int main() {
  criterion(1, "T-code worked example", 1, [](Outcome& o) {
    const auto A = Alphabet::range(0, 2);
    const ParityVector v{0, 1, 0};
    o.require(t_membership(A, 10, v, parse_word("0121200111").letters()), "0121200111 should be a member");
    o.require(!t_membership(A, 10, v, parse_word("0211221100").letters()), "0211221100 should not be a member");
    o.require(repair_T(A, 10, v, parse_word("0211221100")) == parse_word("0211211100"), "repair result");
  });

  criterion(2, "T codes: 1-spanning, size bound, partition (a in {2,3}, n <= 12)", 60, [](Outcome& o) {
    for (std::size_t a : {2, 3}) {
      const auto A = Alphabet::range(0, static_cast<Letter>(a) - 1);
      for (std::size_t n = 1; n <= 12; ++n) {
        const std::string at = " at a=" + num(a) + " n=" + num(n);
        auto t = build_T(A, n);
        o.require(Rational(t.cardinality()) <= t_cardinality_bound(a, n), "size bound" + at);
        o.require(verify_spanning(t, 1), "1-spanning" + at);
        BigInt sum = 0;
        for (const auto& c : count_t_classes(A, n)) sum += c;
        o.require(sum == ipow(BigInt(a), static_cast<unsigned>(n)), "partition" + at);
      }
    }
  });

  criterion(3, "U and V codes: 2-spanning and sizes (a = 2, 2 <= n <= 12)", 60, [](Outcome& o) {
    const auto A = Alphabet::range(0, 1);
    for (std::size_t n = 2; n <= 12; ++n) {
      auto u = build_U(A, n);
      auto v = build_V(A, n);
      o.require(verify_spanning(u, 2), "U 2-spanning at n=" + num(n));
      o.require(verify_spanning(v, 2), "V 2-spanning at n=" + num(n));
      o.require(Rational(u.cardinality()) <= u_cardinality_bound(2, n), "U size at n=" + num(n));
      o.require(v.cardinality() == ipow(BigInt(2), static_cast<unsigned>(n - 2)), "V size at n=" + num(n));
    }
  });

  criterion(4, "3-separated extraction (full cubes and 50 seeded sets)", 60, [](Outcome& o) {
    auto check = [&](const std::vector<Word>& W, const Alphabet& A, std::size_t n, const std::string& tag) {
      auto s = extract_3_separated(W, A, n);
      o.require(verify_separated(s.members(), 3), "distance " + tag);
      o.require(Rational(s.cardinality()) >= Rational(BigInt(W.size()), BigInt(4 * n * A.size() * A.size())),
                "size " + tag);
    };
    for (std::size_t a : {2, 3}) {
      const auto A = Alphabet::range(0, static_cast<Letter>(a) - 1);
      for (std::size_t n = 1; n <= 8; ++n) check(all_words(A, n), A, n, "A^n a=" + num(a) + " n=" + num(n));
    }
    std::mt19937_64 rng(20240601);
    for (int t = 0; t < 50; ++t) {
      const std::size_t a = 2 + t % 2, n = 1 + static_cast<std::size_t>(t) % 8;
      const auto A = Alphabet::range(0, static_cast<Letter>(a) - 1);
      std::bernoulli_distribution keep(0.3);
      std::vector<Word> W;
      auto cube = all_words(A, n);
      for (const auto& w : cube)
        if (keep(rng)) W.push_back(w);
      if (W.empty()) W.push_back(cube.front());
      check(W, A, n, "seeded set " + num(t));
    }
  });

  criterion(5, "gap-function shift: brute = dp, gap table, 1000 glue tuples", 120, [](Outcome& o) {
    for (int N : {1, 2})
      for (std::size_t n = 1; n <= 14; ++n)
        o.require(count_language(*aws_model(N), n, CountMethod::brute) == aws_count_dp(N, n),
                  "counts differ at N=" + std::to_string(N) + " n=" + num(n));
    for (std::uint64_t n : {1, 2, 3, 4, 9, 10, 27, 28}) {
      const auto f = gap_f(n);
      o.require(aws_gap_allows(n, f) && !aws_gap_allows(n, f - 1), "gap table at n=" + std::to_string(n));
    }
    auto model = aws_model(2);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> count(2, 5), len(1, 12);
    std::size_t good = 0;
    for (int t = 0; t < 1000; ++t) {
      std::vector<Word> words(count(rng));
      std::vector<std::uint64_t> gaps;
      for (auto& w : words) w = random_member(*model, len(rng), rng);
      for (std::size_t i = 0; i + 1 < words.size(); ++i) gaps.push_back(gap_f(words[i].size()));
      good += aws_is_member(2, glue(2, words, gaps));
    }
    o.require(good == 1000, "glued members " + num(good) + "/1000");
  });

  criterion(6, "higher-power gap inequality, C in {1/4,1/2,1,2}, n <= 10^6", 60, [](Outcome& o) {
    for (const char* c : {"1/4", "1/2", "1", "2"}) {
      auto r = hp_gap_inequality_check(parse_rational(c), 1000000);
      o.require(r.passed() && r.sweep.checked == 1000000,
                std::string("C=") + c + " has " + std::to_string(r.sweep.violations) + " violations");
    }
  });

  criterion(7, "run-family shift: 56 three ways, equality for n <= 12, ell in {2,3}", 120, [](Outcome& o) {
    auto m = aspec_model(2, 2);
    o.require(count_language(*m, 3, CountMethod::brute) == 56, "brute at n=3");
    o.require(aspec_count_dp(*m, 3) == 56, "dp at n=3");
    o.require(count_formula(*m, 3) == 56, "formula at n=3");
    for (std::size_t ell : {2, 3}) {
      auto model = aspec_model(2, ell);
      for (std::size_t n = 1; n <= 12; ++n) {
        const auto b = count_language(*model, n, CountMethod::brute);
        o.require(b == aspec_count_dp(*model, n) && b == count_formula(*model, n),
                  "ell=" + num(ell) + " n=" + num(n));
      }
    }
  });

  criterion(8, "N = 10, ell = 32: alpha <= 0.91 and entropy bound for n <= 200", 300, [](Outcome& o) {
    auto model = aspec_model(10, 32);
    o.require(alpha_closed_bound(10, 32) == Rational(91, 100), "closed-form bound");
    auto rep = entropy_bound_check(*model, 200, 256);
    o.require(rep.applicable, "alpha upper bound not below 1");
    o.require(rep.alpha.upper <= Rational(91, 100), "alpha upper = " + std::to_string(to_double(rep.alpha.upper)));
    o.require(rep.rows.size() == 200, "rows");
    for (const auto& row : rep.rows) {
      o.require(row.holds, "count bound at n=" + num(row.n));
      o.require(row.log_rate <= row.rate_bound, "rate bound at n=" + num(row.n));
    }
  });

  criterion(9, "mistake-4 repair: 1000 seeded tuples (N = 2, ell = 3)", 60, [](Outcome& o) {
    auto model = aspec_model(2, 3);
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::size_t> count(1, 5), len(1, 20);
    std::size_t worst = 0;
    for (int t = 0; t < 1000; ++t) {
      std::vector<Word> words(count(rng));
      for (auto& w : words) w = random_member(*model, len(rng), rng);
      auto r = repair_concatenation(*model, words);
      o.require(aspec_is_member(*model, r.glued), "glued word of tuple " + std::to_string(t));
      for (auto d : r.distances) worst = std::max(worst, d);
    }
    o.require(worst <= 4, "distance " + num(worst));
    std::printf("             largest per-word distance observed: %zu\n", worst);
  });

  criterion(10, "Bernoulli measures: entropy ln a, support count equality, disjoint supports", 60,
            [](Outcome& o) {
              for (int a : {2, 10, 20}) {
                const auto pos = Alphabet::range(1, a), neg = Alphabet::range(-a, -1);
                for (std::size_t n = 1; n <= 12; ++n) {
                  const std::string at = " at a=" + std::to_string(a) + " n=" + num(n);
                  auto mu = CylinderDistribution::uniform_bernoulli(pos, n);
                  auto hist = mu.weight_histogram();
                  o.require(hist.size() == 1 && Rational(hist.begin()->second) * hist.begin()->first == 1,
                            "exact mass" + at);
                  const double h = level_entropy(mu), ln_a = std::log(double(a));
                  o.require(std::abs(h - ln_a) <= 1e-14 * ln_a, "entropy" + at);
                  auto sc = support_count_check(mu);
                  o.require(sc.holds && sc.support == ipow(BigInt(a), static_cast<unsigned>(n)) &&
                                std::abs(sc.log_support - sc.entropy_times_level) <= 1e-12 * sc.log_support,
                            "support count equality" + at);
                  o.require(disjoint_support_check(mu, CylinderDistribution::uniform_bernoulli(neg, n)),
                            "disjoint" + at);
                }
              }
            });

  criterion(11, "verify all --seed 7 is byte-identical across runs", 600, [](Outcome& o) {
    auto a = run_cli({"verify", "all", "--seed", "7"});
    auto b = run_cli({"verify", "all", "--seed", "7"});
    o.require(!a.out.empty() && a.out == b.out, "reports differ");
    o.require(a.exit_code == 0 && b.exit_code == 0, "suite exit code " + std::to_string(a.exit_code));
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
