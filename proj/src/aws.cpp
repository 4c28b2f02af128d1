#include "lex/aws.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lex {

std::uint64_t ceil_log3(std::uint64_t x) {
  std::uint64_t t = 0;
  unsigned __int128 p = 1;
  while (p < x) {
    p *= 3;
    ++t;
  }
  return t;
}

bool aws_gap_allows(std::uint64_t j, std::uint64_t m) {
  if (m < 2) return false;
  return ceil_log3(j) <= m - 2;
}

std::uint64_t gap_f(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("gap function is defined for n >= 1");
  return 2 + ceil_log3(n);
}

AwsShift::AwsShift(int N) : N_(N), alphabet_(Alphabet::signed_letters(N, true)) {}

std::string AwsShift::describe() const {
  return "gap-function subshift N=" + std::to_string(N_);
}

bool AwsShift::accepts(std::span<const Letter> w) const {
  bool in_run = false;
  bool seen_run = false;
  int run_sign = 0;
  std::uint64_t run_len = 0;
  std::uint64_t zeros = 0;
  for (Letter x : w) {
    if (x == 0) {
      if (in_run) {
        in_run = false;
        seen_run = true;
        zeros = 0;
      }
      ++zeros;
      continue;
    }
    const int s = x > 0 ? 1 : -1;
    if (in_run) {
      if (s != run_sign) return false;
      ++run_len;
      continue;
    }
    if (seen_run && !aws_gap_allows(run_len, zeros)) return false;
    in_run = true;
    run_sign = s;
    run_len = 1;
  }
  return true;
}

std::optional<BigInt> AwsShift::count_by_recurrence(std::size_t n) const {
  return aws_count_dp(N_, n);
}

SubshiftPtr aws_model(int N) { return std::make_shared<AwsShift>(N); }

bool aws_is_member(int N, const Word& w) {
  AwsShift model(N);
  return is_member(model, w);
}

bool aws_has_forbidden_subword(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (static_cast<long long>(w[i]) * w[i + 1] < 0) return true;
  for (std::size_t i = 0; i + 2 < n; ++i)
    if (w[i + 1] == 0 && static_cast<long long>(w[i]) * w[i + 2] < 0) return true;

  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t j = 1; s + j <= n && w[s + j - 1] != 0; ++j) {
      const std::size_t zeros_at = s + j;
      if (zeros_at >= n || w[zeros_at] != 0) continue;
      std::size_t m = 0;
      while (zeros_at + m < n && w[zeros_at + m] == 0) ++m;
      if (zeros_at + m == n) continue; // no closing nonzero letter
      if (!aws_gap_allows(j, m)) return true;
    }
  }
  return false;
}

Word glue(int N, const std::vector<Word>& words, const std::vector<std::uint64_t>& gaps) {
  if (words.size() < 2) throw std::invalid_argument("glue needs at least two words");
  if (gaps.size() + 1 != words.size())
    throw std::invalid_argument("glue needs exactly one gap between consecutive words");
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) throw std::invalid_argument("glue of an empty word");
    if (!aws_is_member(N, words[i]))
      throw std::invalid_argument("word " + std::to_string(i + 1) + " (" +
                                  format_word_spaced(words[i]) + ") is not in the language");
  }
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    const auto need = gap_f(words[i].size());
    if (gaps[i] < need)
      throw std::invalid_argument("gap " + std::to_string(i + 1) + " is " +
                                  std::to_string(gaps[i]) + " but gap_f(" +
                                  std::to_string(words[i].size()) + ") = " +
                                  std::to_string(need) + " is required");
  }
  Word out = words[0];
  for (std::size_t i = 1; i < words.size(); ++i) {
    for (std::uint64_t z = 0; z < gaps[i - 1]; ++z) out.push_back(0);
    out.append(words[i]);
  }
  if (!aws_is_member(N, out))
    throw std::logic_error("glued word left the language: " + format_word_spaced(out));
  return out;
}

BigInt aws_count_dp(int N, std::size_t n) {
  if (N < 1) throw std::invalid_argument("alphabet magnitude N must be at least 1");
  if (n < 1) throw std::invalid_argument("word length must be positive");
  std::vector<BigInt> run_choices(n + 1); // 2 N^L: sign and magnitudes of a run
  run_choices[0] = 1;
  for (std::size_t L = 1; L <= n; ++L) run_choices[L] = run_choices[L - 1] * N;
  for (std::size_t L = 1; L <= n; ++L) run_choices[L] *= 2;

  // blocks[i]: words of length i that start and end with a nonzero run and
  // whose interior zero gaps are all admissible. prefix[r] = sum of blocks[1..r].
  std::vector<BigInt> blocks(n + 1, 0), prefix(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    BigInt total = run_choices[i];
    for (std::size_t L = 1; L < i; ++L) {
      const auto g = gap_f(L);
      if (L + g >= i) continue;
      total += run_choices[L] * prefix[i - L - g];
    }
    blocks[i] = std::move(total);
    prefix[i] = prefix[i - 1] + blocks[i];
  }
  BigInt count = 1; // all zeros
  for (std::size_t i = 1; i <= n; ++i) count += blocks[i] * (n - i + 1);
  return count;
}

std::uint64_t hp_gap_lhs(std::uint64_t k, std::uint64_t n) {
  if (k == 0 || n == 0) throw std::invalid_argument("k and n must be positive");
  if (n > std::numeric_limits<std::uint64_t>::max() / k)
    throw std::overflow_error("k n overflows");
  const auto top = 2 + ceil_log3(k * n);
  return (top + k - 1) / k;
}

LogCeilTarget::LogCeilTarget(const Rational& C, std::uint64_t n_max) {
  if (C <= 0) throw std::invalid_argument("C must be positive");
  const BigInt p = boost::multiprecision::numerator(C);
  const BigInt q = boost::multiprecision::denominator(C);
  if (p > 64) throw std::invalid_argument("numerator of C too large");
  const unsigned p_exp = p.convert_to<unsigned>();
  // n <= B_t  <=>  n^p <= 3^(t q)  <=>  C log3 n <= t.
  for (std::uint64_t t = 0;; ++t) {
    const BigInt power = ipow(BigInt(3), static_cast<unsigned>(t * q.convert_to<std::uint64_t>()));
    BigInt b = integer_root(power, p_exp);
    const bool done = b >= n_max;
    breakpoints_.push_back(done ? std::numeric_limits<std::uint64_t>::max()
                                : b.convert_to<std::uint64_t>());
    if (done) break;
  }
}

std::uint64_t LogCeilTarget::operator()(std::uint64_t n) const {
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), n);
  const auto t = static_cast<std::uint64_t>(it - breakpoints_.begin());
  return std::max<std::uint64_t>(1, t);
}

HpInequalityReport hp_gap_inequality_check(const Rational& C, std::uint64_t n_max, Exec exec) {
  if (C <= 0) throw std::invalid_argument("C must be positive");
  HpInequalityReport rep;
  rep.C = C;
  const BigInt p = boost::multiprecision::numerator(C);
  const BigInt q = boost::multiprecision::denominator(C);
  rep.k = ((8 * q + p - 1) / p).convert_to<std::uint64_t>();
  rep.n_max = n_max;
  const LogCeilTarget rhs(C, n_max);
  const auto k = rep.k;
  rep.sweep = sweep_inequality(
      n_max, [k](std::uint64_t n) { return hp_gap_lhs(k, n); },
      [&rhs](std::uint64_t n) { return rhs(n); }, exec);
  return rep;
}

} // namespace lex
