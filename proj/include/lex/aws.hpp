// aws.hpp -- a subshift with almost weak specification (gap 2 + ceil(log3 n))
// that nevertheless carries two measures of maximal entropy.
//
// Alphabet {-N..N}. Forbidden words:
//   (a) adjacent ij with ij < 0;
//   (b) i0j with ij < 0;
//   (c) v_1..v_j 0^m v_{j+1}, all v_i != 0, m >= 1, m < 2 + log3 j.
// Family (c) is decided exactly: m < 2 + log3 j  <=>  m < 2 or 3^(m-2) < j.

#pragma once

#include "lex/bigint.hpp"
#include "lex/kernels.hpp"
#include "lex/subshift.hpp"
#include "lex/word.hpp"

#include <cstdint>
#include <vector>

namespace lex {

/// True when a zero run of length m may follow a nonzero block of length j.
bool aws_gap_allows(std::uint64_t j, std::uint64_t m);

/// 2 + (smallest t >= 0 with 3^t >= n).
std::uint64_t gap_f(std::uint64_t n);

/// Smallest t >= 0 with 3^t >= x, i.e. ceil(log3 x) for x >= 1.
std::uint64_t ceil_log3(std::uint64_t x);

class AwsShift final : public Subshift {
public:
  explicit AwsShift(int N);

  ModelId id() const override { return ModelId::aws; }
  const Alphabet& alphabet() const override { return alphabet_; }
  std::string describe() const override;
  bool accepts(std::span<const Letter> w) const override;
  std::optional<BigInt> count_by_recurrence(std::size_t n) const override;

  int magnitude() const { return N_; }

private:
  int N_;
  Alphabet alphabet_;
};

SubshiftPtr aws_model(int N);

/// Run form: nonzero runs constant-sign, and a nonzero run of length L
/// followed by m zeros and then a nonzero letter needs aws_gap_allows(L, m).
bool aws_is_member(int N, const Word& w);

/// Literal scan for subwords in families (a), (b), (c). Family (c) is applied
/// to every all-nonzero block, mixed sign or not.
bool aws_has_forbidden_subword(std::span<const Letter> w);

/// w1 0^g1 w2 ... 0^g(k-1) wk. Requires k >= 2 member words and
/// g_i >= gap_f(|w_i|); the result is re-verified as a member.
Word glue(int N, const std::vector<Word>& words, const std::vector<std::uint64_t>& gaps);

/// |L_n| by composition over [zeros][run][gap][run]...[run][zeros]; O(n^2).
BigInt aws_count_dp(int N, std::size_t n);

struct HpInequalityReport {
  Rational C;
  std::uint64_t k = 0;
  std::uint64_t n_max = 0;
  InequalitySweep sweep;
  bool passed() const { return sweep.violations == 0; }
};

/// ceil((2 + ceil(log3(k n))) / k), the induced gap on the k-th power.
std::uint64_t hp_gap_lhs(std::uint64_t k, std::uint64_t n);

/// Evaluates max(1, ceil(C log3 n)) exactly from precomputed breakpoints
/// B_t = floor(3^(t/C)): the value at n is the smallest t with n <= B_t.
class LogCeilTarget {
public:
  LogCeilTarget(const Rational& C, std::uint64_t n_max);
  std::uint64_t operator()(std::uint64_t n) const;

private:
  std::vector<std::uint64_t> breakpoints_;
};

/// k = ceil(8/C); checks hp_gap_lhs(k, n) <= max(1, ceil(C log3 n)) for
/// every n in [1, n_max].
HpInequalityReport hp_gap_inequality_check(const Rational& C, std::uint64_t n_max,
                                           Exec exec = Exec::parallel);

} // namespace lex
