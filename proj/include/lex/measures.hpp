// measures.hpp -- finite-level cylinder distributions with exact weights.

#pragma once

#include "lex/bigint.hpp"
#include "lex/word.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace lex {

/// Weights on the words of one length. Either an explicit table or the
/// uniform i.i.d. measure on a sub-alphabet, which is kept symbolic so that
/// levels like 20^12 stay cheap. Weights always sum to exactly 1.
class CylinderDistribution {
public:
  /// Throws unless the weights are nonnegative, all words have length
  /// `level`, and the total is exactly 1. Zero weights are dropped.
  static CylinderDistribution from_weights(std::size_t level, std::map<Word, Rational> weights);
  static CylinderDistribution uniform_bernoulli(const Alphabet& letters, std::size_t level);

  std::size_t level() const { return level_; }
  bool is_symbolic() const { return uniform_.has_value(); }

  Rational weight(const Word& w) const;
  bool in_support(const Word& w) const { return weight(w) > 0; }
  BigInt support_size() const;

  /// Distinct positive weights and how many words carry each.
  std::map<Rational, BigInt> weight_histogram() const;

  /// Explicit table; symbolic distributions are expanded (budget applies).
  std::map<Word, Rational> table() const;

  /// Sum over the last letter: the level - 1 distribution.
  CylinderDistribution marginal() const;

  const std::optional<Alphabet>& uniform_letters() const { return uniform_; }

private:
  std::size_t level_ = 0;
  std::map<Word, Rational> weights_;
  std::optional<Alphabet> uniform_;
};

/// |letters|^-|w| when every letter of w is in `letters`, else 0.
Rational bernoulli_weight(const Alphabet& letters, const Word& w);

/// -(1/n) sum w ln w over positive weights; 0 at level 0. The sum is grouped
/// by weight so that each class contributes (exact mass) * ln(weight).
double level_entropy(const CylinderDistribution& dist);

struct SupportCountReport {
  BigInt support;
  double log_support;        // ln |support|
  double entropy_times_level; // n * level_entropy
  bool holds;                // ln|support| >= n h, up to one-sided rounding
};

/// |{w : weight > 0}| >= exp(n * level_entropy).
SupportCountReport support_count_check(const CylinderDistribution& dist);

/// True iff no word has positive weight under both. Throws on level mismatch.
bool disjoint_support_check(const CylinderDistribution& a, const CylinderDistribution& b);

/// Draws an i.i.d. uniform word of length L over `letters` from `seed` and
/// returns the empirical distribution of its L - n + 1 windows of length n.
CylinderDistribution sample_and_frequencies(const Alphabet& letters, std::uint64_t L,
                                            std::size_t n, std::uint64_t seed);

/// CSV with header word,weight_numerator,weight_denominator.
std::string distribution_csv(const CylinderDistribution& dist);

} // namespace lex
