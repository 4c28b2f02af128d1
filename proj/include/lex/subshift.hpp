// subshift.hpp -- subshifts as factorial membership predicates on finite words.
//
// A finite word is a member when it contains no forbidden subword of the
// model. For the models here every such word extends to a point of the
// subshift (padding with zeros for the gap example, constant-sign
// continuation for the run-family example), so membership coincides with
// the language L(X).

#pragma once

#include "lex/bigint.hpp"
#include "lex/word.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lex {

enum class ModelId { full, aws, aspec, higher_power };

std::string to_string(ModelId id);

class Subshift {
public:
  virtual ~Subshift() = default;

  virtual ModelId id() const = 0;
  virtual const Alphabet& alphabet() const = 0;
  virtual std::string describe() const = 0;

  /// Membership of a word whose letters are already known to lie in the
  /// alphabet. Must be factorial and safe to call concurrently.
  virtual bool accepts(std::span<const Letter> w) const = 0;

  /// Exact |L_n| from a run-structure recurrence, when the model has one.
  virtual std::optional<BigInt> count_by_recurrence(std::size_t n) const {
    (void)n;
    return std::nullopt;
  }
};

using SubshiftPtr = std::shared_ptr<const Subshift>;

SubshiftPtr full_shift(Alphabet alphabet);

/// The k-th higher-power shift. Its letters are 0..|L_k(base)|-1, indexing
/// the base language of length k in lexicographic order.
class HigherPowerShift final : public Subshift {
public:
  HigherPowerShift(SubshiftPtr base, std::size_t k);

  ModelId id() const override { return ModelId::higher_power; }
  const Alphabet& alphabet() const override { return alphabet_; }
  std::string describe() const override;
  bool accepts(std::span<const Letter> w) const override;
  std::optional<BigInt> count_by_recurrence(std::size_t n) const override;

  const Subshift& base() const { return *base_; }
  std::size_t power() const { return k_; }
  const Word& block(Letter letter) const { return blocks_.at(static_cast<std::size_t>(letter)); }
  /// Concatenation of the blocks named by `w`.
  Word expand(std::span<const Letter> w) const;
  /// Inverse of `block`; throws when `block_word` is not in L_k(base).
  Letter letter_of(const Word& block_word) const;

private:
  SubshiftPtr base_;
  std::size_t k_;
  std::vector<Word> blocks_;
  Alphabet alphabet_;
};

SubshiftPtr higher_power(SubshiftPtr base, std::size_t k);

class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(std::uint64_t budget);
  std::uint64_t budget() const { return budget_; }

private:
  std::uint64_t budget_;
};

/// Candidate-extension budget for brute enumeration: 10^8, or LEX_BUDGET.
std::uint64_t default_budget();

/// Validates letters against the alphabet (throws), then tests membership.
bool is_member(const Subshift& model, const Word& w);

/// A member word of length n grown letter by letter, each letter drawn
/// uniformly from those keeping the prefix a member. Requires every member
/// word to have a one-letter member extension (true for all models here).
Word random_member(const Subshift& model, std::size_t n, std::mt19937_64& rng);

enum class CountMethod { brute, dp, formula };

std::string to_string(CountMethod m);
CountMethod parse_count_method(const std::string& s);

/// Member words of length n in lexicographic order, by prefix-tree extension
/// with pruning.
std::vector<Word> enumerate_language(const Subshift& model, std::size_t n,
                                     std::uint64_t budget = default_budget());

/// |L_n| exactly. `formula` is only offered by models with a closed count
/// (the run-family example); use that module's entry point for it.
BigInt count_language(const Subshift& model, std::size_t n, CountMethod method,
                      std::uint64_t budget = default_budget());

struct EntropyRow {
  std::size_t n;
  BigInt count;
  CountMethod method;
  double log_rate;     // (1/n) ln count
  double upper_bound;  // min over m <= n of the log rate; h(X) <= this
};

std::vector<EntropyRow> entropy_table(const Subshift& model, std::size_t n_max,
                                      CountMethod method = CountMethod::dp);

/// True when the log-rate column never increases.
bool log_rate_nonincreasing(std::span<const EntropyRow> rows);

/// CSV with header n,count,method,log_rate.
std::string entropy_csv(std::span<const EntropyRow> rows);

struct GapFunction {
  std::function<std::uint64_t(std::uint64_t)> eval;
  std::string description;
};

struct GapFunctionReport {
  std::string description;
  std::uint64_t n_max = 0;
  bool positive = true;
  bool nondecreasing = true;
  std::vector<std::uint64_t> violations; // arguments where a check failed
  double max_ratio = 0;        // max f(n)/n over [1, n_max]
  std::uint64_t argmax_ratio = 1;
  double tail_ratio = 0;       // f(n_max)/n_max
  std::uint64_t sublinear_from = 1; // f(n) <= n for all n in [this, n_max]
  bool growth_flag = false;    // tail ratio >= 0.1: not visibly o(n)

  bool passed() const { return positive && nondecreasing; }
};

GapFunctionReport check_gap_function(const GapFunction& f, std::uint64_t n_max);

} // namespace lex
