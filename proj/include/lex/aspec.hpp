// aspec.hpp -- a subshift with almost specification (mistake function 4)
// whose entropy is ln N, so that the two constant-sign Bernoulli measures are
// distinct measures of maximal entropy.
//
// Alphabet {-N..-1, 1..N}. A maximal constant-sign run bracketed on both
// sides by letters of the opposite sign must lie in the run family of its
// length and sign:
//
//   P_1 = {1},                 N_1 = {-1}
//   P_t = V_{{1..N}, t},       N_t = -P_t        for 1 < t <= ell
//   P_t = U_{{1..N}, t},       N_t = -P_t        for t > ell
//
// Runs at either end of a word are unconstrained.

#pragma once

#include "lex/bigint.hpp"
#include "lex/codes.hpp"
#include "lex/subshift.hpp"
#include "lex/word.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace lex {

class AspecShift final : public Subshift {
public:
  AspecShift(int N, std::size_t ell);

  ModelId id() const override { return ModelId::aspec; }
  const Alphabet& alphabet() const override { return alphabet_; }
  std::string describe() const override;
  bool accepts(std::span<const Letter> w) const override;
  std::optional<BigInt> count_by_recurrence(std::size_t n) const override;

  int magnitude() const { return N_; }
  std::size_t ell() const { return ell_; }
  const Alphabet& positive_letters() const { return positive_; }

  /// The positive run family P_t as a code over {1..N}, for t >= 2.
  /// P_1 = {1} is handled directly by run_in_family and repair_run.
  std::shared_ptr<const Code> family(std::size_t t) const;

  /// M_t = |P_t| = |N_t|.
  BigInt family_size(std::size_t t) const;

  /// Whether a constant-sign run (either sign) lies in its family.
  bool run_in_family(std::span<const Letter> run) const;

  /// Nearest family member chosen by the code's repair; sign is preserved
  /// and at most two letters change.
  Word repair_run(const Word& run) const;

private:
  int N_;
  std::size_t ell_;
  Alphabet alphabet_;
  Alphabet positive_;
  std::vector<std::shared_ptr<const Code>> prebuilt_; // index t, t < prebuilt_.size()
  mutable std::mutex cache_mutex_;
  mutable std::map<std::size_t, std::shared_ptr<const Code>> cache_;
};

std::shared_ptr<const AspecShift> aspec_model(int N, std::size_t ell);

bool aspec_is_member(const AspecShift& model, const Word& w);

struct RepairEdit {
  std::size_t word_index;
  std::size_t position; // within that word
  Letter before;
  Letter after;
};

struct RepairResult {
  std::vector<Word> repaired;
  Word glued;
  std::vector<RepairEdit> edits;
  std::vector<std::size_t> distances; // hamming(words[i], repaired[i])
};

/// Concatenates member words and repairs every maximal constant-sign run of
/// the concatenation into its family. Post-conditions (membership of the
/// glued word, per-word distance <= 4) are re-verified before returning.
/// With repair_edges false the first and last runs are left as they are,
/// which membership allows.
RepairResult repair_concatenation(const AspecShift& model, const std::vector<Word>& words,
                                  bool repair_edges = true);

/// Transcript as JSON: {"words": [...], "repaired": [...], "glued": ...,
/// "edits": [{"word":i,"position":p,"before":b,"after":a}], "distances": [...]}.
std::string repair_transcript_json(const std::vector<Word>& words, const RepairResult& r);

/// |L_n| = 2N^n + 2(n-1)N^n + sum over compositions with k >= 3 parts of
/// 2 N^{n_1} (prod of M over interior parts) N^{n_k}, with the interior sum
/// evaluated as a convolution over total interior length.
BigInt count_formula(const AspecShift& model, std::size_t n);

/// |L_n| by a first-run / suffix recurrence (independent of count_formula).
BigInt aspec_count_dp(const AspecShift& model, std::size_t n);

/// Entries 1..n_max (index 0 unused) of the two counts above.
std::vector<BigInt> count_formula_table(const AspecShift& model, std::size_t n_max);
std::vector<BigInt> aspec_count_dp_table(const AspecShift& model, std::size_t n_max);

struct AlphaInterval {
  Rational lower; // sum_{t <= cutoff} M_t N^-t
  Rational upper; // lower + 16 / cutoff
  std::size_t cutoff = 0;
};

/// Requires cutoff > ell.
AlphaInterval alpha_interval(const AspecShift& model, std::size_t cutoff);

/// N^-1 + (ell - 1) N^-2 + 16 / ell, the closed-form bound on alpha.
Rational alpha_closed_bound(int N, std::size_t ell);

struct EntropyBoundRow {
  std::size_t n;
  BigInt count;
  Rational bound;      // (2n / (1 - alpha_upper)) N^n
  bool holds;
  double log_rate;     // (1/n) ln count
  double rate_bound;   // ln N + ln(2n / (1 - alpha_upper)) / n
};

struct EntropyBoundReport {
  bool applicable = false;
  std::string note;
  AlphaInterval alpha;
  std::vector<EntropyBoundRow> rows;
  bool passed() const;
};

EntropyBoundReport entropy_bound_check(const AspecShift& model, std::size_t n_max,
                                       std::size_t cutoff = 256);

/// CSV "n,M_n" for t = 1..t_max.
std::string family_table_csv(const AspecShift& model, std::size_t t_max);

} // namespace lex
