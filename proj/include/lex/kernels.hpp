// kernels.hpp -- the exhaustive sweeps, each with a serial reference and an
// OpenMP version. Both produce identical results for any thread schedule;
// parallel merges are sums, conjunctions, minima and in-order concatenation.

#pragma once

#include "lex/subshift.hpp"
#include "lex/word.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace lex {

enum class Exec { serial, parallel };

/// Number of member words of length n (prefix-tree search, no storage).
std::uint64_t brute_count(const Subshift& model, std::size_t n,
                          std::uint64_t budget, Exec exec = Exec::parallel);

/// Member words of length n in lexicographic order.
std::vector<Word> brute_enumerate(const Subshift& model, std::size_t n,
                                  std::uint64_t budget, Exec exec = Exec::parallel);

using WordPredicate = std::function<bool(std::span<const Letter>)>;

/// True iff every word of A^n lies within Hamming distance `radius` of a word
/// accepted by `contains`. Neighbourhoods are searched directly, so the check
/// never consults any repair procedure.
bool sweep_spanning(const Alphabet& alphabet, std::size_t n,
                    const WordPredicate& contains, std::size_t radius,
                    Exec exec = Exec::parallel);

/// Minimum pairwise Hamming distance (nullopt for fewer than two words).
std::optional<std::size_t> min_pairwise_distance(const std::vector<Word>& words,
                                                 Exec exec = Exec::parallel);

struct InequalitySweep {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::optional<std::uint64_t> first_violation;
  std::uint64_t max_lhs = 0;
  std::uint64_t max_rhs = 0;
};

/// Sweeps n in [1, n_max] comparing lhs(n) <= rhs(n).
InequalitySweep sweep_inequality(std::uint64_t n_max,
                                 const std::function<std::uint64_t(std::uint64_t)>& lhs,
                                 const std::function<std::uint64_t(std::uint64_t)>& rhs,
                                 Exec exec = Exec::parallel);

} // namespace lex
