// codes.hpp -- small covering and separated codes over arbitrary alphabets.
//
// Letters are reduced to their canonical indices 0..a-1 (ascending value)
// before any parity or modular sum.
//
//   T  1-spanning truncated Hamming classes: parity checks on the first 2^m
//      positions, m = floor(log2 n), one class per parity vector v.
//   U  2-spanning product T_{floor(n/2)} x T_{ceil(n/2)}.
//   V  2-spanning: first two letters fixed to an anchor letter.
//   S  3-separated class of a word set by (sum w_k mod 2a, sum k w_k mod 2an),
//      positions k counted from 1.

#pragma once

#include "lex/bigint.hpp"
#include "lex/kernels.hpp"
#include "lex/word.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lex {

enum class CodeFamily { T, U, V, S };

std::string to_string(CodeFamily f);
CodeFamily parse_code_family(const std::string& s);

/// Bits v_0 ... v_{m-1}; ordered as that string for tie-breaks.
using ParityVector = std::vector<std::uint8_t>;

/// floor(log2 n), the number of parity constraints on A^n. Requires n >= 1.
std::size_t parity_checks(std::size_t n);

ParityVector parity_vector_from_mask(std::uint64_t mask, std::size_t m);
std::uint64_t parity_mask(const ParityVector& v);
std::string format_parity(const ParityVector& v);

bool t_membership(const Alphabet& alphabet, std::size_t n, const ParityVector& v,
                  std::span<const Letter> w);

/// |T_{A,n,v}| by a recurrence over positions whose state is the vector of
/// running parities.
BigInt count_t_class(const Alphabet& alphabet, std::size_t n, const ParityVector& v);

/// Every class size at once, indexed by parity mask (bit j = v_j).
std::vector<BigInt> count_t_classes(const Alphabet& alphabet, std::size_t n);

/// Changes at most one letter so that the result lies in T_{A,n,v}.
Word repair_T(const Alphabet& alphabet, std::size_t n, const ParityVector& v, const Word& w);

class Code {
public:
  CodeFamily family() const { return family_; }
  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t length() const { return n_; }
  const BigInt& cardinality() const { return cardinality_; }

  /// 1 for T, 2 for U and V; S codes carry no covering guarantee (0).
  std::size_t spanning_radius() const;

  bool contains(std::span<const Letter> w) const;
  bool contains(const Word& w) const { return contains(w.letters()); }

  /// Member within spanning_radius() of `w`; members come back unchanged.
  Word repair(const Word& w) const;

  /// Sorted member list. Enumerates A^n for predicate families.
  std::vector<Word> members() const;

  const ParityVector& parity() const { return parity_; }                     // T
  const Code& first_half() const { return *halves_.at(0); }                 // U
  const Code& second_half() const { return *halves_.at(1); }                // U
  Letter anchor() const { return anchor_; }                                 // V
  std::pair<std::uint64_t, std::uint64_t> residues() const { return residues_; } // S

  std::string params_string() const;

  friend Code build_T(const Alphabet&, std::size_t);
  friend Code build_U(const Alphabet&, std::size_t);
  friend Code build_V(const Alphabet&, std::size_t);
  friend Code extract_3_separated(const std::vector<Word>&, const Alphabet&, std::size_t);

private:
  Code(CodeFamily family, Alphabet alphabet, std::size_t n)
      : family_(family), alphabet_(std::move(alphabet)), n_(n) {}

  CodeFamily family_;
  Alphabet alphabet_;
  std::size_t n_;
  BigInt cardinality_;
  ParityVector parity_;
  std::vector<std::shared_ptr<const Code>> halves_;
  Letter anchor_ = 0;
  std::pair<std::uint64_t, std::uint64_t> residues_{0, 0};
  std::vector<Word> explicit_members_;
};

/// The smallest class T_{A,n,v} (ties: lexicographically smallest v).
Code build_T(const Alphabet& alphabet, std::size_t n);
Code build_U(const Alphabet& alphabet, std::size_t n);
Code build_V(const Alphabet& alphabet, std::size_t n);

/// The anchor for V codes: the letter 1 when present, otherwise its mirror
/// -1, otherwise the smallest letter.
Letter v_anchor(const Alphabet& alphabet);

/// The largest class S_{n,i,j} of W (ties: smallest (i, j)).
Code extract_3_separated(const std::vector<Word>& W, const Alphabet& alphabet, std::size_t n);

/// Class key (sum of indices mod 2a, sum of k * index mod 2an) with k from 1.
std::pair<std::uint64_t, std::uint64_t> separation_class(const Alphabet& alphabet,
                                                         std::span<const Letter> w);

Word repair_spanning(const Code& code, const Word& w);

/// Exhaustive over A^n; budget caps a^n.
bool verify_spanning(const Code& code, std::size_t radius, Exec exec = Exec::parallel);
bool verify_spanning(const Alphabet& alphabet, std::size_t n, const std::vector<Word>& set,
                     std::size_t radius, Exec exec = Exec::parallel);

bool verify_separated(const std::vector<Word>& words, std::size_t d_min,
                      Exec exec = Exec::parallel);

/// Header line "family=T a=3 n=10 params=v=010 cardinality=..." then one
/// compact word per line, sorted.
std::string export_code(const Code& code);

/// Upper bounds from the constructions, exactly: a^n / 2^m for T and
/// 16 a^n / n^2 for U; V has exactly a^(n-2).
Rational t_cardinality_bound(std::size_t a, std::size_t n);
Rational u_cardinality_bound(std::size_t a, std::size_t n);

} // namespace lex
