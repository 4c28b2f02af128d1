#include "lex/codes.hpp"

#include "lex/subshift.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lex {

std::string to_string(CodeFamily f) {
  switch (f) {
  case CodeFamily::T: return "T";
  case CodeFamily::U: return "U";
  case CodeFamily::V: return "V";
  case CodeFamily::S: return "S";
  }
  return "?";
}

CodeFamily parse_code_family(const std::string& s) {
  if (s == "T") return CodeFamily::T;
  if (s == "U") return CodeFamily::U;
  if (s == "V") return CodeFamily::V;
  if (s == "S") return CodeFamily::S;
  throw std::invalid_argument("unknown code family '" + s + "'");
}

std::size_t parity_checks(std::size_t n) {
  if (n < 1) throw std::invalid_argument("code length must be positive");
  std::size_t m = 0;
  while ((std::size_t{2} << m) <= n) ++m;
  return m;
}

ParityVector parity_vector_from_mask(std::uint64_t mask, std::size_t m) {
  ParityVector v(m);
  for (std::size_t j = 0; j < m; ++j) v[j] = (mask >> j) & 1U;
  return v;
}

std::uint64_t parity_mask(const ParityVector& v) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j]) mask |= std::uint64_t{1} << j;
  return mask;
}

std::string format_parity(const ParityVector& v) {
  std::string s;
  for (auto b : v) s.push_back(b ? '1' : '0');
  return s;
}

namespace {

void require_parity_length(const ParityVector& v, std::size_t n) {
  if (v.size() != parity_checks(n))
    throw std::invalid_argument("parity vector has length " + std::to_string(v.size()) +
                                ", expected floor(log2 " + std::to_string(n) + ") = " +
                                std::to_string(parity_checks(n)));
}

// Bit j set when constraint j is currently odd.
std::uint64_t parity_state(const Alphabet& alphabet, std::size_t m, std::span<const Letter> w) {
  const std::size_t checked = std::size_t{1} << m;
  std::uint64_t state = 0;
  for (std::size_t i = 0; i < checked; ++i) {
    if (alphabet.index_of(w[i]) % 2 == 0) continue;
    state ^= ~static_cast<std::uint64_t>(i) & ((std::uint64_t{1} << m) - 1);
  }
  return state;
}

} // namespace

bool t_membership(const Alphabet& alphabet, std::size_t n, const ParityVector& v,
                  std::span<const Letter> w) {
  require_parity_length(v, n);
  if (w.size() != n) throw std::invalid_argument("word length differs from code length");
  return parity_state(alphabet, v.size(), w) == parity_mask(v);
}

std::vector<BigInt> count_t_classes(const Alphabet& alphabet, std::size_t n) {
  const std::size_t m = parity_checks(n);
  const std::size_t states = std::size_t{1} << m;
  const std::uint64_t full = states - 1;
  const BigInt even = (alphabet.size() + 1) / 2;
  const BigInt odd = alphabet.size() / 2;

  std::vector<BigInt> dp(states, 0), next(states);
  dp[0] = 1;
  for (std::size_t i = 0; i < states; ++i) {
    const std::uint64_t flips = ~static_cast<std::uint64_t>(i) & full;
    for (std::size_t s = 0; s < states; ++s) next[s] = even * dp[s] + odd * dp[s ^ flips];
    dp.swap(next);
  }
  const BigInt tail = ipow(BigInt(alphabet.size()), static_cast<unsigned>(n - states));
  for (auto& c : dp) c *= tail;
  return dp;
}

BigInt count_t_class(const Alphabet& alphabet, std::size_t n, const ParityVector& v) {
  require_parity_length(v, n);
  return count_t_classes(alphabet, n).at(parity_mask(v));
}

Word repair_T(const Alphabet& alphabet, std::size_t n, const ParityVector& v, const Word& w) {
  require_parity_length(v, n);
  if (w.size() != n) throw std::invalid_argument("word length differs from code length");
  const std::size_t m = v.size();
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  const std::uint64_t wrong = parity_state(alphabet, m, w.letters()) ^ parity_mask(v);
  if (wrong == 0) return w;

  // Position i = sum of 2^j over satisfied constraints j lies in exactly the
  // unsatisfied ones.
  const std::size_t i = static_cast<std::size_t>(~wrong & full);
  const std::size_t flip_to = (alphabet.index_of(w[i]) % 2 == 0) ? 1 : 0;
  if (flip_to >= alphabet.size()) throw std::domain_error("no opposite-parity letter");
  Word out = w;
  out[i] = alphabet.letter(flip_to);
  return out;
}

std::size_t Code::spanning_radius() const {
  switch (family_) {
  case CodeFamily::T: return 1;
  case CodeFamily::U:
  case CodeFamily::V: return 2;
  case CodeFamily::S: return 0;
  }
  return 0;
}

bool Code::contains(std::span<const Letter> w) const {
  if (w.size() != n_) return false;
  for (Letter l : w)
    if (!alphabet_.contains(l)) return false;
  switch (family_) {
  case CodeFamily::T:
    return parity_state(alphabet_, parity_.size(), w) == parity_mask(parity_);
  case CodeFamily::U: {
    const auto h = halves_[0]->length();
    return halves_[0]->contains(w.first(h)) && halves_[1]->contains(w.subspan(h));
  }
  case CodeFamily::V:
    return w[0] == anchor_ && w[1] == anchor_;
  case CodeFamily::S:
    return std::binary_search(explicit_members_.begin(), explicit_members_.end(), Word(w));
  }
  return false;
}

Word Code::repair(const Word& w) const {
  if (w.size() != n_) throw std::invalid_argument("word length differs from code length");
  require_letters_in(alphabet_, w.letters());
  switch (family_) {
  case CodeFamily::T:
    return repair_T(alphabet_, n_, parity_, w);
  case CodeFamily::U: {
    const auto h = halves_[0]->length();
    Word out = halves_[0]->repair(w.subword(0, h));
    out.append(halves_[1]->repair(w.subword(h, n_ - h)));
    return out;
  }
  case CodeFamily::V: {
    Word out = w;
    out[0] = anchor_;
    out[1] = anchor_;
    return out;
  }
  case CodeFamily::S:
    break;
  }
  throw std::logic_error("separated codes have no covering repair");
}

std::vector<Word> Code::members() const {
  if (family_ == CodeFamily::S) return explicit_members_;
  if (cardinality_ > default_budget())
    throw BudgetExceeded(default_budget());
  std::vector<Word> out;
  switch (family_) {
  case CodeFamily::T:
    for (auto& w : all_words(alphabet_, n_))
      if (contains(w)) out.push_back(std::move(w));
    break;
  case CodeFamily::U: {
    auto left = halves_[0]->members();
    auto right = halves_[1]->members();
    for (const auto& a : left)
      for (const auto& b : right) {
        Word w = a;
        w.append(b);
        out.push_back(std::move(w));
      }
    break;
  }
  case CodeFamily::V:
    for (const auto& tail : all_words(alphabet_, n_ - 2)) {
      Word w{anchor_, anchor_};
      w.append(tail);
      out.push_back(std::move(w));
    }
    break;
  case CodeFamily::S:
    break;
  }
  return out;
}

std::string Code::params_string() const {
  switch (family_) {
  case CodeFamily::T: return "v=" + format_parity(parity_);
  case CodeFamily::U:
    return "v1=" + format_parity(halves_[0]->parity()) +
           ",v2=" + format_parity(halves_[1]->parity());
  case CodeFamily::V: return "anchor=" + std::to_string(anchor_);
  case CodeFamily::S:
    return "i=" + std::to_string(residues_.first) + ",j=" + std::to_string(residues_.second);
  }
  return "";
}

Code build_T(const Alphabet& alphabet, std::size_t n) {
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  const auto m = parity_checks(n);
  const auto counts = count_t_classes(alphabet, n);
  std::uint64_t best = 0;
  std::string best_key = format_parity(parity_vector_from_mask(0, m));
  for (std::uint64_t mask = 1; mask < counts.size(); ++mask) {
    auto key = format_parity(parity_vector_from_mask(mask, m));
    if (counts[mask] < counts[best] || (counts[mask] == counts[best] && key < best_key)) {
      best = mask;
      best_key = std::move(key);
    }
  }
  Code code(CodeFamily::T, alphabet, n);
  code.parity_ = parity_vector_from_mask(best, m);
  code.cardinality_ = counts[best];
  return code;
}

Code build_U(const Alphabet& alphabet, std::size_t n) {
  if (n < 2) throw std::invalid_argument("U codes need n >= 2");
  Code code(CodeFamily::U, alphabet, n);
  code.halves_.push_back(std::make_shared<const Code>(build_T(alphabet, n / 2)));
  code.halves_.push_back(std::make_shared<const Code>(build_T(alphabet, n - n / 2)));
  code.cardinality_ = code.halves_[0]->cardinality() * code.halves_[1]->cardinality();
  return code;
}

Letter v_anchor(const Alphabet& alphabet) {
  if (alphabet.empty()) throw std::invalid_argument("empty alphabet");
  if (alphabet.contains(1)) return 1;
  if (alphabet.contains(-1)) return -1;
  return alphabet.letter(0);
}

Code build_V(const Alphabet& alphabet, std::size_t n) {
  if (n < 2) throw std::invalid_argument("V codes need n >= 2");
  Code code(CodeFamily::V, alphabet, n);
  code.anchor_ = v_anchor(alphabet);
  code.cardinality_ = ipow(BigInt(alphabet.size()), static_cast<unsigned>(n - 2));
  return code;
}

std::pair<std::uint64_t, std::uint64_t> separation_class(const Alphabet& alphabet,
                                                         std::span<const Letter> w) {
  const std::uint64_t a = alphabet.size();
  const std::uint64_t n = w.size();
  std::uint64_t sum = 0, weighted = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const std::uint64_t x = alphabet.index_of(w[k - 1]);
    sum = (sum + x) % (2 * a);
    weighted = (weighted + k * x) % (2 * a * n);
  }
  return {sum, weighted};
}

Code extract_3_separated(const std::vector<Word>& W, const Alphabet& alphabet, std::size_t n) {
  if (W.empty()) throw std::invalid_argument("cannot extract from an empty word set");
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<Word>> classes;
  for (const auto& w : W) {
    if (w.size() != n) throw std::invalid_argument("word length differs from n");
    classes[separation_class(alphabet, w.letters())].push_back(w);
  }
  auto best = classes.begin();
  for (auto it = classes.begin(); it != classes.end(); ++it)
    if (it->second.size() > best->second.size()) best = it;

  Code code(CodeFamily::S, alphabet, n);
  code.residues_ = best->first;
  code.explicit_members_ = std::move(best->second);
  std::sort(code.explicit_members_.begin(), code.explicit_members_.end());
  code.explicit_members_.erase(
      std::unique(code.explicit_members_.begin(), code.explicit_members_.end()),
      code.explicit_members_.end());
  code.cardinality_ = code.explicit_members_.size();
  return code;
}

Word repair_spanning(const Code& code, const Word& w) { return code.repair(w); }

namespace {

void require_sweepable(const Alphabet& alphabet, std::size_t n) {
  BigInt cube = ipow(BigInt(alphabet.size()), static_cast<unsigned>(n));
  if (cube > default_budget()) throw BudgetExceeded(default_budget());
}

} // namespace

bool verify_spanning(const Code& code, std::size_t radius, Exec exec) {
  require_sweepable(code.alphabet(), code.length());
  return sweep_spanning(code.alphabet(), code.length(),
                        [&code](std::span<const Letter> w) { return code.contains(w); },
                        radius, exec);
}

bool verify_spanning(const Alphabet& alphabet, std::size_t n, const std::vector<Word>& set,
                     std::size_t radius, Exec exec) {
  require_sweepable(alphabet, n);
  std::vector<Word> sorted = set;
  std::sort(sorted.begin(), sorted.end());
  return sweep_spanning(alphabet, n,
                        [&sorted](std::span<const Letter> w) {
                          return std::binary_search(sorted.begin(), sorted.end(), Word(w));
                        },
                        radius, exec);
}

bool verify_separated(const std::vector<Word>& words, std::size_t d_min, Exec exec) {
  for (const auto& w : words)
    if (w.size() != words.front().size())
      throw std::invalid_argument("unequal lengths");
  auto d = min_pairwise_distance(words, exec);
  return !d || *d >= d_min;
}

std::string export_code(const Code& code) {
  std::ostringstream out;
  out << "family=" << to_string(code.family()) << " a=" << code.alphabet().size()
      << " n=" << code.length() << " params=" << code.params_string()
      << " cardinality=" << to_decimal(code.cardinality()) << '\n';
  auto members = code.members();
  std::sort(members.begin(), members.end());
  for (const auto& w : members) out << format_word(w) << '\n';
  return out.str();
}

Rational t_cardinality_bound(std::size_t a, std::size_t n) {
  return Rational(ipow(BigInt(a), static_cast<unsigned>(n)),
                  BigInt(1) << parity_checks(n));
}

Rational u_cardinality_bound(std::size_t a, std::size_t n) {
  return Rational(16 * ipow(BigInt(a), static_cast<unsigned>(n)), BigInt(n) * n);
}

} // namespace lex
