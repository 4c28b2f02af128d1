#include "lex/aspec.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace lex {

namespace {

constexpr std::size_t kPrebuiltRuns = 64;

std::shared_ptr<const Code> make_family(const Alphabet& positive, std::size_t ell, std::size_t t) {
  if (t <= ell) return std::make_shared<const Code>(build_V(positive, t));
  return std::make_shared<const Code>(build_U(positive, t));
}

} // namespace

AspecShift::AspecShift(int N, std::size_t ell)
    : N_(N), ell_(ell), alphabet_(Alphabet::signed_letters(N, false)),
      positive_(Alphabet::range(1, N)) {
  if (N < 2) throw std::invalid_argument("run-family model needs N >= 2");
  if (ell < 2) throw std::invalid_argument("run-family model needs ell >= 2");
  prebuilt_.resize(kPrebuiltRuns);
  for (std::size_t t = 2; t < kPrebuiltRuns; ++t) prebuilt_[t] = make_family(positive_, ell_, t);
}

std::string AspecShift::describe() const {
  return "run-family subshift N=" + std::to_string(N_) + " ell=" + std::to_string(ell_);
}

std::shared_ptr<const Code> AspecShift::family(std::size_t t) const {
  if (t < 2) throw std::invalid_argument("run families are codes only for length >= 2");
  if (t < prebuilt_.size()) return prebuilt_[t];
  std::lock_guard lock(cache_mutex_);
  auto& slot = cache_[t];
  if (!slot) slot = make_family(positive_, ell_, t);
  return slot;
}

BigInt AspecShift::family_size(std::size_t t) const {
  if (t < 1) throw std::invalid_argument("run length must be positive");
  if (t == 1) return 1;
  return family(t)->cardinality();
}

bool AspecShift::run_in_family(std::span<const Letter> run) const {
  if (run.empty()) return false;
  const int sign = run[0] > 0 ? 1 : -1;
  if (run.size() == 1) return run[0] == sign;
  thread_local std::vector<Letter> magnitudes;
  magnitudes.clear();
  for (Letter l : run) {
    if ((l > 0 ? 1 : -1) != sign || l == 0) return false;
    magnitudes.push_back(l * sign);
  }
  return family(run.size())->contains(magnitudes);
}

Word AspecShift::repair_run(const Word& run) const {
  if (run.empty()) throw std::invalid_argument("empty run");
  const int sign = run[0] > 0 ? 1 : -1;
  for (Letter l : run)
    if (l == 0 || (l > 0 ? 1 : -1) != sign)
      throw std::invalid_argument("run is not of constant sign");
  if (run.size() == 1) return Word{sign};
  Word magnitudes = run;
  for (auto& l : magnitudes.mutable_letters()) l *= sign;
  Word fixed = family(run.size())->repair(magnitudes);
  for (auto& l : fixed.mutable_letters()) l *= sign;
  return fixed;
}

bool AspecShift::accepts(std::span<const Letter> w) const {
  std::size_t start = 0;
  bool first = true;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    if (i < w.size() && (w[i] > 0) == (w[start] > 0)) continue;
    // [start, i) is a maximal run; interior when neither first nor last.
    if (!first && i < w.size() && !run_in_family(w.subspan(start, i - start))) return false;
    first = false;
    start = i;
  }
  return true;
}

std::optional<BigInt> AspecShift::count_by_recurrence(std::size_t n) const {
  return aspec_count_dp(*this, n);
}

std::shared_ptr<const AspecShift> aspec_model(int N, std::size_t ell) {
  return std::make_shared<const AspecShift>(N, ell);
}

bool aspec_is_member(const AspecShift& model, const Word& w) {
  for (Letter l : w)
    if (l == 0) throw std::invalid_argument("letter 0 is not in the run-family alphabet");
  return is_member(model, w);
}

RepairResult repair_concatenation(const AspecShift& model, const std::vector<Word>& words,
                                  bool repair_edges) {
  if (words.empty()) throw std::invalid_argument("nothing to concatenate");
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].empty()) throw std::invalid_argument("empty word in concatenation");
    if (!aspec_is_member(model, words[i]))
      throw std::invalid_argument("word " + std::to_string(i + 1) + " (" +
                                  format_word_spaced(words[i]) + ") is not in the language");
  }
  const Word raw = concat(words);
  RepairResult out;
  out.glued = raw;
  const auto runs = run_decompose(raw);
  for (std::size_t r = 0; r < runs.size(); ++r) {
    if (!repair_edges && (r == 0 || r + 1 == runs.size())) continue;
    const auto& run = runs[r];
    Word fixed = model.repair_run(raw.subword(run.start, run.length));
    std::copy(fixed.begin(), fixed.end(), out.glued.mutable_letters().begin() + run.start);
  }

  std::size_t offset = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    Word part = out.glued.subword(offset, words[i].size());
    for (std::size_t p = 0; p < part.size(); ++p)
      if (part[p] != words[i][p]) out.edits.push_back({i, p, words[i][p], part[p]});
    out.distances.push_back(hamming(words[i], part));
    out.repaired.push_back(std::move(part));
    offset += words[i].size();
  }

  if (!model.accepts(out.glued.letters()))
    throw std::logic_error("repaired concatenation is not in the language");
  for (auto d : out.distances)
    if (d > 4) throw std::logic_error("repair changed more than 4 letters of one word");
  return out;
}

std::string repair_transcript_json(const std::vector<Word>& words, const RepairResult& r) {
  nlohmann::ordered_json j;
  auto spaced = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(format_word_spaced(w));
    return out;
  };
  j["words"] = spaced(words);
  j["repaired"] = spaced(r.repaired);
  j["glued"] = format_word_spaced(r.glued);
  j["edits"] = nlohmann::ordered_json::array();
  for (const auto& e : r.edits)
    j["edits"].push_back(
        {{"word", e.word_index}, {"position", e.position}, {"before", e.before}, {"after", e.after}});
  j["distances"] = r.distances;
  return j.dump();
}

namespace {

std::vector<BigInt> powers(int N, std::size_t n_max) {
  std::vector<BigInt> p(n_max + 1);
  p[0] = 1;
  for (std::size_t i = 1; i <= n_max; ++i) p[i] = p[i - 1] * N;
  return p;
}

std::vector<BigInt> family_sizes(const AspecShift& model, std::size_t t_max) {
  std::vector<BigInt> M(t_max + 1, 0);
  for (std::size_t t = 1; t <= t_max; ++t) M[t] = model.family_size(t);
  return M;
}

} // namespace

std::vector<BigInt> count_formula_table(const AspecShift& model, std::size_t n_max) {
  const auto pw = powers(model.magnitude(), n_max);
  const auto M = family_sizes(model, n_max);
  // interior[s]: sequences of one or more interior runs of total length s,
  // weighted by the product of their family sizes.
  std::vector<BigInt> seq(n_max + 1, 0);
  seq[0] = 1;
  for (std::size_t s = 1; s <= n_max; ++s)
    for (std::size_t t = 1; t <= s; ++t) seq[s] += M[t] * seq[s - t];

  std::vector<BigInt> out(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt c = 2 * pw[n] + 2 * BigInt(n - 1) * pw[n];
    // Edge runs n_1 + n_k = n - s with both >= 1: n - s - 1 splits, each N^(n-s).
    for (std::size_t s = 1; s + 2 <= n; ++s) c += 2 * seq[s] * BigInt(n - s - 1) * pw[n - s];
    out[n] = std::move(c);
  }
  return out;
}

std::vector<BigInt> aspec_count_dp_table(const AspecShift& model, std::size_t n_max) {
  const auto pw = powers(model.magnitude(), n_max);
  const auto M = family_sizes(model, n_max);
  // rest[r]: ways to fill r letters following a sign change.
  std::vector<BigInt> rest(n_max + 1, 0);
  for (std::size_t r = 1; r <= n_max; ++r) {
    BigInt v = pw[r];
    for (std::size_t t = 1; t < r; ++t) v += M[t] * rest[r - t];
    rest[r] = std::move(v);
  }
  std::vector<BigInt> out(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt c = 2 * pw[n];
    for (std::size_t first = 1; first < n; ++first) c += 2 * pw[first] * rest[n - first];
    out[n] = std::move(c);
  }
  return out;
}

BigInt count_formula(const AspecShift& model, std::size_t n) {
  if (n < 1) throw std::invalid_argument("word length must be positive");
  return count_formula_table(model, n)[n];
}

BigInt aspec_count_dp(const AspecShift& model, std::size_t n) {
  if (n < 1) throw std::invalid_argument("word length must be positive");
  return aspec_count_dp_table(model, n)[n];
}

AlphaInterval alpha_interval(const AspecShift& model, std::size_t cutoff) {
  if (cutoff <= model.ell())
    throw std::invalid_argument("alpha cutoff must exceed ell = " + std::to_string(model.ell()));
  AlphaInterval out;
  out.cutoff = cutoff;
  BigInt denom = 1;
  for (std::size_t t = 1; t <= cutoff; ++t) {
    denom *= model.magnitude();
    out.lower += Rational(model.family_size(t), denom);
  }
  out.upper = out.lower + Rational(16, cutoff);
  return out;
}

Rational alpha_closed_bound(int N, std::size_t ell) {
  return Rational(1, N) + Rational(BigInt(ell - 1), BigInt(N) * N) + Rational(16, ell);
}

bool EntropyBoundReport::passed() const {
  return applicable && std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.holds; });
}

EntropyBoundReport entropy_bound_check(const AspecShift& model, std::size_t n_max,
                                       std::size_t cutoff) {
  EntropyBoundReport rep;
  rep.alpha = alpha_interval(model, std::max(cutoff, model.ell() + 1));
  if (rep.alpha.upper >= 1) {
    rep.applicable = false;
    rep.note = "entropy bound inapplicable: alpha upper bound " +
               std::to_string(to_double(rep.alpha.upper)) + " >= 1";
    return rep;
  }
  rep.applicable = true;
  const Rational factor = 1 / (1 - rep.alpha.upper);
  const double log_factor = log_rational(factor);
  const double log_N = std::log(static_cast<double>(model.magnitude()));
  const auto counts = aspec_count_dp_table(model, n_max);
  BigInt pw = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    pw *= model.magnitude();
    EntropyBoundRow row;
    row.n = n;
    row.count = counts[n];
    row.bound = 2 * BigInt(n) * factor * pw;
    row.holds = Rational(row.count) <= row.bound;
    row.log_rate = log_big(row.count) / static_cast<double>(n);
    row.rate_bound = log_N + (std::log(2.0 * static_cast<double>(n)) + log_factor) / static_cast<double>(n);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string family_table_csv(const AspecShift& model, std::size_t t_max) {
  std::ostringstream out;
  out << "n,M_n\n";
  for (std::size_t t = 1; t <= t_max; ++t) out << t << ',' << to_decimal(model.family_size(t)) << '\n';
  return out.str();
}

} // namespace lex
