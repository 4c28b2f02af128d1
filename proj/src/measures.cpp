#include "lex/measures.hpp"

#include "lex/subshift.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lex {

CylinderDistribution CylinderDistribution::from_weights(std::size_t level,
                                                        std::map<Word, Rational> weights) {
  CylinderDistribution d;
  d.level_ = level;
  Rational total = 0;
  for (auto it = weights.begin(); it != weights.end();) {
    if (it->first.size() != level)
      throw std::invalid_argument("word of length " + std::to_string(it->first.size()) +
                                  " in a level-" + std::to_string(level) + " distribution");
    if (it->second < 0) throw std::invalid_argument("negative weight");
    total += it->second;
    it = it->second == 0 ? weights.erase(it) : std::next(it);
  }
  if (total != 1)
    throw std::invalid_argument("weights sum to " + to_fraction_string(total) + ", not 1");
  d.weights_ = std::move(weights);
  return d;
}

CylinderDistribution CylinderDistribution::uniform_bernoulli(const Alphabet& letters,
                                                             std::size_t level) {
  if (letters.empty()) throw std::invalid_argument("Bernoulli measure on an empty alphabet");
  CylinderDistribution d;
  d.level_ = level;
  d.uniform_ = letters;
  return d;
}

Rational bernoulli_weight(const Alphabet& letters, const Word& w) {
  if (letters.empty()) throw std::invalid_argument("Bernoulli measure on an empty alphabet");
  for (Letter l : w)
    if (!letters.contains(l)) return 0;
  return Rational(1, ipow(BigInt(letters.size()), static_cast<unsigned>(w.size())));
}

Rational CylinderDistribution::weight(const Word& w) const {
  if (w.size() != level_) return 0;
  if (uniform_) return bernoulli_weight(*uniform_, w);
  auto it = weights_.find(w);
  return it == weights_.end() ? Rational(0) : it->second;
}

BigInt CylinderDistribution::support_size() const {
  if (uniform_) return ipow(BigInt(uniform_->size()), static_cast<unsigned>(level_));
  return weights_.size();
}

std::map<Rational, BigInt> CylinderDistribution::weight_histogram() const {
  std::map<Rational, BigInt> h;
  if (uniform_) {
    const BigInt count = support_size();
    h[Rational(1, count)] = count;
    return h;
  }
  for (const auto& [w, p] : weights_) h[p] += 1;
  return h;
}

std::map<Word, Rational> CylinderDistribution::table() const {
  if (!uniform_) return weights_;
  if (support_size() > default_budget()) throw BudgetExceeded(default_budget());
  std::map<Word, Rational> out;
  const Rational p(1, support_size());
  for (auto& w : all_words(*uniform_, level_)) out.emplace(std::move(w), p);
  return out;
}

CylinderDistribution CylinderDistribution::marginal() const {
  if (level_ == 0) throw std::invalid_argument("level-0 distribution has no marginal");
  if (uniform_) return uniform_bernoulli(*uniform_, level_ - 1);
  std::map<Word, Rational> out;
  for (const auto& [w, p] : weights_) out[w.subword(0, level_ - 1)] += p;
  return from_weights(level_ - 1, std::move(out));
}

double level_entropy(const CylinderDistribution& dist) {
  if (dist.level() == 0) return 0.0;
  double sum = 0;
  for (const auto& [p, count] : dist.weight_histogram()) {
    const Rational mass = p * count; // exact
    sum += to_double(mass) * log_rational(p);
  }
  return -sum / static_cast<double>(dist.level());
}

SupportCountReport support_count_check(const CylinderDistribution& dist) {
  SupportCountReport r;
  r.support = dist.support_size();
  r.log_support = log_big(r.support);
  r.entropy_times_level = level_entropy(dist) * static_cast<double>(dist.level());
  // Equality cases land within a few ulps; allow that much on one side only.
  const double slack = 1e-12 * std::max(1.0, r.log_support);
  r.holds = r.log_support + slack >= r.entropy_times_level;
  return r;
}

bool disjoint_support_check(const CylinderDistribution& a, const CylinderDistribution& b) {
  if (a.level() != b.level()) throw std::invalid_argument("distributions have different levels");
  if (a.is_symbolic() && b.is_symbolic()) {
    if (a.level() == 0) return false; // both hold the empty word
    for (Letter l : a.uniform_letters()->letters())
      if (b.uniform_letters()->contains(l)) return false;
    return true;
  }
  const auto& expl = a.is_symbolic() ? b : a;
  const auto& other = a.is_symbolic() ? a : b;
  for (const auto& [w, p] : expl.table())
    if (other.in_support(w)) return false;
  return true;
}

CylinderDistribution sample_and_frequencies(const Alphabet& letters, std::uint64_t L,
                                            std::size_t n, std::uint64_t seed) {
  if (letters.empty()) throw std::invalid_argument("sampling from an empty alphabet");
  if (n < 1) throw std::invalid_argument("window length must be positive");
  if (L < n) throw std::invalid_argument("sample length L must be at least the level n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
  std::vector<Letter> sample(L);
  for (auto& l : sample) l = letters.letter(pick(rng));

  std::map<Word, std::uint64_t> counts;
  const std::uint64_t windows = L - n + 1;
  for (std::uint64_t i = 0; i < windows; ++i)
    ++counts[Word(std::span<const Letter>(sample).subspan(i, n))];
  std::map<Word, Rational> weights;
  for (auto& [w, c] : counts) weights.emplace(w, Rational(c, windows));
  return CylinderDistribution::from_weights(n, std::move(weights));
}

std::string distribution_csv(const CylinderDistribution& dist) {
  std::ostringstream out;
  out << "word,weight_numerator,weight_denominator\n";
  for (const auto& [w, p] : dist.table())
    out << format_word_spaced(w) << ',' << boost::multiprecision::numerator(p) << ','
        << boost::multiprecision::denominator(p) << '\n';
  return out.str();
}

} // namespace lex
