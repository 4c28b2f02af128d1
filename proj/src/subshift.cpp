#include "lex/subshift.hpp"

#include "lex/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace lex {

std::string to_string(ModelId id) {
  switch (id) {
  case ModelId::full: return "full";
  case ModelId::aws: return "aws";
  case ModelId::aspec: return "aspec";
  case ModelId::higher_power: return "higher_power";
  }
  return "?";
}

std::string to_string(CountMethod m) {
  switch (m) {
  case CountMethod::brute: return "brute";
  case CountMethod::dp: return "dp";
  case CountMethod::formula: return "formula";
  }
  return "?";
}

CountMethod parse_count_method(const std::string& s) {
  if (s == "brute") return CountMethod::brute;
  if (s == "dp") return CountMethod::dp;
  if (s == "formula") return CountMethod::formula;
  throw std::invalid_argument("unknown count method '" + s + "'");
}

namespace {

class FullShift final : public Subshift {
public:
  explicit FullShift(Alphabet alphabet) : alphabet_(std::move(alphabet)) {
    if (alphabet_.empty()) throw std::invalid_argument("full shift over an empty alphabet");
  }

  ModelId id() const override { return ModelId::full; }
  const Alphabet& alphabet() const override { return alphabet_; }
  std::string describe() const override {
    return "full shift over " + std::to_string(alphabet_.size()) + " letters";
  }
  bool accepts(std::span<const Letter>) const override { return true; }
  std::optional<BigInt> count_by_recurrence(std::size_t n) const override {
    return ipow(BigInt(alphabet_.size()), static_cast<unsigned>(n));
  }

private:
  Alphabet alphabet_;
};

} // namespace

SubshiftPtr full_shift(Alphabet alphabet) {
  return std::make_shared<FullShift>(std::move(alphabet));
}

HigherPowerShift::HigherPowerShift(SubshiftPtr base, std::size_t k)
    : base_(std::move(base)), k_(k) {
  if (!base_) throw std::invalid_argument("higher power of a null model");
  if (k_ < 1) throw std::invalid_argument("higher power needs k >= 1");
  blocks_ = enumerate_language(*base_, k_);
  if (blocks_.empty()) throw std::invalid_argument("base language of length k is empty");
  alphabet_ = Alphabet::range(0, static_cast<Letter>(blocks_.size()) - 1);
}

std::string HigherPowerShift::describe() const {
  return "higher power k=" + std::to_string(k_) + " of " + base_->describe();
}

Word HigherPowerShift::expand(std::span<const Letter> w) const {
  Word out;
  for (Letter l : w) out.append(block(l));
  return out;
}

bool HigherPowerShift::accepts(std::span<const Letter> w) const {
  return base_->accepts(expand(w).letters());
}

std::optional<BigInt> HigherPowerShift::count_by_recurrence(std::size_t n) const {
  return base_->count_by_recurrence(k_ * n);
}

Letter HigherPowerShift::letter_of(const Word& block_word) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), block_word);
  if (it == blocks_.end() || *it != block_word)
    throw std::invalid_argument("block is not in the base language");
  return static_cast<Letter>(it - blocks_.begin());
}

SubshiftPtr higher_power(SubshiftPtr base, std::size_t k) {
  return std::make_shared<HigherPowerShift>(std::move(base), k);
}

BudgetExceeded::BudgetExceeded(std::uint64_t budget)
    : std::runtime_error("enumeration budget of " + std::to_string(budget) +
                         " candidate extensions exceeded (set LEX_BUDGET to raise it)"),
      budget_(budget) {}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("LEX_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 100'000'000ULL;
}

bool is_member(const Subshift& model, const Word& w) {
  require_letters_in(model.alphabet(), w.letters());
  return model.accepts(w.letters());
}

Word random_member(const Subshift& model, std::size_t n, std::mt19937_64& rng) {
  std::vector<Letter> buf;
  std::vector<Letter> options;
  while (buf.size() < n) {
    options.clear();
    for (Letter l : model.alphabet().letters()) {
      buf.push_back(l);
      if (model.accepts(buf)) options.push_back(l);
      buf.pop_back();
    }
    if (options.empty()) throw std::logic_error("member word has no extension");
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    buf.push_back(options[pick(rng)]);
  }
  return Word(std::move(buf));
}

std::vector<Word> enumerate_language(const Subshift& model, std::size_t n,
                                     std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("word length must be positive");
  return brute_enumerate(model, n, budget);
}

BigInt count_language(const Subshift& model, std::size_t n, CountMethod method,
                      std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("word length must be positive");
  switch (method) {
  case CountMethod::brute:
    return BigInt(brute_count(model, n, budget));
  case CountMethod::dp:
    if (auto c = model.count_by_recurrence(n)) return *c;
    throw std::invalid_argument("model '" + to_string(model.id()) +
                                "' has no run-structure recurrence");
  case CountMethod::formula:
    break;
  }
  throw std::invalid_argument("method 'formula' is not available through the generic engine "
                              "for model '" + to_string(model.id()) + "'");
}

std::vector<EntropyRow> entropy_table(const Subshift& model, std::size_t n_max,
                                      CountMethod method) {
  std::vector<EntropyRow> rows;
  double best = INFINITY;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt c = count_language(model, n, method);
    if (c == 0) throw std::domain_error("empty language at length " + std::to_string(n));
    double rate = log_big(c) / static_cast<double>(n);
    best = std::min(best, rate);
    rows.push_back({n, std::move(c), method, rate, best});
  }
  return rows;
}

bool log_rate_nonincreasing(std::span<const EntropyRow> rows) {
  // Compared exactly: c_{n+1}^n <= c_n^{n+1}.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& a = rows[i - 1];
    const auto& b = rows[i];
    if (ipow(b.count, static_cast<unsigned>(a.n)) > ipow(a.count, static_cast<unsigned>(b.n)))
      return false;
  }
  return true;
}

std::string entropy_csv(std::span<const EntropyRow> rows) {
  std::ostringstream out;
  out << "n,count,method,log_rate\n";
  out.precision(17);
  for (const auto& r : rows)
    out << r.n << ',' << to_decimal(r.count) << ',' << to_string(r.method) << ','
        << r.log_rate << '\n';
  return out.str();
}

GapFunctionReport check_gap_function(const GapFunction& f, std::uint64_t n_max) {
  GapFunctionReport rep;
  rep.description = f.description;
  rep.n_max = n_max;
  std::uint64_t prev = 0;
  std::uint64_t last_superlinear = 0;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const auto v = f.eval(n);
    if (v == 0) {
      rep.positive = false;
      if (rep.violations.size() < 16) rep.violations.push_back(n);
    }
    if (n > 1 && v < prev) {
      rep.nondecreasing = false;
      if (rep.violations.size() < 16) rep.violations.push_back(n);
    }
    const double ratio = static_cast<double>(v) / static_cast<double>(n);
    if (ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.argmax_ratio = n;
    }
    if (v > n) last_superlinear = n;
    if (n == n_max) rep.tail_ratio = ratio;
    prev = v;
  }
  rep.sublinear_from = last_superlinear + 1;
  rep.growth_flag = rep.tail_ratio >= 0.1;
  return rep;
}

} // namespace lex
