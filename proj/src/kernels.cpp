#include "lex/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>

namespace lex {

namespace {

// Candidate extensions are tallied locally and flushed in batches; a search
// aborts once the shared tally passes the budget, and the final total decides
// whether the budget was exceeded, so the outcome is schedule independent.
class BudgetMeter {
public:
  explicit BudgetMeter(std::uint64_t budget) : budget_(budget) {}

  bool over() const { return used_.load(std::memory_order_relaxed) > budget_; }
  void add(std::uint64_t k) { used_.fetch_add(k, std::memory_order_relaxed); }
  std::uint64_t budget() const { return budget_; }

private:
  std::uint64_t budget_;
  std::atomic<std::uint64_t> used_{0};
};

class LocalMeter {
public:
  explicit LocalMeter(BudgetMeter& shared) : shared_(shared) {}
  ~LocalMeter() { flush(); }

  void tick() {
    if (++pending_ == 4096) {
      flush();
      if (shared_.over()) throw BudgetExceeded(shared_.budget());
    }
  }
  void flush() {
    shared_.add(pending_);
    pending_ = 0;
  }

private:
  BudgetMeter& shared_;
  std::uint64_t pending_ = 0;
};

template <class Visit>
void extend(const Subshift& model, std::vector<Letter>& buf, std::size_t n,
            LocalMeter& meter, Visit& visit) {
  if (buf.size() == n) {
    visit(buf);
    return;
  }
  for (Letter l : model.alphabet().letters()) {
    meter.tick();
    buf.push_back(l);
    if (model.accepts(buf)) extend(model, buf, n, meter, visit);
    buf.pop_back();
  }
}

// Breadth-first expansion to a depth with enough prefixes to spread across
// threads. Prefixes come out in lexicographic order.
std::vector<std::vector<Letter>> frontier(const Subshift& model, std::size_t n,
                                          LocalMeter& meter, std::size_t target) {
  std::vector<std::vector<Letter>> layer{{}};
  while (!layer.empty() && layer.front().size() < n && layer.size() < target) {
    std::vector<std::vector<Letter>> next;
    for (auto& prefix : layer) {
      for (Letter l : model.alphabet().letters()) {
        meter.tick();
        prefix.push_back(l);
        if (model.accepts(prefix)) next.push_back(prefix);
        prefix.pop_back();
      }
    }
    layer = std::move(next);
  }
  return layer;
}

template <class PerPrefix>
void run_parallel(const std::vector<std::vector<Letter>>& prefixes, BudgetMeter& shared,
                  PerPrefix per_prefix) {
  std::exception_ptr failure;
  std::atomic<bool> stop{false};
  const auto count = static_cast<long long>(prefixes.size());
#pragma omp parallel
  {
    LocalMeter meter(shared);
#pragma omp for schedule(dynamic, 1)
    for (long long i = 0; i < count; ++i) {
      if (stop.load(std::memory_order_relaxed)) continue;
      try {
        per_prefix(static_cast<std::size_t>(i), meter);
      } catch (...) {
#pragma omp critical(lex_kernel_failure)
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

} // namespace

std::uint64_t brute_count(const Subshift& model, std::size_t n, std::uint64_t budget,
                          Exec exec) {
  BudgetMeter shared(budget);
  std::uint64_t total = 0;
  {
    LocalMeter meter(shared);
    if (exec == Exec::serial) {
      std::vector<Letter> buf;
      auto visit = [&](const std::vector<Letter>&) { ++total; };
      extend(model, buf, n, meter, visit);
    } else {
      auto prefixes = frontier(model, n, meter,
                               static_cast<std::size_t>(64 * omp_get_max_threads()));
      meter.flush();
      std::vector<std::uint64_t> partial(prefixes.size(), 0);
      run_parallel(prefixes, shared, [&](std::size_t i, LocalMeter& local) {
        std::vector<Letter> buf = prefixes[i];
        std::uint64_t c = 0;
        auto visit = [&](const std::vector<Letter>&) { ++c; };
        extend(model, buf, n, local, visit);
        partial[i] = c;
      });
      for (auto c : partial) total += c;
    }
  }
  if (shared.over()) throw BudgetExceeded(budget);
  return total;
}

std::vector<Word> brute_enumerate(const Subshift& model, std::size_t n,
                                  std::uint64_t budget, Exec exec) {
  BudgetMeter shared(budget);
  std::vector<Word> out;
  {
    LocalMeter meter(shared);
    if (exec == Exec::serial) {
      std::vector<Letter> buf;
      auto visit = [&](const std::vector<Letter>& w) { out.emplace_back(w); };
      extend(model, buf, n, meter, visit);
    } else {
      auto prefixes = frontier(model, n, meter,
                               static_cast<std::size_t>(64 * omp_get_max_threads()));
      meter.flush();
      std::vector<std::vector<Word>> partial(prefixes.size());
      run_parallel(prefixes, shared, [&](std::size_t i, LocalMeter& local) {
        std::vector<Letter> buf = prefixes[i];
        auto visit = [&](const std::vector<Letter>& w) { partial[i].emplace_back(w); };
        extend(model, buf, n, local, visit);
      });
      for (auto& part : partial)
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
  }
  if (shared.over()) throw BudgetExceeded(budget);
  return out;
}

namespace {

bool near_member(std::vector<Letter>& buf, std::size_t from, std::size_t radius,
                 const Alphabet& alphabet, const WordPredicate& contains) {
  if (contains(buf)) return true;
  if (radius == 0) return false;
  for (std::size_t i = from; i < buf.size(); ++i) {
    const Letter original = buf[i];
    for (Letter l : alphabet.letters()) {
      if (l == original) continue;
      buf[i] = l;
      if (near_member(buf, i + 1, radius - 1, alphabet, contains)) {
        buf[i] = original;
        return true;
      }
    }
    buf[i] = original;
  }
  return false;
}

unsigned long long cube_size(const Alphabet& alphabet, std::size_t n) {
  unsigned long long total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > std::numeric_limits<unsigned long long>::max() / alphabet.size())
      throw std::invalid_argument("word cube too large to sweep");
    total *= alphabet.size();
  }
  return total;
}

} // namespace

bool sweep_spanning(const Alphabet& alphabet, std::size_t n, const WordPredicate& contains,
                    std::size_t radius, Exec exec) {
  const auto total = cube_size(alphabet, n);
  if (exec == Exec::serial) {
    for (unsigned long long k = 0; k < total; ++k) {
      auto buf = word_at(alphabet, n, k).mutable_letters();
      if (!near_member(buf, 0, radius, alphabet, contains)) return false;
    }
    return true;
  }
  std::atomic<bool> ok{true};
  const auto count = static_cast<long long>(total);
#pragma omp parallel for schedule(dynamic, 256)
  for (long long k = 0; k < count; ++k) {
    if (!ok.load(std::memory_order_relaxed)) continue;
    auto buf = word_at(alphabet, n, static_cast<unsigned long long>(k)).mutable_letters();
    if (!near_member(buf, 0, radius, alphabet, contains)) ok = false;
  }
  return ok;
}

std::optional<std::size_t> min_pairwise_distance(const std::vector<Word>& words, Exec exec) {
  if (words.size() < 2) return std::nullopt;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto count = static_cast<long long>(words.size());
  if (exec == Exec::serial) {
    for (long long i = 0; i < count; ++i)
      for (long long j = i + 1; j < count; ++j)
        best = std::min(best, hamming(words[i], words[j]));
    return best;
  }
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
  for (long long i = 0; i < count; ++i)
    for (long long j = i + 1; j < count; ++j)
      best = std::min(best, hamming(words[i], words[j]));
  return best;
}

InequalitySweep sweep_inequality(std::uint64_t n_max,
                                 const std::function<std::uint64_t(std::uint64_t)>& lhs,
                                 const std::function<std::uint64_t(std::uint64_t)>& rhs,
                                 Exec exec) {
  std::uint64_t violations = 0;
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t max_l = 0, max_r = 0;
  const auto count = static_cast<long long>(n_max);
  auto body = [&](std::uint64_t n, std::uint64_t& v, std::uint64_t& f, std::uint64_t& ml,
                  std::uint64_t& mr) {
    const auto l = lhs(n), r = rhs(n);
    ml = std::max(ml, l);
    mr = std::max(mr, r);
    if (l > r) {
      ++v;
      f = std::min(f, n);
    }
  };
  if (exec == Exec::serial) {
    for (std::uint64_t n = 1; n <= n_max; ++n) body(n, violations, first, max_l, max_r);
  } else {
#pragma omp parallel for schedule(static) reduction(+ : violations) \
    reduction(min : first) reduction(max : max_l, max_r)
    for (long long i = 0; i < count; ++i)
      body(static_cast<std::uint64_t>(i) + 1, violations, first, max_l, max_r);
  }
  InequalitySweep out;
  out.checked = n_max;
  out.violations = violations;
  if (violations) out.first_violation = first;
  out.max_lhs = max_l;
  out.max_rhs = max_r;
  return out;
}

} // namespace lex
