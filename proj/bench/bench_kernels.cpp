// Serial reference vs OpenMP kernels.
#include "lex/aspec.hpp"
#include "lex/aws.hpp"
#include "lex/codes.hpp"
#include "lex/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace lex;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_BruteCountAws(benchmark::State& s) {
  auto model = aws_model(2);
  for (auto _ : s) benchmark::DoNotOptimize(brute_count(*model, 13, 1ULL << 40, exec_of(s)));
}
BENCHMARK(BM_BruteCountAws)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BruteEnumerateAspec(benchmark::State& s) {
  auto model = aspec_model(2, 3);
  for (auto _ : s) benchmark::DoNotOptimize(brute_enumerate(*model, 9, 1ULL << 40, exec_of(s)));
}
BENCHMARK(BM_BruteEnumerateAspec)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SpanningT(benchmark::State& s) {
  auto code = build_T(Alphabet::range(0, 2), 11);
  for (auto _ : s) benchmark::DoNotOptimize(verify_spanning(code, 1, exec_of(s)));
}
BENCHMARK(BM_SpanningT)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SpanningU(benchmark::State& s) {
  auto code = build_U(Alphabet::range(0, 1), 14);
  for (auto _ : s) benchmark::DoNotOptimize(verify_spanning(code, 2, exec_of(s)));
}
BENCHMARK(BM_SpanningU)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Separated(benchmark::State& s) {
  auto words = all_words(Alphabet::range(0, 1), 11);
  words.resize(1500);
  for (auto _ : s) benchmark::DoNotOptimize(min_pairwise_distance(words, exec_of(s)));
}
BENCHMARK(BM_Separated)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GapInequality(benchmark::State& s) {
  for (auto _ : s)
    benchmark::DoNotOptimize(hp_gap_inequality_check(Rational(1), 1000000, exec_of(s)).passed());
}
BENCHMARK(BM_GapInequality)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
