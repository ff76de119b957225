#include <benchmark/benchmark.h>

#include "rfvote/decomposition.hpp"
#include "rfvote/designer.hpp"
#include "rfvote/feasibility.hpp"
#include "rfvote/oracle.hpp"

using namespace rfvote;

static void BM_ReducedForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto prior = ExchangeablePrior::independent(n, Rational(2, 5));
  const auto rule = quota_rule(QuotaFamily::QualifiedMajority, n / 2, n);
  for (auto _ : state) benchmark::DoNotOptimize(reduced_form(rule, prior));
}
BENCHMARK(BM_ReducedForm)->Arg(8)->Arg(64)->Arg(256);

static void BM_Check(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto prior = ExchangeablePrior::independent(n, Rational(2, 5));
  const ReducedForm q{Rational(1, 2), Rational(1, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(check_implementable(q, prior));
}
BENCHMARK(BM_Check)->Arg(8)->Arg(64);

static void BM_Vertices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto prior = ExchangeablePrior::independent(n, Rational(2, 5));
  for (auto _ : state) benchmark::DoNotOptimize(vertices(prior, RuleClass::All));
}
BENCHMARK(BM_Vertices)->Arg(8)->Arg(64);

static void BM_Rawlsian(benchmark::State& state) {
  const auto prior = ExchangeablePrior::independent(static_cast<int>(state.range(0)), Rational(2, 5));
  for (auto _ : state) benchmark::DoNotOptimize(rawlsian(prior));
}
BENCHMARK(BM_Rawlsian)->Arg(8)->Arg(64);

static void BM_VerifyProjection(benchmark::State& state) {
  const auto prior = ExchangeablePrior::independent(static_cast<int>(state.range(0)), Rational(1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::verify_projection(prior, 8, 200, oracle::kOracleSeed));
}
BENCHMARK(BM_VerifyProjection)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BruteRawlsian(benchmark::State& state) {
  const auto prior = ExchangeablePrior::independent(4, Rational(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::brute_rawlsian(prior, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BruteRawlsian)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
