// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "dancyl/ideals.hpp"
#include "dancyl/kernels.hpp"

using namespace dancyl;

namespace {

const Ring kRing{"x", "y", "z", "w"};

MultiPoly dense(int degree, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-50, 50);
  MultiPoly p(kRing);
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b)
      for (int c = 0; a + b + c <= degree; ++c)
        for (int d = 0; a + b + c + d <= degree; ++d) p.add_term({a, b, c, d}, Rational(coeff(rng), 1 + rng() % 7));
  return p;
}

void BM_MultiplySerial(benchmark::State& state) {
  const MultiPoly a = dense(static_cast<int>(state.range(0)), 1);
  const MultiPoly b = dense(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_serial(a.terms(), b.terms()));
  state.counters["term_pairs"] = static_cast<double>(a.size() * b.size());
}

void BM_MultiplyParallel(benchmark::State& state) {
  const MultiPoly a = dense(static_cast<int>(state.range(0)), 1);
  const MultiPoly b = dense(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::multiply_parallel(a.terms(), b.terms()));
  state.counters["threads"] = kernels::max_threads();
}

std::vector<MultiPoly> batch(int count) {
  std::vector<MultiPoly> out;
  for (int i = 0; i < count; ++i) out.push_back(dense(5, 100 + static_cast<unsigned>(i)));
  return out;
}

void normal_forms_bench(benchmark::State& state, Execution exec) {
  const GroebnerBasis gb = groebner_basis(IdealPresentation(kRing, {MultiPoly::parse("x^2*z - y^2 + 1", kRing)}));
  const auto polys = batch(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(normal_forms(polys, gb, exec));
}

void BM_NormalFormsSerial(benchmark::State& state) { normal_forms_bench(state, Execution::Serial); }
void BM_NormalFormsParallel(benchmark::State& state) { normal_forms_bench(state, Execution::Parallel); }

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultiplyParallel)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_NormalFormsSerial)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NormalFormsParallel)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
