// Serial reference vs OpenMP row-parallel kernels. Arg 0 = serial, 1 = parallel.

#include "hermdiag/classify.hpp"
#include "hermdiag/diffop.hpp"

#include <benchmark/benchmark.h>

using namespace hermdiag;

namespace {

Execution exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Execution::serial : Execution::parallel; }

void BM_BuildOperator(benchmark::State& state) {
  const HermiteParam alpha(make_rational(1, 2));
  const auto K = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    // fresh sequence each time so the γ cache does not hide the work
    const GammaSeq seq = sequences::exp_half_cosh();
    benchmark::DoNotOptimize(build_operator(alpha, seq, K, 0, exec_of(state)));
  }
  state.SetLabel(exec_of(state) == Execution::serial ? "serial" : "parallel");
}

void BM_RealityTable(benchmark::State& state) {
  const HermiteParam alpha(Rational(1));
  const auto K = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    const GammaSeq seq = sequences::factored(FactoredSpec{1, 0, make_rational(3, 2), {Rational(1), Rational(2)}});
    benchmark::DoNotOptimize(q_reality_table(alpha, seq, K, 1, exec_of(state)));
  }
  state.SetLabel(exec_of(state) == Execution::serial ? "serial" : "parallel");
}

void BM_Falsifier(benchmark::State& state) {
  const Basis basis = Basis::hermite(Rational(1));
  const auto deg = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    // no witness exists, so the whole corpus is searched
    benchmark::DoNotOptimize(ms_falsifier(sequences::linear(Rational(3)), basis, deg, exec_of(state)));
  }
  state.SetLabel(exec_of(state) == Execution::serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_BuildOperator)->ArgsProduct({{0, 1}, {20, 40}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RealityTable)->ArgsProduct({{0, 1}, {15, 25}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Falsifier)->ArgsProduct({{0, 1}, {5, 7}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
