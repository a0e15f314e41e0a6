#include <benchmark/benchmark.h>

#include "excal/census.hpp"
#include "excal/harmonic.hpp"
#include "excal/random_inputs.hpp"

namespace {

void BM_WalkCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto count = excal::census::count_nontrivial(n, 30, excal::Family::B);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_WalkCount)->Arg(4)->Arg(10);

void BM_CompositionCount(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto count = excal::census::count_compositions(10, k, excal::Family::B);
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_CompositionCount)->Arg(10)->Arg(30);

void BM_TrivialityOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<int> seq{1, n, 1};
  for (auto _ : state) {
    bool trivial = excal::is_trivial_composition(seq, n);
    benchmark::DoNotOptimize(trivial);
  }
}
BENCHMARK(BM_TrivialityOracle)->Arg(3)->Arg(4)->Arg(5);

void BM_ExteriorDerivative(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  excal::Rng rng(7);
  const excal::KForm w = excal::random_kform(rng, n, n / 2);
  for (auto _ : state) {
    auto dw = excal::exterior_derivative(w);
    benchmark::DoNotOptimize(dw);
  }
}
BENCHMARK(BM_ExteriorDerivative)->Arg(4)->Arg(6);

void BM_LaplaceDeRham(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  excal::Rng rng(11);
  const excal::KForm w = excal::random_kform(rng, n, 1);
  for (auto _ : state) {
    auto lap = excal::laplace_de_rham(w);
    benchmark::DoNotOptimize(lap);
  }
}
BENCHMARK(BM_LaplaceDeRham)->Arg(3)->Arg(5);

void BM_HarmonicKernel(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto basis = excal::harmonic::harmonic_basis(4, degree);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_HarmonicKernel)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
