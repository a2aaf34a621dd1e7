#include <benchmark/benchmark.h>

#include "phasestar/phasestar.hpp"

namespace {

using namespace phasestar;

void BM_Displacement(benchmark::State& state) {
  const auto N = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(displacement({0.7, -0.4}, N));
}
BENCHMARK(BM_Displacement)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMicrosecond);

void BM_KernelMatrix(benchmark::State& state) {
  const Rational u(-static_cast<long>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_matrix(u, {0.7, -0.4}, 60));
}
BENCHMARK(BM_KernelMatrix)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_WignerGrid(benchmark::State& state) {
  const FockMatrix rho = state_build(StateSpec::parse("cat:1.5,0"), 60);
  const GridSpec grid{-4.0, 4.0, -4.0, 4.0, static_cast<std::size_t>(state.range(0)),
                      static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(quasiprob(rho, Rational(0), grid, 1));
}
BENCHMARK(BM_WignerGrid)->Arg(21)->Arg(41)->Arg(81)->Unit(benchmark::kMillisecond);

void BM_GaussianSmooth(benchmark::State& state) {
  const FockMatrix rho = state_build(StateSpec::parse("fock:1"), 60);
  const GridField W = quasiprob(rho, Rational(0), GridSpec{});
  for (auto _ : state) benchmark::DoNotOptimize(gaussian_smooth(W, Rational(0), Rational(-1)));
}
BENCHMARK(BM_GaussianSmooth)->Unit(benchmark::kMillisecond);

void BM_TraceOracle(benchmark::State& state) {
  const OperatorPoly F = parse_operator("ad^2*a^2 + 3*ad*a - a^2");
  const std::vector<std::complex<double>> points = {{0.3, 0.1}, {-1.0, 0.5}, {1.2, -0.8}};
  const Rational s(static_cast<long>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(cg_numeric(F, s, points, 60));
}
BENCHMARK(BM_TraceOracle)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
