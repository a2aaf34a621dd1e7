#include <benchmark/benchmark.h>

#include <random>

#include "phasestar/phasestar.hpp"

namespace {

using namespace phasestar;

// Dense polynomial with every monomial up to `degree` and small mixed coefficients.
template <class Tag>
TermPoly<Tag> dense(unsigned degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> c(-3, 3);
  TermPoly<Tag> out;
  for (unsigned d = 0; d <= degree; ++d) {
    for (unsigned m = 0; m <= d; ++m) out.add_term(m, d - m, ExactComplex(Rational(c(rng)), Rational(c(rng), 2)));
  }
  return out;
}

const SContext kHalf{Rational(1, 2), Rational(1)};

void BM_Multiply(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const OperatorPoly F = dense<OperatorTag>(d, 1), G = dense<OperatorTag>(d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(F, G));
}
BENCHMARK(BM_Multiply)->DenseRange(2, 8, 2);

void BM_Star(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const PhasePoly f = dense<PhaseTag>(d, 3), g = dense<PhaseTag>(d, 4);
  for (auto _ : state) benchmark::DoNotOptimize(star(f, g, kHalf));
}
BENCHMARK(BM_Star)->DenseRange(2, 8, 2);

void BM_HatStar(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const OperatorPoly F = dense<OperatorTag>(d, 5), G = dense<OperatorTag>(d, 6);
  for (auto _ : state) benchmark::DoNotOptimize(hstar(F, G, kHalf));
}
BENCHMARK(BM_HatStar)->DenseRange(2, 8, 2);

void BM_SymbolRoundTrip(benchmark::State& state) {
  const auto d = static_cast<unsigned>(state.range(0));
  const OperatorPoly F = dense<OperatorTag>(d, 7);
  for (auto _ : state) benchmark::DoNotOptimize(icg(cg(F, kHalf), kHalf));
}
BENCHMARK(BM_SymbolRoundTrip)->DenseRange(2, 12, 2);

void BM_ParseAndLower(benchmark::State& state) {
  const std::string text = print_canonical(dense<OperatorTag>(static_cast<unsigned>(state.range(0)), 8));
  for (auto _ : state) benchmark::DoNotOptimize(parse_operator(text));
}
BENCHMARK(BM_ParseAndLower)->Arg(4)->Arg(8);

}  // namespace
