#include <benchmark/benchmark.h>

#include <random>

#include <arithcorr/correlation.hpp>

namespace {

using namespace arithcorr;

PeriodicSequence first_m_sequence(unsigned n) {
  return generate_m_sequence(LfsrSpec::canonical(enumerate_primitive(n).front()));
}

void BM_EnumeratePrimitive(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_primitive(n));
}
BENCHMARK(BM_EnumeratePrimitive)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_GenerateMSequence(benchmark::State& state) {
  const LfsrSpec spec = LfsrSpec::canonical(enumerate_primitive(static_cast<unsigned>(state.range(0))).front());
  for (auto _ : state) benchmark::DoNotOptimize(generate_m_sequence(spec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(spec.period()));
}
BENCHMARK(BM_GenerateMSequence)->DenseRange(10, 20, 5);

void BM_Spectrum(benchmark::State& state) {
  const PeriodicSequence s = first_m_sequence(static_cast<unsigned>(state.range(0)));
  const bool validate = state.range(1) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectrum(s, {validate ? Validation::on : Validation::off, 1, ""}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.period() - 1));
}
BENCHMARK(BM_Spectrum)->ArgsProduct({{8, 10, 12}, {0, 1}})->Unit(benchmark::kMillisecond);

// The two expansion routes for |S(2) - S^(tau)(2)| on the same inputs.
void BM_NormalizeToBinary(benchmark::State& state) {
  const PeriodicSequence s = first_m_sequence(static_cast<unsigned>(state.range(0)));
  const TernaryVector g = binary_subtract(s.first_period(), cyclic_shift(s, 1));
  for (auto _ : state) benchmark::DoNotOptimize(normalize_to_binary(g));
}
BENCHMARK(BM_NormalizeToBinary)->DenseRange(8, 16, 4);

void BM_BignumExpand(benchmark::State& state) {
  const PeriodicSequence s = first_m_sequence(static_cast<unsigned>(state.range(0)));
  const BitVector shifted = cyclic_shift(s, 1);
  for (auto _ : state) benchmark::DoNotOptimize(bignum_expand_oracle(s.first_period(), shifted));
}
BENCHMARK(BM_BignumExpand)->DenseRange(8, 16, 4);

void BM_TwoAdic(benchmark::State& state) {
  const PeriodicSequence s = first_m_sequence(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(two_adic_difference_oracle(s, 1));
}
BENCHMARK(BM_TwoAdic)->DenseRange(8, 16, 4);

void BM_CyclicShift(benchmark::State& state) {
  const PeriodicSequence s = first_m_sequence(static_cast<unsigned>(state.range(0)));
  std::int64_t tau = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclic_shift(s, tau));
    tau = tau % static_cast<std::int64_t>(s.period() - 1) + 1;
  }
}
BENCHMARK(BM_CyclicShift)->DenseRange(8, 20, 6);

}  // namespace
BENCHMARK_MAIN();
