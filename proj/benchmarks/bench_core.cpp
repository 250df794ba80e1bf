#include <random>

#include <benchmark/benchmark.h>

#include "pdm/eigensolver.hpp"
#include "pdm/operators.hpp"

namespace {

pdm::ModelSpec scarf_spec() {
  const auto o = pdm::ordering_preset(pdm::OrderingPreset::ZhuKroemer);
  return pdm::ModelSpec(pdm::Generator::scarf2(2.5), o, pdm::MassProfile::for_ordering(o, 1, 0), {-12, 12});
}

void BM_EigRandom(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d;
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = {d(rng), d(rng)};
  for (auto _ : state) benchmark::DoNotOptimize(pdm::eig(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EigRandom)->RangeMultiplier(2)->Range(32, 256)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNCubed);

void BM_EigReference(benchmark::State& state) {
  const auto spec = scarf_spec();
  const auto n = static_cast<int>(state.range(0));
  const auto g = pdm::uniform_grid(-12, 12, n);
  const auto m = pdm::build_reference_matrix(spec, g);
  for (auto _ : state) benchmark::DoNotOptimize(pdm::eig(m));
}
BENCHMARK(BM_EigReference)->Arg(100)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

void BM_AssembleTarget(benchmark::State& state) {
  const auto spec = scarf_spec();
  const auto [gx, gq] = pdm::matched_domains(spec, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pdm::build_target_matrix(spec, gx));
}
BENCHMARK(BM_AssembleTarget)->Arg(400)->Arg(1600);

void BM_AssembleEta(benchmark::State& state) {
  const auto o = pdm::ordering_preset(pdm::OrderingPreset::GoraWilliams);
  const pdm::ModelSpec spec(pdm::Generator::scarf2(2, 1, 2.25), o, pdm::MassProfile::for_ordering(o, 1, 0), {0.5, 4});
  const auto xi = spec.x_interval();
  const auto g = pdm::uniform_grid(xi.lo, xi.hi, static_cast<int>(state.range(0)), pdm::GridKind::UniformX);
  for (auto _ : state) benchmark::DoNotOptimize(pdm::build_eta_matrix(spec, g));
}
BENCHMARK(BM_AssembleEta)->Arg(400)->Arg(1600);

}  // namespace
BENCHMARK_MAIN();
