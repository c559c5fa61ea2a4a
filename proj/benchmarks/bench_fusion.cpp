#include <benchmark/benchmark.h>

#include "fusion/certify.hpp"
#include "fusion/groebner.hpp"
#include "fusion/repring.hpp"

using namespace fusion;

namespace {

Algebra algebra_arg(const benchmark::State& state) { return static_cast<Algebra>(state.range(0)); }

void BM_FusionTable(benchmark::State& state) {
  const Alcove alc(root_system(algebra_arg(state)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(fusion_table(alc));
  state.SetLabel(std::string(to_string(algebra_arg(state))) + " |P_k|=" + std::to_string(alc.size()));
}
BENCHMARK(BM_FusionTable)->ArgsProduct({{0, 1, 2}, {2, 4, 8}})->Unit(benchmark::kMillisecond);

void BM_TensorDecompose(benchmark::State& state) {
  const auto& rs = root_system(algebra_arg(state));
  const int n = static_cast<int>(state.range(1));
  // Fresh ring each iteration so the caches do not hide the work.
  for (auto _ : state) {
    RepresentationRing ring(rs);
    benchmark::DoNotOptimize(ring.tensor_decompose({n, n}, {n, 1}));
  }
}
BENCHMARK(BM_TensorDecompose)->ArgsProduct({{0, 1, 2}, {2, 4}})->Unit(benchmark::kMicrosecond);

void BM_StrongGroebner(benchmark::State& state) {
  const auto gens = known_generators(root_system(algebra_arg(state)), static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(strong_groebner(gens));
}
BENCHMARK(BM_StrongGroebner)->ArgsProduct({{0, 1, 2}, {2, 4, 6}})->Unit(benchmark::kMicrosecond);

void BM_VerifyKnown(benchmark::State& state) {
  const int k = static_cast<int>(state.range(1));
  const auto table = fusion_table(Alcove(root_system(algebra_arg(state)), k));
  const auto gens = known_generators(root_system(algebra_arg(state)), k);
  for (auto _ : state) benchmark::DoNotOptimize(verify_presentation(table, gens));
}
BENCHMARK(BM_VerifyKnown)->ArgsProduct({{0, 1, 2}, {2, 5}})->Unit(benchmark::kMillisecond);

void BM_SearchG2(benchmark::State& state) {
  const auto table = fusion_table(Alcove(root_system(Algebra::G2), static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(search_two_generators(table, 2));
}
BENCHMARK(BM_SearchG2)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
