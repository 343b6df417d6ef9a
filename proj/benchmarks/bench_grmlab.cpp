#include <benchmark/benchmark.h>

#include "grmlab/chains.hpp"
#include "grmlab/decomp.hpp"
#include "grmlab/endo_qh.hpp"
#include "grmlab/grmeasure.hpp"
#include "grmlab/sublattice.hpp"
#include "support.hpp"

using namespace grmlab;
using namespace grmlab::testing;

namespace {

AlgebraPtr algebra(int which, std::uint32_t p) { return which == 1 ? lambda1(p) : lambda2(p); }

void BM_Submodules(benchmark::State& state) {
  auto m = generator_cogenerator(algebra(static_cast<int>(state.range(0)), static_cast<std::uint32_t>(state.range(1))));
  for (auto _ : state) benchmark::DoNotOptimize(all_submodules(m).size());
}
BENCHMARK(BM_Submodules)->Args({1, 2})->Args({2, 2})->Args({1, 3})->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  auto m = generator_cogenerator(algebra(static_cast<int>(state.range(0)), 2));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m).summand_count());
}
BENCHMARK(BM_Decompose)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_GRMeasure(benchmark::State& state) {
  auto a = lambda1(2);
  auto m = projective(a, 0);
  LengthFunction lam({1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(gr_measure(m, lam).value.values.size());
}
BENCHMARK(BM_GRMeasure);

void BM_GRChain(benchmark::State& state) {
  auto m = generator_cogenerator(lambda2(static_cast<std::uint32_t>(state.range(0))));
  LengthFunction lam({1, 2});
  for (auto _ : state) benchmark::DoNotOptimize(gr_chain(m, lam).ell());
}
BENCHMARK(BM_GRChain)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_VerifyChain(benchmark::State& state) {
  auto c = gr_chain(generator_cogenerator(lambda2(2)), LengthFunction({1, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(verify_chain(c).rejective);
}
BENCHMARK(BM_VerifyChain)->Unit(benchmark::kMillisecond);

void BM_Certify(benchmark::State& state) {
  auto c = gr_chain(generator_cogenerator(lambda2(2)), LengthFunction({1, static_cast<std::int64_t>(state.range(0))}));
  for (auto _ : state) benchmark::DoNotOptimize(certify(c).passed);
}
BENCHMARK(BM_Certify)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
