#include <benchmark/benchmark.h>

#include <braidcong/burau.hpp>
#include <braidcong/congruence.hpp>
#include <braidcong/cryst.hpp>
#include <braidcong/sampling.hpp>

using namespace braidcong;

static void BM_RhoMod(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(1);
  BraidWord w = random_word(n, 200, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rho_mod(w, 7));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.length()));
}
BENCHMARK(BM_RhoMod)->Arg(3)->Arg(5)->Arg(8);

static void BM_EnumerateImage(benchmark::State& state) {
  auto m = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_image(3, m).size());
}
BENCHMARK(BM_EnumerateImage)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_Abelianization(benchmark::State& state) {
  auto n = static_cast<int>(state.range(0));
  auto m = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(abelianization(n, m).free_rank);
}
BENCHMARK(BM_Abelianization)->Args({3, 3})->Args({3, 4})->Args({4, 2})->Unit(benchmark::kMillisecond);

static void BM_NormalForm(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Rng rng(2);
  BraidWord w = random_word(n, 500, rng);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(w));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(w.length()));
}
BENCHMARK(BM_NormalForm)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK_MAIN();
