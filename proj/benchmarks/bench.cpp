#include <filesystem>

#include <benchmark/benchmark.h>

#include "relrigid/decompose.hpp"
#include "relrigid/homological.hpp"
#include "relrigid/relative_rigid.hpp"
#include "relrigid/tau_tilting.hpp"
#include "relrigid/text_format.hpp"

using namespace relrigid;

namespace {

const std::filesystem::path kData = RELRIGID_DATA_DIR;

void BM_ExchangeGraphA3(benchmark::State& state) {
  const BoundAlgebra a = load_algebra(kData / "a3_rad2.alg");
  for (auto _ : state) benchmark::DoNotOptimize(exchange_graph(a).nodes.size());
}
BENCHMARK(BM_ExchangeGraphA3)->Unit(benchmark::kMillisecond);

void BM_ExchangeGraphEx1(benchmark::State& state) {
  const BoundAlgebra a = load_algebra(kData / "ex1.alg");
  for (auto _ : state) benchmark::DoNotOptimize(exchange_graph(a).nodes.size());
}
BENCHMARK(BM_ExchangeGraphEx1)->Unit(benchmark::kMillisecond);

void BM_EnumerateEx1(benchmark::State& state) {
  const LoadedSetting ls = load_setting(kData / "ex1.setting");
  const RigidSetting s = validate_setting(ls.algebra, ls.r);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_max_rigid(s).nodes.size());
}
BENCHMARK(BM_EnumerateEx1)->Unit(benchmark::kMillisecond);

void BM_DecomposeRegular(benchmark::State& state) {
  const BoundAlgebra a = load_algebra(kData / "ex1.alg");
  const auto lib = load_modules(kData / "ex1_ind.mod", a);
  std::vector<Representation> parts;
  for (const auto& m : lib) parts.push_back(m.module);
  parts.resize(static_cast<std::size_t>(state.range(0)));
  const Representation m = direct_sum(a, parts).sum;
  for (auto _ : state) benchmark::DoNotOptimize(decompose(m).summand_count());
}
BENCHMARK(BM_DecomposeRegular)->Arg(2)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ExtAllPairsEx1(benchmark::State& state) {
  const BoundAlgebra a = load_algebra(kData / "ex1.alg");
  const auto lib = load_modules(kData / "ex1_ind.mod", a);
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& m : lib) {
      for (const auto& n : lib) total += ext_dim(m.module, n.module, 1);
    }
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ExtAllPairsEx1)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
