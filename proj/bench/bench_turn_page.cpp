#include <benchmark/benchmark.h>

#include <map>

#include "fpss/tate_instances.hpp"

using namespace fpss;

namespace {

struct Fixture {
  SSInstance inst;
  Page seed;
};

const Fixture& fixture(std::int64_t n) {
  static std::map<std::int64_t, Fixture> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    Fixture f{cpn_tate_instance(5, n), {}};
    f.seed = seed_full(f.inst.ambient, TrustWindow{-40, 160, tate_band(5, n)}, 2, "E^2");
    it = cache.emplace(n, std::move(f)).first;
  }
  return it->second;
}

void BM_turn_page(benchmark::State& state) {
  const Fixture& f = fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(turn_page(f.seed, f.inst.script.front()));
}

void BM_turn_page_serial(benchmark::State& state) {
  const Fixture& f = fixture(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(turn_page_serial(f.seed, f.inst.script.front()));
}

}  // namespace

BENCHMARK(BM_turn_page)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_turn_page_serial)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
