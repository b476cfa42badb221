// SPDX-License-Identifier: Apache-2.0

#include "fasotfs/channel.hpp"
#include "fasotfs/montecarlo.hpp"
#include "fasotfs/rng.hpp"

#include <benchmark/benchmark.h>

namespace ch = fasotfs::channel;
namespace mc = fasotfs::montecarlo;

static void BM_NormalDraw(benchmark::State &state)
{
    fasotfs::rng::Stream s(1, 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(s.next_normal());
}
BENCHMARK(BM_NormalDraw);

static void BM_SimulateGeneral(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    ch::FasGeometry geom{n, 1.0};
    ch::ScenarioConfig cfg;
    fasotfs::rng::Stream scen(7, 0);
    const auto clusters = ch::generate_scenario(cfg, geom, scen);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::simulate_general(clusters, geom, 2000, 7));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_SimulateGeneral)->Arg(4)->Arg(16)->Arg(32);

static void BM_SimulateSinglepath(benchmark::State &state)
{
    const int n = static_cast<int>(state.range(0));
    ch::FasGeometry geom{n, 1.0};
    const auto params = ch::make_singlepath(1.0, 5.0, geom);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mc::simulate_singlepath(params, geom, 2000, 7));
    }
    state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_SimulateSinglepath)->Arg(4)->Arg(32);
