// SPDX-License-Identifier: Apache-2.0

#include "fasotfs/quadrature.hpp"
#include "fasotfs/specfun.hpp"

#include <benchmark/benchmark.h>

namespace sf = fasotfs::specfun;

static void BM_BesselJ0Series(benchmark::State &state)
{
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::bessel_j0(x));
        x += 1e-3;
        if (x > 8.0)
            x = 0.0;
    }
}
BENCHMARK(BM_BesselJ0Series);

static void BM_BesselJ0Integral(benchmark::State &state)
{
    double x = 9.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::bessel_j0(x));
        x += 1e-3;
        if (x > 60.0)
            x = 9.0;
    }
}
BENCHMARK(BM_BesselJ0Integral);

static void BM_RegLowerGamma(benchmark::State &state)
{
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::reg_lower_gamma(3.27, x));
        x += 1e-3;
        if (x > 20.0)
            x = 1e-3;
    }
}
BENCHMARK(BM_RegLowerGamma);

static void BM_MarcumQ1(benchmark::State &state)
{
    const double a = state.range(0);
    double b = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sf::marcum_q1_pair(a, b));
        b += 1e-3;
        if (b > 2.0 * a + 4.0)
            b = 0.0;
    }
}
BENCHMARK(BM_MarcumQ1)->Arg(1)->Arg(3)->Arg(10);

static void BM_GaussHermiteRule(benchmark::State &state)
{
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fasotfs::quadrature::gauss_hermite_rule(m));
    }
}
BENCHMARK(BM_GaussHermiteRule)->Arg(5)->Arg(20)->Arg(64);
