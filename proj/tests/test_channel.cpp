// SPDX-License-Identifier: Apache-2.0

#include "fasotfs/channel.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

using namespace fasotfs::channel;
using fasotfs::rng::Stream;

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

ScenarioConfig test_scenario(int clusters = 3, double k = 5.0)
{
    ScenarioConfig cfg;
    cfg.num_clusters = clusters;
    cfg.cluster_attenuations.assign(clusters, 1.0 / clusters);
    cfg.rician_k = k;
    return cfg;
}

} // namespace

TEST_CASE("correlation matrix: entries, structure, edge cases")
{
    // W = 0: all-ones for any N
    const auto r0 = correlation_matrix({4, 0.0});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(r0.entries(i, j) == doctest::Approx(1.0));

    // N=2, W=0.5: off-diagonal J0(pi)
    const auto r2 = correlation_matrix({2, 0.5});
    CHECK(r2.entries(0, 1) == doctest::Approx(-0.30424217764409386).epsilon(1e-12));
    CHECK(r2.entries(0, 0) == 1.0);

    // Toeplitz + symmetry + unit diagonal
    const auto r = correlation_matrix({8, 1.3});
    for (int i = 0; i < 8; ++i) {
        CHECK(r.entries(i, i) == 1.0);
        for (int j = 0; j < 8; ++j) {
            CHECK(r.entries(i, j) == r.entries(j, i));
            if (i + 1 < 8 && j + 1 < 8)
                CHECK(r.entries(i, j) == r.entries(i + 1, j + 1));
            CHECK(r.entries(i, j) ==
                  doctest::Approx(oracles::bessel_j0_series(kTwoPi * std::abs(i - j) * 1.3 / 7.0))
                      .epsilon(1e-12));
        }
    }

    const auto r1 = correlation_matrix({1, 2.0});
    CHECK(r1.entries(0, 0) == 1.0);

    CHECK_THROWS_AS(correlation_matrix({4, -0.5}), std::invalid_argument);
}

TEST_CASE("generate_scenario: LoS geometry")
{
    ScenarioConfig cfg = test_scenario();
    cfg.sat_user_distance_m = 600.0e3;
    Stream s(11, 0);
    const auto clusters = generate_scenario(cfg, {4, 1.0}, s);

    REQUIRE(clusters.size() == 3);
    CHECK(clusters[0].delay_s == doctest::Approx(600.0e3 / 299792458.0).epsilon(1e-15));

    // velocity orthogonal to the LoS direction: zero Doppler (defaults)
    CHECK(clusters[0].doppler_hz == doctest::Approx(0.0));

    // scatter clusters sit behind the LoS in delay and inside the Doppler spread
    for (std::size_t p = 1; p < clusters.size(); ++p) {
        CHECK(clusters[p].delay_s >= clusters[0].delay_s);
        CHECK(std::abs(clusters[p].doppler_hz - clusters[0].doppler_hz) <=
              cfg.doppler_spread_hz);
        CHECK(clusters[p].specular_means ==
              std::vector<std::complex<double>>(4, std::complex<double>(0.0, 0.0)));
        CHECK(clusters[p].diffuse_variance == 1.0);
    }

    // LoS split carries the K factor with unit cluster gain power
    CHECK(std::norm(clusters[0].specular_means[1]) + clusters[0].diffuse_variance ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::norm(clusters[0].specular_means[2]) / clusters[0].diffuse_variance ==
          doctest::Approx(5.0).epsilon(1e-12));

    // gains are sqrt of the normalized attenuations
    double total = 0.0;
    for (const auto &c : clusters)
        total += c.tap_gain * c.tap_gain;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("generate_scenario: Doppler follows v . r")
{
    ScenarioConfig cfg = test_scenario(1);
    cfg.sat_velocity_mps = {7000.0, 0.0, 0.0};
    cfg.user_to_sat_unit = {1.0, 0.0, 0.0};
    cfg.carrier_hz = 12.0e9;
    Stream s(1, 0);
    const auto clusters = generate_scenario(cfg, {1, 0.0}, s);
    CHECK(clusters[0].doppler_hz ==
          doctest::Approx(12.0e9 / 299792458.0 * 7000.0).epsilon(1e-12));
}

TEST_CASE("generate_scenario: reproducible bit-exact; excess delays exponential")
{
    ScenarioConfig cfg = test_scenario(2);
    cfg.excess_delay_rate = 2.5e6;

    Stream s1(99, 0), s2(99, 0);
    const auto a = generate_scenario(cfg, {4, 1.0}, s1);
    const auto b = generate_scenario(cfg, {4, 1.0}, s2);
    REQUIRE(a.size() == b.size());
    for (std::size_t p = 0; p < a.size(); ++p) {
        CHECK(a[p].delay_s == b[p].delay_s);
        CHECK(a[p].doppler_hz == b[p].doppler_hz);
        CHECK(a[p].specular_means == b[p].specular_means);
    }

    // KS test of the excess delays against Exp(lambda) at the 1% level
    const int n = 100000;
    std::vector<double> delays;
    delays.reserve(n);
    const double tau_los = cfg.sat_user_distance_m / 299792458.0;
    for (int i = 0; i < n; ++i) {
        Stream s(1234, i);
        const auto cl = generate_scenario(cfg, {2, 0.5}, s);
        delays.push_back(cl[1].delay_s - tau_los);
    }
    std::sort(delays.begin(), delays.end());
    const double ks = oracles::ks_statistic(
        delays, [&](double d) { return 1.0 - std::exp(-cfg.excess_delay_rate * d); });
    CHECK(ks < 1.63 / std::sqrt(static_cast<double>(n)));
}

TEST_CASE("realize_channel: deterministic when diffuse power vanishes")
{
    ScenarioConfig cfg = test_scenario(2, 5.0);
    Stream scen(3, 0);
    auto clusters = generate_scenario(cfg, {3, 1.0}, scen);
    for (auto &c : clusters)
        c.diffuse_variance = 0.0;
    const auto corr = correlation_matrix({3, 1.0});
    Stream s(5, 1);
    const auto r = realize_channel(clusters, corr, s);
    for (int k = 0; k < 3; ++k) {
        std::complex<double> want{0.0, 0.0};
        for (const auto &c : clusters)
            want += c.tap_gain * c.specular_means[k];
        CHECK(std::abs(r.per_port_gain[k] - want) < 1e-14);
        CHECK(r.per_port_power[k] ==
              doctest::Approx(std::norm(r.per_port_gain[k])).epsilon(1e-12));
    }
    CHECK(r.tap_delay_s == clusters[0].delay_s);
}

TEST_CASE("realize_channel: W=0 gives identical ports")
{
    ScenarioConfig cfg = test_scenario(3, 0.0); // Rayleigh: only diffuse parts
    Stream scen(3, 0);
    const auto clusters = generate_scenario(cfg, {5, 0.0}, scen);
    const auto corr = correlation_matrix({5, 0.0});
    Stream s(7, 1);
    const auto r = realize_channel(clusters, corr, s);
    for (int k = 1; k < 5; ++k)
        CHECK(std::abs(r.per_port_gain[k] - r.per_port_gain[0]) < 1e-12);
}

TEST_CASE("realize_channel: sample covariance converges to R")
{
    const FasGeometry geom{6, 1.0};
    const auto corr = correlation_matrix(geom);
    ScenarioConfig cfg = test_scenario(1, 0.0); // single Rayleigh cluster: h = Lz
    Stream scen(3, 0);
    const auto clusters = generate_scenario(cfg, geom, scen);

    const int trials = 100000;
    fasotfs::linalg::Matrix cov(6, 6, 0.0);
    for (int t = 0; t < trials; ++t) {
        Stream s(2029, 1 + t);
        const auto r = realize_channel(clusters, corr, s);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                cov(i, j) += r.per_port_gain[i].real() * r.per_port_gain[j].real() +
                             r.per_port_gain[i].imag() * r.per_port_gain[j].imag();
    }
    double max_err = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            max_err = std::max(max_err, std::abs(cov(i, j) / trials - corr.entries(i, j)));
    CHECK(max_err <= 0.02);
}

TEST_CASE("realize_channel: dimension mismatch is rejected")
{
    ScenarioConfig cfg = test_scenario(1);
    Stream scen(3, 0);
    const auto clusters = generate_scenario(cfg, {4, 1.0}, scen);
    const auto corr = correlation_matrix({5, 1.0});
    Stream s(5, 1);
    CHECK_THROWS_AS(realize_channel(clusters, corr, s), std::invalid_argument);
}

TEST_CASE("singlepath_mu: limits, frozen values, continuity")
{
    CHECK(singlepath_mu(0.0).value == doctest::Approx(std::sqrt(2.0) - 0.5).epsilon(1e-14));
    // oracle-derived values (1F2 term summation + J1 series)
    CHECK(singlepath_mu(0.5).value == doctest::Approx(0.83561246608082605).epsilon(1e-10));
    CHECK(singlepath_mu(1.0).value == doctest::Approx(0.52538261472363255).epsilon(1e-10));

    double prev = singlepath_mu(0.0).value;
    for (double w = 1e-3; w <= 5.0; w += 1e-3) {
        const auto mu = singlepath_mu(w);
        CHECK(std::abs(mu.value - prev) < 1e-3);
        CHECK(std::abs(mu.value) <= 1.0);
        CHECK(mu.clamped == (std::abs(mu.raw) > 1.0));
        prev = mu.value;
    }
    CHECK_THROWS_AS(singlepath_mu(-1.0), std::invalid_argument);
}

TEST_CASE("realize_singlepath: moments and limits")
{
    const FasGeometry geom{4, 1.0};

    // K huge: amplitude pinned at beta |alpha_k|
    {
        const auto p = make_singlepath(2.0, 1.0e9, geom);
        Stream s(31, 1);
        const auto r = realize_singlepath(p, geom, s);
        for (double pw : r.per_port_power)
            CHECK(pw == doctest::Approx(4.0).epsilon(1e-3));
    }

    // mu = 0, K = 0: iid Rayleigh ports with E|h|^2 = beta^2
    {
        SinglePathParams p;
        p.beta = 1.5;
        p.rician_k = 0.0;
        p.port_mu = 0.0;
        p.specular_per_port.assign(4, {1.0, 0.0});
        double mean = 0.0;
        const int trials = 100000;
        for (int t = 0; t < trials; ++t) {
            Stream s(77, 1 + t);
            const auto r = realize_singlepath(p, geom, s);
            mean += r.per_port_power[0];
        }
        CHECK(mean / trials == doctest::Approx(2.25).epsilon(0.02));
    }

    // E|g_k|^2 = 1 and cross-port diffuse correlation = mu^2
    {
        const auto p = make_singlepath(1.0, 5.0, geom);
        const double mu2 = p.port_mu * p.port_mu;
        const int trials = 100000;
        double power = 0.0;
        std::complex<double> cross{0.0, 0.0};
        const double spec_w = std::sqrt(p.rician_k / (p.rician_k + 1.0));
        for (int t = 0; t < trials; ++t) {
            Stream s(1001, 1 + t);
            const auto r = realize_singlepath(p, geom, s);
            power += r.per_port_power[1];
            const auto d0 = r.per_port_gain[0] - spec_w;
            const auto d3 = r.per_port_gain[3] - spec_w;
            cross += d0 * std::conj(d3);
        }
        CHECK(power / trials == doctest::Approx(1.0).epsilon(0.02));
        // diffuse parts have variance 1/(K+1); normalized pair correlation
        CHECK(cross.real() / trials / (1.0 / 6.0) == doctest::Approx(mu2).epsilon(0.05));
    }
}

TEST_CASE("singlepath params validation")
{
    SinglePathParams p;
    p.specular_per_port.assign(2, {1.0, 0.0});
    p.port_mu = 1.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.port_mu = 0.5;
    p.beta = -1.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
