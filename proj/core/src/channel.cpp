// SPDX-License-Identifier: Apache-2.0
//
// fasotfs - outage and capacity analysis for fluid-antenna OTFS satellite links
// Copyright (C) 2026 the fasotfs contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fasotfs/channel.hpp"

#include "fasotfs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace fasotfs::channel {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
constexpr double kSpeedOfLight = 299792458.0;

} // namespace

void FasGeometry::validate() const
{
    if (num_ports < 1)
        throw std::invalid_argument("FasGeometry: num_ports must be >= 1");
    if (!(aperture_wavelengths >= 0.0) || !std::isfinite(aperture_wavelengths))
        throw std::invalid_argument("FasGeometry: aperture must be finite and >= 0");
}

double FasGeometry::port_position(int k) const
{
    if (num_ports == 1)
        return 0.0;
    return (k - 1) * aperture_wavelengths / (num_ports - 1);
}

void ScenarioConfig::validate() const
{
    if (num_clusters < 1)
        throw std::invalid_argument("ScenarioConfig: num_clusters must be >= 1");
    if (static_cast<int>(cluster_attenuations.size()) != num_clusters)
        throw std::invalid_argument("ScenarioConfig: need one attenuation per cluster");
    for (double b : cluster_attenuations)
        if (!(b > 0.0))
            throw std::invalid_argument("ScenarioConfig: attenuations must be > 0");
    if (!(excess_delay_rate > 0.0))
        throw std::invalid_argument("ScenarioConfig: excess_delay_rate must be > 0");
    if (!(doppler_spread_hz >= 0.0))
        throw std::invalid_argument("ScenarioConfig: doppler_spread_hz must be >= 0");
    if (!(rician_k >= 0.0))
        throw std::invalid_argument("ScenarioConfig: rician_k must be >= 0");
    const double n2 = user_to_sat_unit[0] * user_to_sat_unit[0] +
                      user_to_sat_unit[1] * user_to_sat_unit[1] +
                      user_to_sat_unit[2] * user_to_sat_unit[2];
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-9)
        throw std::invalid_argument("ScenarioConfig: user_to_sat_unit must have norm 1");
    if (!(carrier_hz > 0.0) || !(sat_user_distance_m > 0.0))
        throw std::invalid_argument("ScenarioConfig: carrier and distance must be > 0");
}

void SinglePathParams::validate() const
{
    if (!(beta > 0.0) || !std::isfinite(beta))
        throw std::invalid_argument("SinglePathParams: beta must be finite and > 0");
    if (!(rician_k >= 0.0))
        throw std::invalid_argument("SinglePathParams: rician_k must be >= 0");
    if (!(std::abs(port_mu) <= 1.0))
        throw std::invalid_argument("SinglePathParams: |port_mu| must be <= 1");
    if (specular_per_port.empty())
        throw std::invalid_argument("SinglePathParams: specular_per_port must not be empty");
}

CorrelationMatrix correlation_matrix(const FasGeometry &geom)
{
    geom.validate();
    const int n = geom.num_ports;
    CorrelationMatrix out;
    out.num_ports = n;
    out.entries = linalg::Matrix(n, n);
    if (n == 1) {
        out.entries(0, 0) = 1.0;
        return out;
    }
    // Toeplitz: entry depends on the lag only
    std::vector<double> lag(n);
    for (int m = 0; m < n; ++m)
        lag[m] = specfun::bessel_j0(kTwoPi * m * geom.aperture_wavelengths / (n - 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.entries(i, j) = lag[std::abs(i - j)];
    return out;
}

std::vector<ClusterParams> generate_scenario(const ScenarioConfig &cfg, const FasGeometry &geom,
                                             rng::Stream &stream)
{
    cfg.validate();
    geom.validate();

    const int n = geom.num_ports;
    const int p_total = cfg.num_clusters;

    std::vector<double> beta = cfg.cluster_attenuations;
    if (cfg.normalize_attenuations) {
        const double total = std::accumulate(beta.begin(), beta.end(), 0.0);
        for (double &b : beta)
            b /= total;
    }

    const double tau_los = cfg.sat_user_distance_m / kSpeedOfLight;
    const double dot = cfg.sat_velocity_mps[0] * cfg.user_to_sat_unit[0] +
                       cfg.sat_velocity_mps[1] * cfg.user_to_sat_unit[1] +
                       cfg.sat_velocity_mps[2] * cfg.user_to_sat_unit[2];
    const double nu_los = cfg.carrier_hz / kSpeedOfLight * dot;

    const double k = cfg.rician_k;
    const double mu_mag = std::sqrt(k / (k + 1.0));

    std::vector<ClusterParams> clusters;
    clusters.reserve(p_total);

    {
        ClusterParams los;
        los.tap_gain = std::sqrt(beta[0]);
        los.delay_s = tau_los;
        los.doppler_hz = nu_los;
        los.diffuse_variance = 1.0 / (k + 1.0);
        los.specular_means.resize(n);
        const double phase = kTwoPi * stream.next_uniform();
        const double ramp = std::cos(cfg.arrival_angle_rad);
        for (int port = 0; port < n; ++port) {
            const double pos = geom.port_position(port + 1);
            const double arg = phase + kTwoPi * pos * ramp;
            los.specular_means[port] = mu_mag * std::complex<double>(std::cos(arg), std::sin(arg));
        }
        clusters.push_back(std::move(los));
    }

    for (int p = 1; p < p_total; ++p) {
        ClusterParams c;
        c.tap_gain = std::sqrt(beta[p]);
        const double u_tau = stream.next_uniform();
        const double u_nu = stream.next_uniform();
        stream.next_uniform(); // scatter-cluster phase; diffuse-only, absorbed by CN(0,1)
        c.delay_s = tau_los - std::log1p(-u_tau) / cfg.excess_delay_rate;
        c.doppler_hz = nu_los + (2.0 * u_nu - 1.0) * cfg.doppler_spread_hz;
        c.diffuse_variance = 1.0;
        c.specular_means.assign(n, std::complex<double>(0.0, 0.0));
        clusters.push_back(std::move(c));
    }
    return clusters;
}

ChannelRealization realize_channel(const std::vector<ClusterParams> &clusters,
                                   const CorrelationMatrix &correlation, rng::Stream &stream)
{
    const linalg::PsdProjection proj = linalg::psd_project(correlation.entries);
    return realize_channel(clusters, proj.factor, stream);
}

ChannelRealization realize_channel(const std::vector<ClusterParams> &clusters,
                                   const linalg::Matrix &psd_factor, rng::Stream &stream)
{
    if (clusters.empty())
        throw std::invalid_argument("realize_channel: no clusters");
    const std::size_t n = clusters.front().specular_means.size();
    if (psd_factor.rows() != n || psd_factor.cols() != n)
        throw std::invalid_argument("realize_channel: factor does not match port count");
    for (const ClusterParams &c : clusters)
        if (c.specular_means.size() != n)
            throw std::invalid_argument("realize_channel: inconsistent port counts");

    ChannelRealization out;
    out.per_port_gain.assign(n, {0.0, 0.0});
    out.tap_delay_s = clusters.front().delay_s;
    out.tap_doppler_hz = clusters.front().doppler_hz;

    std::vector<std::complex<double>> z(n);
    for (const ClusterParams &c : clusters) {
        for (std::size_t port = 0; port < n; ++port)
            z[port] = stream.next_cnormal();
        const double sigma = std::sqrt(c.diffuse_variance);
        for (std::size_t i = 0; i < n; ++i) {
            std::complex<double> corr{0.0, 0.0};
            for (std::size_t j = 0; j <= i; ++j) // factor is lower triangular
                corr += psd_factor(i, j) * z[j];
            out.per_port_gain[i] += c.tap_gain * (c.specular_means[i] + sigma * corr);
        }
    }

    out.per_port_power.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        out.per_port_power[i] = std::norm(out.per_port_gain[i]);
    return out;
}

MuResult singlepath_mu(double aperture_wavelengths)
{
    if (!(aperture_wavelengths >= 0.0) || !std::isfinite(aperture_wavelengths))
        throw std::invalid_argument("singlepath_mu: aperture must be finite and >= 0");

    MuResult out;
    const double w = aperture_wavelengths;
    if (w == 0.0) {
        out.raw = std::sqrt(2.0) - 0.5; // 1F2 -> 1 and J1(x)/x -> 1/2
    } else {
        const double z = -kPi * kPi * w * w;
        const double f = specfun::hyp1f2(0.5, 1.0, 1.5, z);
        const double j1term = specfun::bessel_j1(kTwoPi * w) / (kTwoPi * w);
        out.raw = std::sqrt(2.0) * std::sqrt(std::max(f, 0.0)) - j1term;
    }
    out.value = out.raw;
    if (out.value > 1.0 || out.value < -1.0) {
        out.value = std::clamp(out.value, -1.0, 1.0);
        out.clamped = true;
    }
    return out;
}

ChannelRealization realize_singlepath(const SinglePathParams &params, const FasGeometry &geom,
                                      rng::Stream &stream)
{
    params.validate();
    geom.validate();
    const std::size_t n = params.specular_per_port.size();
    if (static_cast<int>(n) != geom.num_ports)
        throw std::invalid_argument("realize_singlepath: specular_per_port does not match ports");

    const double k = params.rician_k;
    const double mu = params.port_mu;
    const double spec_w = std::sqrt(k / (k + 1.0));
    const double diff_w = std::sqrt(1.0 / (k + 1.0));
    const double indep_w = std::sqrt(1.0 - mu * mu);
    const double half = std::sqrt(0.5);

    const double x0 = stream.next_normal() * half;
    const double y0 = stream.next_normal() * half;

    ChannelRealization out;
    out.per_port_gain.resize(n);
    out.per_port_power.resize(n);
    for (std::size_t port = 0; port < n; ++port) {
        const double xk = stream.next_normal() * half;
        const double yk = stream.next_normal() * half;
        const std::complex<double> diffuse{indep_w * xk + mu * x0, indep_w * yk + mu * y0};
        const std::complex<double> g =
            spec_w * params.specular_per_port[port] + diff_w * diffuse;
        out.per_port_gain[port] = params.beta * g;
        out.per_port_power[port] = std::norm(out.per_port_gain[port]);
    }
    return out;
}

SinglePathParams make_singlepath(double beta, double rician_k, const FasGeometry &geom)
{
    geom.validate();
    SinglePathParams p;
    p.beta = beta;
    p.rician_k = rician_k;
    p.port_mu = singlepath_mu(geom.aperture_wavelengths).value;
    p.specular_per_port.assign(geom.num_ports, {1.0, 0.0});
    p.validate();
    return p;
}

} // namespace fasotfs::channel
