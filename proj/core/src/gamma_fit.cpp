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

#include "fasotfs/gamma_fit.hpp"

#include "fasotfs/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fasotfs::gamma_fit {

namespace {

constexpr double kTwoPi = 6.28318530717958647692;

void check_port(std::span<const channel::ClusterParams> clusters, int port)
{
    if (clusters.empty())
        throw std::invalid_argument("gamma_fit: no clusters");
    if (port < 1 || port > static_cast<int>(clusters.front().specular_means.size()))
        throw std::invalid_argument("gamma_fit: port index out of range");
}

} // namespace

double first_moment(std::span<const channel::ClusterParams> clusters, int port)
{
    check_port(clusters, port);
    double m1 = 0.0;
    for (const channel::ClusterParams &c : clusters) {
        const double a2 = c.tap_gain * c.tap_gain;
        m1 += a2 * (std::norm(c.specular_means[port - 1]) + c.diffuse_variance);
    }
    return m1;
}

double variance_uncorrelated(std::span<const channel::ClusterParams> clusters, int port)
{
    check_port(clusters, port);
    std::complex<double> m{0.0, 0.0};
    double s = 0.0;
    for (const channel::ClusterParams &c : clusters) {
        m += c.tap_gain * c.specular_means[port - 1];
        s += c.tap_gain * c.tap_gain * c.diffuse_variance;
    }
    const double m2 = std::norm(m);
    const double m1 = first_moment(clusters, port);
    const double var = m2 * m2 + 4.0 * m2 * s + 2.0 * s * s - m1 * m1;
    if (var < 0.0) {
        if (var < -1e-12 * std::max(1.0, m1 * m1))
            throw std::runtime_error("variance_uncorrelated: negative beyond round-off");
        return 0.0;
    }
    return var;
}

double covariance_adjustment(const channel::FasGeometry &geom)
{
    geom.validate();
    const int n = geom.num_ports;
    if (n == 1)
        return 0.0;
    // ordered pairs i != j, Toeplitz: 2 * (n - lag) copies of each lag
    double sum = 0.0;
    for (int lag = 1; lag < n; ++lag) {
        const double j0 =
            specfun::bessel_j0(kTwoPi * lag * geom.aperture_wavelengths / (n - 1));
        sum += 2.0 * (n - lag) * j0;
    }
    return 2.0 / (static_cast<double>(n) * n) * sum;
}

double variance_corrected(std::span<const channel::ClusterParams> clusters,
                          const channel::FasGeometry &geom, double eta, int port)
{
    if (!(eta >= 0.1 && eta <= 1.0))
        throw std::invalid_argument("variance_corrected: eta must be in [0.1, 1]");
    const double var = variance_uncorrelated(clusters, port);
    if (geom.num_ports == 1)
        return var;
    const double m1 = first_moment(clusters, port);
    const double adjusted = covariance_adjustment(geom) * m1 * m1;
    return var + std::min(adjusted, eta * var);
}

GammaFit fit_gamma(double m1, double var, double eta)
{
    if (!(m1 > 0.0) || !(var > 0.0))
        throw std::invalid_argument(
            "fit_gamma: degenerate channel, need positive mean and variance");
    GammaFit fit;
    fit.mean = m1;
    fit.variance = var;
    fit.second_moment = var + m1 * m1;
    fit.shape = m1 * m1 / var;
    fit.scale = var / m1;
    fit.eta = eta;
    return fit;
}

int reference_port(const channel::FasGeometry &geom)
{
    return (geom.num_ports + 1) / 2;
}

namespace {

template <class Cdf>
double ks_distance(Cdf &&cdf, std::span<const double> samples)
{
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        ks = std::max(ks, std::abs(f - static_cast<double>(i + 1) / n));
        ks = std::max(ks, std::abs(f - static_cast<double>(i) / n));
    }
    return ks;
}

} // namespace

double gamma_cdf(const GammaFit &fit, double x)
{
    if (x <= 0.0)
        return 0.0;
    return specfun::reg_lower_gamma(fit.shape, x / fit.scale);
}

double gaussian_cdf(double mean, double variance, double x)
{
    return 0.5 * std::erfc((mean - x) / std::sqrt(2.0 * variance));
}

double fit_quality(const GammaFit &fit, std::span<const double> samples)
{
    if (samples.size() < 1000)
        throw std::invalid_argument("fit_quality: need at least 1000 samples");
    return ks_distance([&](double x) { return gamma_cdf(fit, x); }, samples);
}

double gaussian_fit_quality(double mean, double variance, std::span<const double> samples)
{
    if (samples.size() < 1000)
        throw std::invalid_argument("fit_quality: need at least 1000 samples");
    return ks_distance([&](double x) { return gaussian_cdf(mean, variance, x); }, samples);
}

} // namespace fasotfs::gamma_fit
