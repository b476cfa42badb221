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

#include "fasotfs/analysis_general.hpp"

#include "fasotfs/integrate.hpp"
#include "fasotfs/linalg.hpp"
#include "fasotfs/specfun.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace fasotfs::analysis_general {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr int kSubsetCap = 14;

} // namespace

LinkBudget normalize_threshold(double tx_power_w, double combined_gain, double noise_psd,
                               double snr_threshold)
{
    if (!(tx_power_w > 0.0) || !(combined_gain > 0.0) || !(noise_psd > 0.0) ||
        !(snr_threshold > 0.0))
        throw std::invalid_argument("normalize_threshold: all inputs must be > 0");
    LinkBudget b;
    b.tx_power_w = tx_power_w;
    b.combined_gain = combined_gain;
    b.noise_psd = noise_psd;
    b.snr_threshold = snr_threshold;
    b.normalized_threshold = snr_threshold * noise_psd / (tx_power_w * combined_gain);
    return b;
}

double single_port_cdf(const gamma_fit::GammaFit &fit, double gamma)
{
    if (gamma <= 0.0)
        return 0.0;
    return specfun::reg_lower_gamma(fit.shape, gamma / fit.scale);
}

double outage_exact_subsets(const channel::CorrelationMatrix &correlation,
                            const gamma_fit::GammaFit &fit, double threshold_norm)
{
    const int n = correlation.num_ports;
    if (n > kSubsetCap)
        throw std::length_error(
            "outage_exact_subsets: 2^N subset enumeration capped at N = 14; "
            "use the Monte-Carlo path for larger arrays");

    const double f = single_port_cdf(fit, threshold_norm);
    std::vector<double> fpow(n + 1, 1.0);
    for (int k = 1; k <= n; ++k)
        fpow[k] = fpow[k - 1] * f;

    double total = 0.0;
    const unsigned subsets = 1u << n;
    std::vector<int> members;
    members.reserve(n);
    for (unsigned mask = 1; mask < subsets; ++mask) {
        const int k = std::popcount(mask);
        members.clear();
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                members.push_back(i);
        double d;
        if (k == 1) {
            d = 1.0; // unit diagonal
        } else {
            linalg::Matrix sub(k, k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c)
                    sub(r, c) = correlation.entries(members[r], members[c]);
            d = linalg::det(sub);
        }
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        total += sign * d * fpow[k];
    }
    return total;
}

double outage_det_form(const channel::CorrelationMatrix &correlation,
                       const gamma_fit::GammaFit &fit, double threshold_norm)
{
    const int n = correlation.num_ports;
    const double f = single_port_cdf(fit, threshold_norm);
    linalg::Matrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = (i == j ? 1.0 : 0.0) - correlation.entries(i, j) * f;
    return linalg::det(a);
}

OutageEnvelope outage_envelope(const gamma_fit::GammaFit &fit, double threshold_norm, int n_ports,
                               double rho_avg)
{
    if (n_ports < 1)
        throw std::invalid_argument("outage_envelope: n_ports must be >= 1");
    if (!(rho_avg >= 0.0 && rho_avg <= 1.0))
        throw std::invalid_argument("outage_envelope: rho_avg must be in [0, 1]");

    const double f = single_port_cdf(fit, threshold_norm);
    OutageEnvelope env;
    env.rho_avg = rho_avg;
    env.n_eff = 1.0 + (n_ports - 1) * (1.0 - rho_avg);
    env.comonotone_endpoint = f;
    env.independent_endpoint = std::pow(f, static_cast<double>(n_ports));
    env.refined_lower = std::pow(f, env.n_eff);
    return env;
}

double average_port_correlation(const channel::CorrelationMatrix &correlation)
{
    const int n = correlation.num_ports;
    if (n == 1)
        return 1.0;
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                sum += std::clamp(correlation.entries(i, j), 0.0, 1.0);
    return sum / (static_cast<double>(n) * (n - 1));
}

double outage_asymptotic(const gamma_fit::GammaFit &fit, double threshold, Regime regime)
{
    const double z = threshold / fit.scale;
    if (regime == Regime::small)
        return std::pow(z, fit.shape) / (fit.shape * std::tgamma(fit.shape));
    return 1.0 - std::exp(-z) * std::pow(z, fit.shape - 1.0) / std::tgamma(fit.shape);
}

CapacityResult capacity_exact(const std::function<double(double)> &outage_fn, double tol,
                              double tail_tol)
{
    // expand until the survival mass is below tail_tol
    double t = 1.0;
    double surv = 1.0 - outage_fn(t);
    int doublings = 0;
    while (surv > tail_tol) {
        t *= 2.0;
        surv = 1.0 - outage_fn(t);
        if (++doublings > 60)
            throw std::runtime_error(
                "capacity_exact: 1 - P_out does not decay; outage function is not CDF-like");
    }

    const integrate::Result r = integrate::adaptive(
        [&](double g) { return (1.0 - outage_fn(g)) / (1.0 + g); }, 0.0, t, tol);

    // tail bound from the local exponential decay rate
    double tail = 0.0;
    const double s_half = 1.0 - outage_fn(0.5 * t);
    if (surv > 0.0 && s_half > surv) {
        const double rate = std::log(s_half / surv) / (0.5 * t);
        tail = surv / (rate * (1.0 + t));
    }

    CapacityResult out;
    out.bits = r.value / kLn2;
    out.error_estimate = (r.error + tail) / kLn2;
    return out;
}

std::pair<CapacityResult, CapacityResult> capacity_bounds(const gamma_fit::GammaFit &fit,
                                                          int n_ports)
{
    if (n_ports < 1)
        throw std::invalid_argument("capacity_bounds: n_ports must be >= 1");

    const double a = fit.shape;
    const double th = fit.scale;
    const double lg = std::lgamma(a);

    // integration window covering the Gamma mass to ~1e-16
    const double t_hi = th * (a + 60.0 + 18.0 * std::sqrt(a));
    const double log2e = 1.0 / kLn2;

    auto pdf = [&](double g) {
        if (g <= 0.0)
            return 0.0;
        return std::exp((a - 1.0) * std::log(g / th) - g / th - lg) / th;
    };

    const double tol = 1.0e-10;
    const integrate::Result lower = integrate::adaptive(
        [&](double g) { return std::log1p(g) * log2e * pdf(g); }, 0.0, t_hi, tol);

    CapacityResult lo{lower.value, lower.error};

    if (n_ports == 1) {
        const double tail = specfun::reg_upper_gamma(a, t_hi / th) * std::log2(2.0 + t_hi);
        lo.error_estimate += tail;
        return {lo, lo};
    }

    const integrate::Result upper = integrate::adaptive(
        [&](double g) {
            const double f = single_port_cdf(fit, g);
            return std::log1p(g) * log2e * n_ports * std::pow(f, n_ports - 1) * pdf(g);
        },
        0.0, t_hi, tol);

    const double tail = specfun::reg_upper_gamma(a, t_hi / th) * std::log2(2.0 + t_hi);
    lo.error_estimate += tail;
    CapacityResult hi{upper.value, upper.error + n_ports * tail};
    return {lo, hi};
}

double capacity_asymptotic(const gamma_fit::GammaFit &fit, Regime regime)
{
    if (regime == Regime::small)
        return fit.shape * fit.scale / kLn2;
    return (specfun::digamma(fit.shape) + std::log(fit.scale)) / kLn2;
}

double mrc_outage(int n_rx, double es_over_n0, double rate)
{
    if (n_rx < 1)
        throw std::invalid_argument("mrc_outage: n_rx must be >= 1");
    if (!(es_over_n0 > 0.0) || !(rate > 0.0))
        throw std::invalid_argument("mrc_outage: es_over_n0 and rate must be > 0");
    const double gamma_th = std::exp2(rate) - 1.0;
    const double x = gamma_th / es_over_n0;
    return specfun::reg_lower_gamma(static_cast<double>(n_rx), 0.5 * x);
}

} // namespace fasotfs::analysis_general
