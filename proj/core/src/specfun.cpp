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

#include "fasotfs/specfun.hpp"

#include "fasotfs/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace fasotfs::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_finite(double x, const char *fn)
{
    if (!std::isfinite(x))
        throw std::invalid_argument(std::string(fn) + ": non-finite argument");
}

// J_nu via (1/pi) * int_0^pi cos(x sin t - nu t) dt, panelled so each panel
// sees at most ~2 oscillation periods. Only used for |x| >= 9, where the
// power series starts losing digits to cancellation.
double bessel_integral(double x, int nu)
{
    static const quadrature::PanelRule &panel = quadrature::legendre_panel_rule(24);
    const int panels = std::max(1, static_cast<int>(std::ceil(x / 4.0)));
    const double h = kPi / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = p * h;
        double local = 0.0;
        for (std::size_t i = 0; i < panel.nodes.size(); ++i) {
            const double t = a + 0.5 * h * (panel.nodes[i] + 1.0);
            local += panel.weights[i] * std::cos(x * std::sin(t) - nu * t);
        }
        sum += 0.5 * h * local;
    }
    return sum / kPi;
}

double j0_series(double x)
{
    const long double t = static_cast<long double>(x) * x / 4.0L;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int k = 1; k < 80; ++k) {
        term *= -t / (static_cast<long double>(k) * k);
        sum += term;
        if (std::abs(static_cast<double>(term)) < 1e-19 * std::abs(static_cast<double>(sum)) &&
            k > 4)
            break;
    }
    return static_cast<double>(sum);
}

double j1_series(double x)
{
    const long double t = static_cast<long double>(x) * x / 4.0L;
    long double term = static_cast<long double>(x) / 2.0L;
    long double sum = term;
    for (int k = 1; k < 80; ++k) {
        term *= -t / (static_cast<long double>(k) * (k + 1));
        sum += term;
        if (std::abs(static_cast<double>(term)) < 1e-19 * std::abs(static_cast<double>(sum)) &&
            k > 4)
            break;
    }
    return static_cast<double>(sum);
}

// regularized incomplete gamma by series (P accurate) ...
double gamma_p_series(double a, double x)
{
    double ap = a;
    double del = 1.0 / a;
    double sum = del;
    for (int n = 0; n < 1000; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-17)
            break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// ... and by Lentz continued fraction (Q accurate)
double gamma_q_cf(double a, double x)
{
    const double fpmin = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < fpmin)
            d = fpmin;
        c = b + an / c;
        if (std::abs(c) < fpmin)
            c = fpmin;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16)
            break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

struct GammaPQ {
    double p;
    double q;
};

GammaPQ gamma_pq(double a, double x)
{
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("reg_gamma: shape must be positive");
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::invalid_argument("reg_gamma: x must be >= 0");
    if (x == 0.0)
        return {0.0, 1.0};
    if (x < a + 1.0) {
        const double p = gamma_p_series(a, x);
        return {p, 1.0 - p};
    }
    const double q = gamma_q_cf(a, x);
    return {1.0 - q, q};
}

} // namespace

double bessel_j0(double x)
{
    require_finite(x, "bessel_j0");
    x = std::abs(x);
    return x < 9.0 ? j0_series(x) : bessel_integral(x, 0);
}

double bessel_j1(double x)
{
    require_finite(x, "bessel_j1");
    const double ax = std::abs(x);
    const double v = ax < 9.0 ? j1_series(ax) : bessel_integral(ax, 1);
    return x < 0.0 ? -v : v;
}

double bessel_i0_scaled(double x)
{
    require_finite(x, "bessel_i0_scaled");
    if (x < 0.0)
        throw std::invalid_argument("bessel_i0_scaled: argument must be >= 0");
    if (x <= 30.0) {
        const long double t = static_cast<long double>(x) * x / 4.0L;
        long double term = 1.0L;
        long double sum = 1.0L;
        for (int k = 1; k < 200; ++k) {
            term *= t / (static_cast<long double>(k) * k);
            sum += term;
            if (term < sum * 1e-19L)
                break;
        }
        return static_cast<double>(sum * std::exp(-static_cast<long double>(x)));
    }
    // I0(x) ~ e^x/sqrt(2 pi x) * sum_k ((2k-1)!!)^2 / (k! (8x)^k)
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 60; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = term * odd * odd / (8.0 * k * x);
        if (next >= term)
            break; // divergent tail of the asymptotic series
        term = next;
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return sum / std::sqrt(2.0 * kPi * x);
}

double reg_lower_gamma(double a, double x)
{
    return gamma_pq(a, x).p;
}

double reg_upper_gamma(double a, double x)
{
    return gamma_pq(a, x).q;
}

MarcumPair marcum_q1_pair(double a, double b)
{
    if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("marcum_q1: arguments must be finite and >= 0");

    const double x = 0.5 * a * a; // Poisson intensity of the mixture
    const double y = 0.5 * b * b; // gamma argument

    if (y == 0.0)
        return {0.0, 1.0};
    if (x == 0.0) {
        const double q = std::exp(-y);
        return {-std::expm1(-y), q};
    }

    // Q1 = sum_k pois_k(x) PoisCDF_y(k),  1-Q1 = sum_k pois_k(x) PoisTail_y(k+1).
    // Each sum is accumulated in the direction that keeps its gamma factor on
    // an all-positive recurrence, so both come out relatively accurate.
    const double half_width = 9.0 * std::sqrt(x) + 40.0;
    const long k_lo = static_cast<long>(std::max(0.0, std::floor(x - half_width)));
    const long k_hi = static_cast<long>(std::ceil(x + half_width));

    auto log_pois = [](double mean, long k) {
        return k * std::log(mean) - mean - std::lgamma(static_cast<double>(k) + 1.0);
    };

    // ascending: Q_k = PoisCDF_y(k) grows by + pois_y(k)
    double sq = 0.0;
    {
        double w = std::exp(log_pois(x, k_lo));
        double qk = reg_upper_gamma(static_cast<double>(k_lo) + 1.0, y); // = PoisCDF_y(k_lo)
        double py = std::exp(log_pois(y, k_lo));
        for (long k = k_lo;; ++k) {
            sq += w * qk;
            if (k >= k_hi)
                break;
            w *= x / static_cast<double>(k + 1);
            py *= y / static_cast<double>(k + 1);
            qk += py;
        }
    }

    // descending: P_k = PoisTail_y(k+1) grows by + pois_y(k)
    double sp = 0.0;
    {
        double w = std::exp(log_pois(x, k_hi));
        double pk = reg_lower_gamma(static_cast<double>(k_hi) + 1.0, y); // = PoisTail_y(k_hi+1)
        double py = std::exp(log_pois(y, k_hi));
        for (long k = k_hi;; --k) {
            sp += w * pk;
            if (k <= k_lo)
                break;
            w *= static_cast<double>(k) / x;
            pk += py;
            py *= static_cast<double>(k) / y;
        }
    }

    return {std::clamp(sp, 0.0, 1.0), std::clamp(sq, 0.0, 1.0)};
}

double marcum_q1(double a, double b)
{
    return marcum_q1_pair(a, b).q;
}

double rician_cdf(double a, double b)
{
    return marcum_q1_pair(a, b).p;
}

SeriesValue hyp1f2_series(double a, double b1, double b2, double z, double z_cap)
{
    auto bad_lower = [](double b) {
        return b <= 0.0 && b == std::floor(b);
    };
    if (bad_lower(b1) || bad_lower(b2))
        throw std::invalid_argument("hyp1f2: lower parameter is a non-positive integer");
    if (!std::isfinite(z))
        throw std::invalid_argument("hyp1f2: non-finite argument");
    if (std::abs(z) > z_cap)
        throw std::range_error("hyp1f2: |z| = " + std::to_string(std::abs(z)) +
                               " beyond series cap " + std::to_string(z_cap));

    long double term = 1.0L;
    long double sum = 1.0L;
    std::size_t n = 0;
    int quiet = 0;
    while (n < 5000) {
        const long double num = (static_cast<long double>(a) + n) * z;
        const long double den = (static_cast<long double>(b1) + n) *
                                (static_cast<long double>(b2) + n) *
                                (static_cast<long double>(n) + 1.0L);
        term *= num / den;
        sum += term;
        ++n;
        if (std::abs(static_cast<double>(term)) <=
            1e-14 * std::max(1.0, std::abs(static_cast<double>(sum)))) {
            if (++quiet >= 2)
                return {static_cast<double>(sum), n};
        } else {
            quiet = 0;
        }
    }
    throw std::range_error("hyp1f2: series did not converge within 5000 terms");
}

double hyp1f2(double a, double b1, double b2, double z)
{
    return hyp1f2_series(a, b1, b2, z).value;
}

double digamma(double x)
{
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::invalid_argument("digamma: argument must be positive");
    double result = 0.0;
    while (x < 10.0) {
        result -= 1.0 / x;
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    // ln x - 1/(2x) - sum B_{2n}/(2n x^{2n})
    result += std::log(x) - 0.5 * inv -
              inv2 * (1.0 / 12.0 +
                      inv2 * (-1.0 / 120.0 +
                              inv2 * (1.0 / 252.0 +
                                      inv2 * (-1.0 / 240.0 +
                                              inv2 * (1.0 / 132.0 +
                                                      inv2 * (-691.0 / 32760.0))))));
    return result;
}

} // namespace fasotfs::specfun
