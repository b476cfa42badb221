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

#ifndef FASOTFS_SPECFUN_HPP
#define FASOTFS_SPECFUN_HPP

#include <cstddef>

namespace fasotfs::specfun {

/// J0(x). Power series below 9, panelled Gauss-Legendre on the Bessel
/// integral representation above; good to ~1e-14 relative away from zeros.
double bessel_j0(double x);

/// J1(x), same construction.
double bessel_j1(double x);

/// e^{-x} I0(x) for x >= 0; series below 30, asymptotic expansion above.
double bessel_i0_scaled(double x);

/// Regularized lower incomplete gamma P(a,x), a > 0, x >= 0.
/// Series for x < a+1, continued fraction otherwise; <=1e-12 relative on
/// a in [0.1, 50], x in [0, 200] (see tests/data/specfun_vectors.txt).
double reg_lower_gamma(double a, double x);

/// Q(a,x) = 1 - P(a,x), computed on its own accurate branch.
double reg_upper_gamma(double a, double x);

struct MarcumPair {
    double p; // 1 - Q1(a,b): the Rician CDF at b
    double q; // Q1(a,b)
};

/// First-order Marcum Q and its complement, each from an all-positive
/// Poisson-mixture sum so both sides carry full relative accuracy.
MarcumPair marcum_q1_pair(double a, double b);

double marcum_q1(double a, double b);

/// Rician CDF 1 - Q1(a,b); safe to log when tiny.
double rician_cdf(double a, double b);

struct SeriesValue {
    double value;
    std::size_t terms;
};

/// Generalized hypergeometric 1F2(a; b1, b2; z) by direct term summation
/// with relative tail tolerance 1e-14. |z| capped (slowly convergent and
/// cancellation-prone far out); throws std::range_error beyond the cap.
SeriesValue hyp1f2_series(double a, double b1, double b2, double z,
                          double z_cap = 1.0e4);

double hyp1f2(double a, double b1, double b2, double z);

/// psi(x) for x > 0; recurrence into the asymptotic region.
double digamma(double x);

} // namespace fasotfs::specfun

#endif
