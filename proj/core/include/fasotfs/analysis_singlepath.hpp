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

#ifndef FASOTFS_ANALYSIS_SINGLEPATH_HPP
#define FASOTFS_ANALYSIS_SINGLEPATH_HPP

#include "fasotfs/channel.hpp"

#include <complex>
#include <string>
#include <vector>

namespace fasotfs::analysis_singlepath {

/// Conditioned on the shared pair (x0, y0), the port amplitudes are
/// independent Rician with common per-dimension spread
/// sigma^2 = beta^2 (1-mu^2) / (2(K+1)) and per-port centres
/// c_k = alpha_k beta sqrt(K/(K+1)) + mu beta sqrt(1/(2(K+1))) (x + j y),
/// where (x, y) are the shared pair expressed as standard normals (the
/// channel draws x0, y0 with variance 1/2, hence the extra sqrt(1/2)).
struct ConditionalRician {
    double sigma = 1.0;
    std::vector<std::complex<double>> centers;
};

ConditionalRician conditional_params(const channel::SinglePathParams &params, double x, double y);

/// Outage P(max_k |h_k| < gamma_th) via the conditional-independence
/// decomposition: adaptive 2-D integration of the Gaussian-weighted Marcum
/// product over (x0, y0) in a +/-8 sigma box. Amplitude-domain threshold.
double outage_exact_numeric(const channel::SinglePathParams &params,
                            const channel::FasGeometry &geom, double gamma_th, double tol = 1e-8);

/// Gauss-Hermite tensor approximation of the same integral:
/// (1/pi) sum_m sum_n w_m w_n prod_k [1 - Q1(|c_k(sqrt2 x_m, sqrt2 x_n)|/sigma, gamma_th/sigma)].
double outage_quadrature(const channel::SinglePathParams &params,
                         const channel::FasGeometry &geom, double gamma_th, int order);

struct CapacityResult {
    double bits = 0.0;
    double error_estimate = 0.0;
};

/// Ergodic capacity E[log2(1 + max_k |h_k|^2)] by nested adaptive
/// integration (outer Gaussian pair, inner SNR integral).
CapacityResult capacity_exact_numeric(const channel::SinglePathParams &params,
                                      const channel::FasGeometry &geom, double tol = 1e-6);

/// Gauss-Hermite x Gauss-Laguerre approximation of the capacity with the
/// derived 1/(pi ln2) prefactor (see calibrate_capacity_prefactor).
double capacity_quadrature(const channel::SinglePathParams &params,
                           const channel::FasGeometry &geom, int order_hermite,
                           int order_laguerre);

struct PrefactorCalibration {
    std::string matched;  // label of the best constant
    double constant = 0.0;
    double exact_bits = 0.0;
    double best_delta = 0.0;
    std::vector<std::pair<std::string, double>> candidates;
};

/// One-time check of the capacity quadrature constant against the exact
/// integral on a reference configuration.
PrefactorCalibration calibrate_capacity_prefactor();

} // namespace fasotfs::analysis_singlepath

#endif
