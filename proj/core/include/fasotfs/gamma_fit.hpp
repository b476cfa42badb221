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

#ifndef FASOTFS_GAMMA_FIT_HPP
#define FASOTFS_GAMMA_FIT_HPP

#include "fasotfs/channel.hpp"

#include <span>
#include <vector>

namespace fasotfs::gamma_fit {

/// Moment-matched Gamma(shape, scale) of a per-port power |h_k|^2.
struct GammaFit {
    double shape = 1.0;        // alpha = M1^2 / Var
    double scale = 1.0;        // theta = Var / M1
    double mean = 1.0;         // M1
    double variance = 1.0;     // Var used for the fit
    double second_moment = 2.0;
    double eta = 0.5;          // correlation cap parameter used (if any)
};

/// E[|h_k|^2] = sum_p alpha_p^2 (|mu_{p,k}|^2 + sigma_p^2); k is 1-based.
double first_moment(std::span<const channel::ClusterParams> clusters, int port);

/// Variance ignoring port correlation: |M|^4 + 4|M|^2 S + 2 S^2 - M1^2 with
/// M = sum alpha_p mu_{p,k}, S = sum alpha_p^2 sigma_p^2. Tiny negative
/// round-off is clamped to zero.
double variance_uncorrelated(std::span<const channel::ClusterParams> clusters, int port);

/// The (2/N^2) sum_{i != j} J0(2 pi |i-j| W/(N-1)) factor of the corrected
/// variance, before the M1^2 scaling and the eta cap.
double covariance_adjustment(const channel::FasGeometry &geom);

/// Correlation-corrected variance: uncorrelated variance plus
/// min(adjusted covariance term, eta * uncorrelated variance), eta in [0.1, 1].
double variance_corrected(std::span<const channel::ClusterParams> clusters,
                          const channel::FasGeometry &geom, double eta, int port);

/// Moment matching; throws on a degenerate (zero-variance) channel.
GammaFit fit_gamma(double m1, double var, double eta = 0.5);

/// Default reference port: the centre port ceil(N/2) (1-based).
int reference_port(const channel::FasGeometry &geom);

/// Kolmogorov-Smirnov distance between the fitted Gamma CDF and the
/// empirical CDF of the samples. Needs at least 1000 samples.
double fit_quality(const GammaFit &fit, std::span<const double> samples);

/// KS distance against a moment-matched Gaussian, for the comparison plots.
double gaussian_fit_quality(double mean, double variance, std::span<const double> samples);

double gamma_cdf(const GammaFit &fit, double x);
double gaussian_cdf(double mean, double variance, double x);

} // namespace fasotfs::gamma_fit

#endif
