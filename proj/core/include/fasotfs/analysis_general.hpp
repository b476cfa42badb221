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

#ifndef FASOTFS_ANALYSIS_GENERAL_HPP
#define FASOTFS_ANALYSIS_GENERAL_HPP

#include "fasotfs/channel.hpp"
#include "fasotfs/gamma_fit.hpp"

#include <functional>
#include <utility>

namespace fasotfs::analysis_general {

/// Link budget and the power-domain threshold normalisation
/// gamma'_th = gamma_th N0 / (P G).
struct LinkBudget {
    double tx_power_w = 1.0;
    double combined_gain = 1.0;
    double noise_psd = 1.0;
    double snr_threshold = 1.0;
    double normalized_threshold = 1.0;
};

LinkBudget normalize_threshold(double tx_power_w, double combined_gain, double noise_psd,
                               double snr_threshold);

/// Single-port CDF F_S(gamma) = P(alpha, gamma/theta).
double single_port_cdf(const gamma_fit::GammaFit &fit, double gamma);

/// Subset expansion of the determinant outage form:
/// sum_k (-1)^{k+1} sum_{S_k} det(R_{S_k}) F^{|S_k|}. Combinatorial; capped
/// at N <= 14 (use the Monte-Carlo path beyond).
double outage_exact_subsets(const channel::CorrelationMatrix &correlation,
                            const gamma_fit::GammaFit &fit, double threshold_norm);

/// det(I - R F), the unexpanded determinant form.
double outage_det_form(const channel::CorrelationMatrix &correlation,
                       const gamma_fit::GammaFit &fit, double threshold_norm);

/// Analytic envelope of the optimal-port outage plus the N_eff refinement:
/// independent endpoint [F]^N, comonotone endpoint F, refined [F]^{N_eff}
/// with N_eff = 1 + (N-1)(1 - rho_avg).
struct OutageEnvelope {
    double independent_endpoint = 0.0;
    double comonotone_endpoint = 0.0;
    double refined_lower = 0.0;
    double n_eff = 1.0;
    double rho_avg = 0.0;
};

OutageEnvelope outage_envelope(const gamma_fit::GammaFit &fit, double threshold_norm, int n_ports,
                               double rho_avg);

/// Mean off-diagonal correlation with negative J0 lobes treated as zero.
double average_port_correlation(const channel::CorrelationMatrix &correlation);

enum class Regime { small, large };

/// Small/large gamma_th/theta approximations of the single-port CDF.
double outage_asymptotic(const gamma_fit::GammaFit &fit, double threshold, Regime regime);

struct CapacityResult {
    double bits = 0.0;
    double error_estimate = 0.0;
};

/// C = 1/ln2 * int_0^inf (1 - P_out(g)) / (1 + g) dg for a CDF-like P_out,
/// adaptive with tail truncation where 1 - P_out < tail_tol.
CapacityResult capacity_exact(const std::function<double(double)> &outage_fn,
                              double tol = 1.0e-9, double tail_tol = 1.0e-10);

/// (lower, upper) = single-port capacity and max-of-N-independent capacity.
std::pair<CapacityResult, CapacityResult> capacity_bounds(const gamma_fit::GammaFit &fit,
                                                          int n_ports);

/// small: alpha theta / ln2 (mean-SNR form; equals the theta-free classic
/// form at theta = 1); large: (psi(alpha) + ln theta) / ln2.
double capacity_asymptotic(const gamma_fit::GammaFit &fit, Regime regime);

/// MRC benchmark: chi-square CDF with 2 n_rx degrees of freedom at
/// x = (2^rate - 1) / (Es/N0), i.e. P(n_rx, x/2).
double mrc_outage(int n_rx, double es_over_n0, double rate);

} // namespace fasotfs::analysis_general

#endif
