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

#ifndef FASOTFS_CHANNEL_HPP
#define FASOTFS_CHANNEL_HPP

#include "fasotfs/linalg.hpp"
#include "fasotfs/rng.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace fasotfs::channel {

/// Fluid antenna: N equispaced ports on an aperture of W wavelengths.
/// Port k (1-based) sits at (k-1)/(N-1) * W; a single port sits at 0.
struct FasGeometry {
    int num_ports = 1;
    double aperture_wavelengths = 0.0;

    void validate() const;
    double port_position(int k) const; // wavelengths from the first port
};

/// Physical layout of the satellite link: LoS path plus P-1 scatter clusters.
struct ScenarioConfig {
    double carrier_hz = 12.0e9;
    double sat_user_distance_m = 600.0e3;
    std::array<double, 3> sat_velocity_mps{7500.0, 0.0, 0.0};
    std::array<double, 3> user_to_sat_unit{0.0, 0.0, 1.0};
    int num_clusters = 3;
    double excess_delay_rate = 1.0e6;  // rate of Exp(lambda_tau), 1/s
    double doppler_spread_hz = 1000.0; // uniform half-width of the cluster Doppler offsets
    std::vector<double> cluster_attenuations{0.6, 0.25, 0.15};
    double rician_k = 5.0;
    bool normalize_attenuations = true; // scale so the betas sum to 1
    double arrival_angle_rad = 0.0;     // plane-wave phase ramp of the LoS specular part

    void validate() const;
};

/// One delay-Doppler tap: gain sqrt(beta_p), per-port specular means and the
/// (port-uniform) diffuse variance of the normalized complex gain c_{p,k}.
struct ClusterParams {
    double tap_gain = 1.0;
    double delay_s = 0.0;
    double doppler_hz = 0.0;
    std::vector<std::complex<double>> specular_means;
    double diffuse_variance = 1.0;
};

/// Port correlation R[k][l] = J0(2 pi |k-l| W / (N-1)); unit diagonal.
struct CorrelationMatrix {
    int num_ports = 1;
    linalg::Matrix entries;
};

struct ChannelRealization {
    std::vector<std::complex<double>> per_port_gain;
    std::vector<double> per_port_power; // |h_k|^2
    double tap_delay_s = 0.0;           // dominant (LoS) cluster tap
    double tap_doppler_hz = 0.0;
};

/// Single-LoS-path model: h_k = beta * g_k with a common Rician cluster and
/// aperture-level port correlation mu shared by every port pair.
struct SinglePathParams {
    double beta = 1.0;
    double rician_k = 5.0;
    double port_mu = 0.0; // in [-1, 1]
    std::vector<std::complex<double>> specular_per_port; // alpha_k, defaults to 1

    void validate() const;
};

struct MuResult {
    double value = 0.0; // clamped to [-1, 1]
    double raw = 0.0;   // what the formula produced
    bool clamped = false;
};

CorrelationMatrix correlation_matrix(const FasGeometry &geom);

/// Cluster list for the scenario: cluster 1 is the LoS (Rician, specular mean
/// of magnitude sqrt(K/(K+1)) with a random phase and the configured arrival
/// ramp); clusters 2..P are Rayleigh with exponential excess delays and
/// uniform Doppler offsets. Identical seed/stream gives a bit-identical list.
/// Draw order per stream: phase_1, then (dtau_p, dnu_p, phase_p) for p>=2.
std::vector<ClusterParams> generate_scenario(const ScenarioConfig &cfg, const FasGeometry &geom,
                                             rng::Stream &stream);

/// One realization h_k = sum_p alpha_p (mu_{p,k} + sigma_p (L z_p)_k) with
/// z_p iid CN(0, I) and L the PSD factor of R. Draw order: for each cluster
/// in order, N complex normals in port order.
ChannelRealization realize_channel(const std::vector<ClusterParams> &clusters,
                                   const CorrelationMatrix &correlation, rng::Stream &stream);

/// Same, with a precomputed factor (what the Monte-Carlo loop uses).
ChannelRealization realize_channel(const std::vector<ClusterParams> &clusters,
                                   const linalg::Matrix &psd_factor, rng::Stream &stream);

/// Port correlation parameter of the single-path model:
/// mu = sqrt(2) sqrt(1F2(1/2; 1, 3/2; -pi^2 W^2)) - J1(2 pi W)/(2 pi W).
MuResult singlepath_mu(double aperture_wavelengths);

/// Draw x0, y0, x_k, y_k ~ N(0, 1/2) and assemble h_k = beta g_k.
/// Draw order: x0, y0, then (x_k, y_k) in port order.
ChannelRealization realize_singlepath(const SinglePathParams &params, const FasGeometry &geom,
                                      rng::Stream &stream);

/// Convenience builder: mu from the aperture, unit specular parts.
SinglePathParams make_singlepath(double beta, double rician_k, const FasGeometry &geom);

} // namespace fasotfs::channel

#endif
