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

#ifndef FASOTFS_MONTECARLO_HPP
#define FASOTFS_MONTECARLO_HPP

#include "fasotfs/channel.hpp"
#include "fasotfs/linalg.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace fasotfs::montecarlo {

/// Lower-triangular factor of the eigen-clipped, diagonal-restored
/// correlation matrix plus the list of clipped (strictly negative)
/// eigenvalues.
struct PsdFactor {
    linalg::Matrix factor;
    std::vector<double> clipped_eigenvalues;
    double reconstruction_error = 0.0;
};

PsdFactor psd_factor(const channel::CorrelationMatrix &correlation);

/// One simulation: per-trial max_k |h_k|^2 samples, reproducible bit-exact
/// from (seed, inputs) and independent of the thread count (trial t always
/// draws from substream t+1 of the seed).
struct SimulationRun {
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<double> samples;
    std::string config_digest;
};

SimulationRun simulate_general(const std::vector<channel::ClusterParams> &clusters,
                               const channel::FasGeometry &geom, std::uint64_t trials,
                               std::uint64_t seed, int threads = 1);

SimulationRun simulate_singlepath(const channel::SinglePathParams &params,
                                  const channel::FasGeometry &geom, std::uint64_t trials,
                                  std::uint64_t seed, int threads = 1);

/// Marginal |h_k|^2 at one port (1-based) instead of the max; feeds the
/// distribution-fit checks.
SimulationRun simulate_general_port(const std::vector<channel::ClusterParams> &clusters,
                                    const channel::FasGeometry &geom, int port,
                                    std::uint64_t trials, std::uint64_t seed, int threads = 1);

struct Metrics {
    double outage = 0.0;
    double capacity_bits = 0.0;
    double stderr_outage = 0.0;
    double stderr_capacity = 0.0;
};

/// Empirical outage below the normalized threshold and mean log2(1 + s);
/// snr_scale rescales the raw |h|^2 samples into SNR for the capacity,
/// matching the link budget of the analytic side.
Metrics empirical_metrics(const SimulationRun &run, double threshold_norm,
                          double snr_scale = 1.0);

/// Raw-sample dump: 8-byte magic "FASOTFS1" + little-endian float64 array,
/// with a text sidecar (<path>.meta.txt) recording seed/trials/digest.
void write_samples(const std::filesystem::path &path, const SimulationRun &run);
SimulationRun read_samples(const std::filesystem::path &path);

/// FNV-1a 64 content hash of raw little-endian bytes; used for config digests.
std::uint64_t fnv1a64(const void *data, std::size_t size, std::uint64_t basis = 14695981039346656037ull);
std::string digest_string(std::uint64_t h);

} // namespace fasotfs::montecarlo

#endif
