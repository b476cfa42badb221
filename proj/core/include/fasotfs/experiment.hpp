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

#ifndef FASOTFS_EXPERIMENT_HPP
#define FASOTFS_EXPERIMENT_HPP

#include "fasotfs/analysis_general.hpp"
#include "fasotfs/channel.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fasotfs::experiment {

enum class Model { general, singlepath };

enum class FitVariance { uncorrected, corrected };

struct MrcConfig {
    int n_rx = 4;
    double es_over_n0 = 0.125; // 1/(2 n_rx): mean post-combining SNR matches unit port SNR
};

/// Declarative sweep description; loads from a JSON config file
/// (schema documented in the README).
struct ExperimentConfig {
    Model model = Model::general;
    std::string sweep_param = "N"; // N | W | snr_threshold_db | quadrature_M
    std::vector<double> grid;
    std::vector<std::string> methods;

    channel::ScenarioConfig scenario;      // model == general
    double singlepath_beta = 1.0;          // model == singlepath
    double singlepath_rician_k = 5.0;
    std::optional<double> singlepath_mu;   // defaults to the W-derived value

    channel::FasGeometry geometry{8, 1.0};
    double tx_power_w = 1.0;
    double combined_gain = 1.0;
    double noise_psd = 1.0;
    double snr_threshold = 1.0; // linear
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    double eta = 0.5;
    FitVariance fit_variance = FitVariance::uncorrected;
    int quadrature_m = 20;
    int quadrature_l = 40;
    MrcConfig mrc;
    int threads = 1;
    bool dump_samples = false;          // write FASOTFS1 raw-sample dumps per grid point
    std::string dump_dir = ".";

    void validate() const;
};

ExperimentConfig load_config(const std::filesystem::path &path);
ExperimentConfig parse_config(const std::string &json_text);

/// Canonical content digest of everything that affects the numbers.
std::string config_digest(const ExperimentConfig &cfg);

struct SweepRow {
    std::string param_name;
    double param_value = 0.0;
    std::string method;
    double value = 0.0;
    double error_estimate = 0.0;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0; // not serialized: CSVs must be byte-stable
};

struct SweepResult {
    ExperimentConfig config;
    std::string digest;
    std::vector<SweepRow> rows;
};

/// Evaluate every requested method at every grid point. Rows are ordered by
/// (grid index, method order as configured); reruns with the same config and
/// seed are bit-identical.
SweepResult run_sweep(const ExperimentConfig &cfg);

/// Atomic CSV write: '#'-prefixed metadata block, RFC-4180 rows.
void write_csv(const SweepResult &result, const std::filesystem::path &path);

struct FitCheckResult {
    std::string digest;
    double m1_formula = 0.0;
    double var_uncorrected = 0.0;
    double var_corrected = 0.0;
    double var_uncapped = 0.0; // raw covariance term, no normalisation or cap
    double shape_from_mc_moments = 0.0;
    double ks_gamma_uncorrected = 0.0;
    double ks_gamma_corrected = 0.0;
    double ks_gamma_uncapped = 0.0;
    double ks_gaussian = 0.0;
    // CDF table for plotting: x, empirical, fitted gamma, matched gaussian
    std::vector<std::array<double, 4>> table;
};

FitCheckResult fit_check(const ExperimentConfig &cfg);
void write_fit_check_csv(const FitCheckResult &result, const ExperimentConfig &cfg,
                         const std::filesystem::path &path);

/// Structural pass/fail report over sweep CSVs; returns a nonzero exit code
/// on any violated check. Refuses rows whose digest does not match their
/// file's metadata header.
int emit_report(const std::vector<std::filesystem::path> &csv_paths, std::ostream &out);

} // namespace fasotfs::experiment

#endif
