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

#include "fasotfs/experiment.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

namespace fasotfs::experiment {

namespace {

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::filesystem::path &path, const std::string &content)
{
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("csv: cannot open " + tmp.string());
        out << content;
        if (!out)
            throw std::runtime_error("csv: short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace

void write_csv(const SweepResult &result, const std::filesystem::path &path)
{
    const ExperimentConfig &cfg = result.config;
    std::string out;
    out += "# fasotfs-sweep v1\n";
    out += "# config_digest=" + result.digest + "\n";
    out += std::string("# model=") +
           (cfg.model == Model::general ? "general" : "singlepath") + "\n";
    out += "# sweep_param=" + cfg.sweep_param + "\n";
    out += "# seed=" + std::to_string(cfg.seed) + "\n";
    out += "# trials=" + std::to_string(cfg.trials) + "\n";
    out += "# eta=" + fmt(cfg.eta) + "\n";
    out += std::string("# fit_variance=") +
           (cfg.fit_variance == FitVariance::uncorrected ? "uncorrected" : "corrected") + "\n";
    out += "# snr_threshold=" + fmt(cfg.snr_threshold) + "\n";
    out += "# quadrature_m=" + std::to_string(cfg.quadrature_m) + "\n";
    out += "# quadrature_l=" + std::to_string(cfg.quadrature_l) + "\n";
    if (cfg.model == Model::general) {
        out += "# rician_k=" + fmt(cfg.scenario.rician_k) + "\n";
        out += std::string("# normalize_beta=") +
               (cfg.scenario.normalize_attenuations ? "true" : "false") + "\n";
    }
    out += "param_name,param_value,method,value,error_estimate,seed\n";
    for (const SweepRow &row : result.rows) {
        out += row.param_name + "," + fmt(row.param_value) + "," + row.method + "," +
               fmt(row.value) + "," + fmt(row.error_estimate) + "," +
               std::to_string(row.seed) + "\n";
    }
    atomic_write(path, out);
}

void write_fit_check_csv(const FitCheckResult &result, const ExperimentConfig &cfg,
                         const std::filesystem::path &path)
{
    std::string out;
    out += "# fasotfs-fitcheck v1\n";
    out += "# config_digest=" + result.digest + "\n";
    out += "# seed=" + std::to_string(cfg.seed) + "\n";
    out += "# trials=" + std::to_string(cfg.trials) + "\n";
    out += "# eta=" + fmt(cfg.eta) + "\n";
    out += "# m1=" + fmt(result.m1_formula) + "\n";
    out += "# var_uncorrected=" + fmt(result.var_uncorrected) + "\n";
    out += "# var_corrected=" + fmt(result.var_corrected) + "\n";
    out += "# var_uncapped=" + fmt(result.var_uncapped) + "\n";
    out += "# shape_from_mc_moments=" + fmt(result.shape_from_mc_moments) + "\n";
    out += "# ks_gamma_uncorrected=" + fmt(result.ks_gamma_uncorrected) + "\n";
    out += "# ks_gamma_corrected=" + fmt(result.ks_gamma_corrected) + "\n";
    out += "# ks_gamma_uncapped=" + fmt(result.ks_gamma_uncapped) + "\n";
    out += "# ks_gaussian=" + fmt(result.ks_gaussian) + "\n";
    out += "x,empirical_cdf,gamma_cdf,gaussian_cdf\n";
    for (const auto &row : result.table)
        out += fmt(row[0]) + "," + fmt(row[1]) + "," + fmt(row[2]) + "," + fmt(row[3]) + "\n";
    atomic_write(path, out);
}

} // namespace fasotfs::experiment
