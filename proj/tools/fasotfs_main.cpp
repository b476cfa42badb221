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
#include "fasotfs/montecarlo.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using fasotfs::experiment::ExperimentConfig;

struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<double> eta;
    std::optional<int> threads;
    std::string out_dir = ".";
};

void apply(const Overrides &ov, ExperimentConfig &cfg)
{
    if (ov.seed)
        cfg.seed = *ov.seed;
    if (ov.trials)
        cfg.trials = *ov.trials;
    if (ov.eta)
        cfg.eta = *ov.eta;
    if (ov.threads)
        cfg.threads = *ov.threads;
}

void add_overrides(CLI::App *cmd, Overrides &ov)
{
    cmd->add_option("--seed", ov.seed, "Override the config seed");
    cmd->add_option("--trials", ov.trials, "Override the Monte-Carlo trial count");
    cmd->add_option("--eta", ov.eta, "Override the variance-correction cap parameter");
    cmd->add_option("--threads", ov.threads, "Worker threads for Monte-Carlo trials");
    cmd->add_option("--out-dir", ov.out_dir, "Directory for result CSVs")
        ->capture_default_str();
}

int run_sweep_cmd(const std::string &config_path, const Overrides &ov)
{
    ExperimentConfig cfg = fasotfs::experiment::load_config(config_path);
    apply(ov, cfg);
    cfg.validate();

    const fasotfs::experiment::SweepResult result = fasotfs::experiment::run_sweep(cfg);

    fs::create_directories(ov.out_dir);
    const fs::path out =
        fs::path(ov.out_dir) / (fs::path(config_path).stem().string() + "_sweep.csv");
    fasotfs::experiment::write_csv(result, out);

    std::printf("wrote %s (%zu rows, digest %s)\n", out.string().c_str(), result.rows.size(),
                result.digest.c_str());
    double total = 0.0;
    for (const auto &row : result.rows)
        total += row.wall_time_s;
    std::printf("total compute time %.2f s\n", total);
    return 0;
}

int run_fit_check_cmd(const std::string &config_path, const Overrides &ov)
{
    ExperimentConfig cfg = fasotfs::experiment::load_config(config_path);
    apply(ov, cfg);
    cfg.validate();

    const fasotfs::experiment::FitCheckResult result = fasotfs::experiment::fit_check(cfg);

    fs::create_directories(ov.out_dir);
    const fs::path out =
        fs::path(ov.out_dir) / (fs::path(config_path).stem().string() + "_fitcheck.csv");
    fasotfs::experiment::write_fit_check_csv(result, cfg, out);

    std::printf("wrote %s\n", out.string().c_str());
    std::printf("m1=%.6g var_uncorrected=%.6g var_corrected=%.6g var_uncapped=%.6g\n",
                result.m1_formula, result.var_uncorrected, result.var_corrected,
                result.var_uncapped);
    std::printf("KS gamma (uncorrected) = %.4f\n", result.ks_gamma_uncorrected);
    std::printf("KS gamma (corrected)   = %.4f\n", result.ks_gamma_corrected);
    std::printf("KS gamma (uncapped)    = %.4f\n", result.ks_gamma_uncapped);
    std::printf("KS gaussian            = %.4f\n", result.ks_gaussian);
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"fluid-antenna OTFS link performance sweeps"};
    app.require_subcommand(1);

    std::string config_path;
    std::vector<std::string> csv_paths;
    Overrides sweep_ov, fit_ov;

    CLI::App *sweep = app.add_subcommand("sweep", "Run a sweep described by a JSON config");
    sweep->add_option("config", config_path, "Experiment config file")->required();
    add_overrides(sweep, sweep_ov);

    CLI::App *fit = app.add_subcommand("fit-check", "Gamma/Gaussian fit quality report");
    fit->add_option("config", config_path, "Experiment config file")->required();
    add_overrides(fit, fit_ov);

    CLI::App *report = app.add_subcommand("report", "Structural checks over sweep CSVs");
    report->add_option("csv", csv_paths, "Sweep CSV files")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed())
            return run_sweep_cmd(config_path, sweep_ov);
        if (fit->parsed())
            return run_fit_check_cmd(config_path, fit_ov);
        if (report->parsed()) {
            std::vector<fs::path> paths(csv_paths.begin(), csv_paths.end());
            return fasotfs::experiment::emit_report(paths, std::cout);
        }
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
