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

#include "fasotfs/analysis_singlepath.hpp"
#include "fasotfs/gamma_fit.hpp"
#include "fasotfs/montecarlo.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fasotfs::experiment {

using nlohmann::json;

namespace {

constexpr std::uint64_t kScenarioStream = 0;

const std::set<std::string> kGeneralMethods = {
    "exact_subsets",   "envelope_indep", "envelope_comono", "refined_neff",
    "asymptotic_small", "asymptotic_large", "capacity_exact", "capacity_lower",
    "capacity_upper",  "mrc",            "mc",              "mc_capacity",
};

const std::set<std::string> kSinglepathMethods = {
    "sp_exact", "sp_quad", "sp_cap_exact", "sp_cap_quad", "mrc", "mc", "mc_capacity",
};

const std::set<std::string> kSweepParams = {"N", "W", "snr_threshold_db", "quadrature_M"};

std::string join(const std::set<std::string> &items)
{
    std::string out;
    for (const std::string &s : items) {
        if (!out.empty())
            out += ", ";
        out += s;
    }
    return out;
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

} // namespace

void ExperimentConfig::validate() const
{
    if (grid.empty())
        throw std::invalid_argument("config: sweep grid must not be empty");
    if (!std::is_sorted(grid.begin(), grid.end()))
        throw std::invalid_argument("config: sweep grid must be sorted ascending");
    if (kSweepParams.find(sweep_param) == kSweepParams.end())
        throw std::invalid_argument("config: unknown sweep param '" + sweep_param +
                                    "'; valid: " + join(kSweepParams));
    if (methods.empty())
        throw std::invalid_argument("config: methods list must not be empty");
    const std::set<std::string> &valid =
        model == Model::general ? kGeneralMethods : kSinglepathMethods;
    for (const std::string &m : methods)
        if (valid.find(m) == valid.end())
            throw std::invalid_argument("config: method '" + m + "' is not valid for this model; "
                                        "valid: " + join(valid));
    if (sweep_param == "quadrature_M" && model != Model::singlepath)
        throw std::invalid_argument("config: quadrature_M sweeps need model=singlepath");
    if (model == Model::general)
        scenario.validate();
    geometry.validate();
    if (!(eta >= 0.1 && eta <= 1.0))
        throw std::invalid_argument("config: eta must be in [0.1, 1]");
    if (trials < 1)
        throw std::invalid_argument("config: trials must be >= 1");
    if (!(snr_threshold > 0.0))
        throw std::invalid_argument("config: snr_threshold must be > 0");
    if (quadrature_m < 1 || quadrature_m > 128 || quadrature_l < 1 || quadrature_l > 128)
        throw std::invalid_argument("config: quadrature orders must be in [1, 128]");
}

namespace {

ExperimentConfig from_json(const json &j)
{
    ExperimentConfig cfg;
    const std::string model = j.value("model", "general");
    if (model == "general")
        cfg.model = Model::general;
    else if (model == "singlepath")
        cfg.model = Model::singlepath;
    else
        throw std::invalid_argument("config: model must be 'general' or 'singlepath'");

    if (j.contains("sweep")) {
        const json &sweep = j.at("sweep");
        cfg.sweep_param = sweep.value("param", "N");
        cfg.grid = sweep.value("grid", std::vector<double>{});
    }
    cfg.methods = j.value("methods", std::vector<std::string>{});

    if (j.contains("geometry")) {
        const json &g = j.at("geometry");
        cfg.geometry.num_ports = g.value("num_ports", cfg.geometry.num_ports);
        cfg.geometry.aperture_wavelengths =
            g.value("aperture_wavelengths", cfg.geometry.aperture_wavelengths);
    }

    if (j.contains("budget")) {
        const json &b = j.at("budget");
        cfg.tx_power_w = b.value("tx_power_w", cfg.tx_power_w);
        cfg.combined_gain = b.value("combined_gain", cfg.combined_gain);
        cfg.noise_psd = b.value("noise_psd", cfg.noise_psd);
        if (b.contains("snr_threshold_db"))
            cfg.snr_threshold = db_to_linear(b.at("snr_threshold_db").get<double>());
        else
            cfg.snr_threshold = b.value("snr_threshold", cfg.snr_threshold);
    }

    if (j.contains("scenario")) {
        const json &s = j.at("scenario");
        channel::ScenarioConfig &sc = cfg.scenario;
        sc.carrier_hz = s.value("carrier_hz", sc.carrier_hz);
        sc.sat_user_distance_m = s.value("sat_user_distance_m", sc.sat_user_distance_m);
        if (s.contains("sat_velocity_mps")) {
            auto v = s.at("sat_velocity_mps").get<std::vector<double>>();
            if (v.size() != 3)
                throw std::invalid_argument("config: sat_velocity_mps must have 3 entries");
            std::copy(v.begin(), v.end(), sc.sat_velocity_mps.begin());
        }
        if (s.contains("user_to_sat_unit")) {
            auto v = s.at("user_to_sat_unit").get<std::vector<double>>();
            if (v.size() != 3)
                throw std::invalid_argument("config: user_to_sat_unit must have 3 entries");
            std::copy(v.begin(), v.end(), sc.user_to_sat_unit.begin());
        }
        sc.num_clusters = s.value("num_clusters", sc.num_clusters);
        sc.excess_delay_rate = s.value("excess_delay_rate", sc.excess_delay_rate);
        sc.doppler_spread_hz = s.value("doppler_spread_hz", sc.doppler_spread_hz);
        sc.cluster_attenuations =
            s.value("cluster_attenuations", sc.cluster_attenuations);
        sc.rician_k = s.value("rician_k", sc.rician_k);
        sc.normalize_attenuations = s.value("normalize_attenuations", sc.normalize_attenuations);
        sc.arrival_angle_rad = s.value("arrival_angle_rad", sc.arrival_angle_rad);
    }

    if (j.contains("singlepath")) {
        const json &s = j.at("singlepath");
        cfg.singlepath_beta = s.value("beta", cfg.singlepath_beta);
        cfg.singlepath_rician_k = s.value("rician_k", cfg.singlepath_rician_k);
        if (s.contains("port_mu"))
            cfg.singlepath_mu = s.at("port_mu").get<double>();
    }

    if (j.contains("mrc")) {
        cfg.mrc.n_rx = j.at("mrc").value("n_rx", cfg.mrc.n_rx);
        cfg.mrc.es_over_n0 = j.at("mrc").value("es_over_n0", cfg.mrc.es_over_n0);
    }

    cfg.trials = j.value("trials", cfg.trials);
    cfg.seed = j.value("seed", cfg.seed);
    cfg.eta = j.value("eta", cfg.eta);
    const std::string fv = j.value("fit_variance", "uncorrected");
    if (fv == "uncorrected")
        cfg.fit_variance = FitVariance::uncorrected;
    else if (fv == "corrected")
        cfg.fit_variance = FitVariance::corrected;
    else
        throw std::invalid_argument("config: fit_variance must be uncorrected|corrected");
    cfg.quadrature_m = j.value("quadrature_m", cfg.quadrature_m);
    cfg.quadrature_l = j.value("quadrature_l", cfg.quadrature_l);
    cfg.threads = j.value("threads", cfg.threads);
    cfg.dump_samples = j.value("dump_samples", cfg.dump_samples);
    cfg.dump_dir = j.value("dump_dir", cfg.dump_dir);

    cfg.validate();
    return cfg;
}

json to_json(const ExperimentConfig &cfg)
{
    json j;
    j["model"] = cfg.model == Model::general ? "general" : "singlepath";
    j["sweep"] = {{"param", cfg.sweep_param}, {"grid", cfg.grid}};
    j["methods"] = cfg.methods;
    j["geometry"] = {{"num_ports", cfg.geometry.num_ports},
                     {"aperture_wavelengths", cfg.geometry.aperture_wavelengths}};
    j["budget"] = {{"tx_power_w", cfg.tx_power_w},
                   {"combined_gain", cfg.combined_gain},
                   {"noise_psd", cfg.noise_psd},
                   {"snr_threshold", cfg.snr_threshold}};
    if (cfg.model == Model::general) {
        const channel::ScenarioConfig &sc = cfg.scenario;
        j["scenario"] = {{"carrier_hz", sc.carrier_hz},
                         {"sat_user_distance_m", sc.sat_user_distance_m},
                         {"sat_velocity_mps", sc.sat_velocity_mps},
                         {"user_to_sat_unit", sc.user_to_sat_unit},
                         {"num_clusters", sc.num_clusters},
                         {"excess_delay_rate", sc.excess_delay_rate},
                         {"doppler_spread_hz", sc.doppler_spread_hz},
                         {"cluster_attenuations", sc.cluster_attenuations},
                         {"rician_k", sc.rician_k},
                         {"normalize_attenuations", sc.normalize_attenuations},
                         {"arrival_angle_rad", sc.arrival_angle_rad}};
    } else {
        j["singlepath"] = {{"beta", cfg.singlepath_beta},
                           {"rician_k", cfg.singlepath_rician_k}};
        if (cfg.singlepath_mu)
            j["singlepath"]["port_mu"] = *cfg.singlepath_mu;
    }
    j["mrc"] = {{"n_rx", cfg.mrc.n_rx}, {"es_over_n0", cfg.mrc.es_over_n0}};
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
    j["eta"] = cfg.eta;
    j["fit_variance"] = cfg.fit_variance == FitVariance::uncorrected ? "uncorrected" : "corrected";
    j["quadrature_m"] = cfg.quadrature_m;
    j["quadrature_l"] = cfg.quadrature_l;
    return j;
}

} // namespace

ExperimentConfig parse_config(const std::string &json_text)
{
    return from_json(json::parse(json_text));
}

ExperimentConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("config: cannot open " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string config_digest(const ExperimentConfig &cfg)
{
    // threads and dump flags do not affect the numbers
    const std::string canonical = to_json(cfg).dump();
    return montecarlo::digest_string(
        montecarlo::fnv1a64(canonical.data(), canonical.size()));
}

namespace {

struct PointContext {
    channel::FasGeometry geometry;
    double snr_threshold = 1.0;       // linear
    double threshold_norm = 1.0;      // gamma'_th
    double snr_scale = 1.0;           // P G / N0
    int quad_m = 20;
};

PointContext resolve_point(const ExperimentConfig &cfg, double value)
{
    PointContext pt;
    pt.geometry = cfg.geometry;
    pt.snr_threshold = cfg.snr_threshold;
    pt.quad_m = cfg.quadrature_m;
    if (cfg.sweep_param == "N") {
        const double rounded = std::round(value);
        if (std::abs(rounded - value) > 1e-9 || rounded < 1.0)
            throw std::invalid_argument("sweep: N grid values must be positive integers");
        pt.geometry.num_ports = static_cast<int>(rounded);
    } else if (cfg.sweep_param == "W") {
        pt.geometry.aperture_wavelengths = value;
    } else if (cfg.sweep_param == "snr_threshold_db") {
        pt.snr_threshold = db_to_linear(value);
    } else if (cfg.sweep_param == "quadrature_M") {
        const double rounded = std::round(value);
        if (std::abs(rounded - value) > 1e-9 || rounded < 1.0)
            throw std::invalid_argument("sweep: quadrature_M grid values must be positive integers");
        pt.quad_m = static_cast<int>(rounded);
    }
    const analysis_general::LinkBudget budget = analysis_general::normalize_threshold(
        cfg.tx_power_w, cfg.combined_gain, cfg.noise_psd, pt.snr_threshold);
    pt.threshold_norm = budget.normalized_threshold;
    pt.snr_scale = pt.snr_threshold / pt.threshold_norm;
    return pt;
}

std::string method_label(const ExperimentConfig &cfg, const PointContext &pt,
                         const std::string &method)
{
    if (method == "sp_quad")
        return "sp_quad_M" + std::to_string(pt.quad_m);
    if (method == "sp_cap_quad")
        return "sp_cap_quad_M" + std::to_string(pt.quad_m) + "_L" +
               std::to_string(cfg.quadrature_l);
    return method;
}

} // namespace

SweepResult run_sweep(const ExperimentConfig &cfg)
{
    cfg.validate();

    SweepResult result;
    result.config = cfg;
    result.digest = config_digest(cfg);

    const bool wants_mc =
        std::find(cfg.methods.begin(), cfg.methods.end(), "mc") != cfg.methods.end() ||
        std::find(cfg.methods.begin(), cfg.methods.end(), "mc_capacity") != cfg.methods.end();

    // simulation cache: threshold and quadrature-order sweeps reuse the run
    std::optional<montecarlo::SimulationRun> cached_run;
    std::pair<int, double> cached_key{-1, -1.0};

    for (std::size_t gi = 0; gi < cfg.grid.size(); ++gi) {
        const double pv = cfg.grid[gi];
        const PointContext pt = resolve_point(cfg, pv);

        // model-side state for this grid point
        std::vector<channel::ClusterParams> clusters;
        gamma_fit::GammaFit fit;
        channel::CorrelationMatrix correlation;
        double rho_avg = 0.0;
        channel::SinglePathParams sp;
        if (cfg.model == Model::general) {
            rng::Stream scen_stream(cfg.seed, kScenarioStream);
            clusters = channel::generate_scenario(cfg.scenario, pt.geometry, scen_stream);
            const int port = gamma_fit::reference_port(pt.geometry);
            const double m1 = gamma_fit::first_moment(clusters, port);
            const double var =
                cfg.fit_variance == FitVariance::uncorrected
                    ? gamma_fit::variance_uncorrelated(clusters, port)
                    : gamma_fit::variance_corrected(clusters, pt.geometry, cfg.eta, port);
            fit = gamma_fit::fit_gamma(m1, var, cfg.eta);
            correlation = channel::correlation_matrix(pt.geometry);
            rho_avg = analysis_general::average_port_correlation(correlation);
        } else {
            sp = channel::make_singlepath(cfg.singlepath_beta, cfg.singlepath_rician_k,
                                          pt.geometry);
            if (cfg.singlepath_mu)
                sp.port_mu = *cfg.singlepath_mu;
        }

        std::optional<montecarlo::SimulationRun> mc_run;
        double sim_seconds = 0.0; // charged to the first Monte-Carlo row below
        if (wants_mc) {
            const std::pair<int, double> key{pt.geometry.num_ports,
                                             pt.geometry.aperture_wavelengths};
            if (!cached_run || key != cached_key) {
                const auto t0 = std::chrono::steady_clock::now();
                cached_run = cfg.model == Model::general
                                 ? montecarlo::simulate_general(clusters, pt.geometry,
                                                                cfg.trials, cfg.seed,
                                                                cfg.threads)
                                 : montecarlo::simulate_singlepath(sp, pt.geometry, cfg.trials,
                                                                   cfg.seed, cfg.threads);
                cached_key = key;
                sim_seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                        .count();
                if (cfg.dump_samples) {
                    std::filesystem::create_directories(cfg.dump_dir);
                    char name[128];
                    std::snprintf(name, sizeof(name), "%s_%s_%g.f64",
                                  result.digest.c_str(), cfg.sweep_param.c_str(), pv);
                    montecarlo::write_samples(std::filesystem::path(cfg.dump_dir) / name,
                                              *cached_run);
                }
            }
            mc_run = *cached_run;
        }

        for (const std::string &method : cfg.methods) {
            const auto t0 = std::chrono::steady_clock::now();
            SweepRow row;
            row.param_name = cfg.sweep_param;
            row.param_value = pv;
            row.method = method_label(cfg, pt, method);
            row.seed = cfg.seed;

            const double amp_threshold = std::sqrt(pt.threshold_norm);

            double charged_sim = 0.0;
            if (method == "mc" || method == "mc_capacity") {
                charged_sim = sim_seconds;
                sim_seconds = 0.0;
            }

            if (method == "mc") {
                const montecarlo::Metrics m =
                    montecarlo::empirical_metrics(*mc_run, pt.threshold_norm, pt.snr_scale);
                row.value = m.outage;
                row.error_estimate = m.stderr_outage;
            } else if (method == "mc_capacity") {
                const montecarlo::Metrics m =
                    montecarlo::empirical_metrics(*mc_run, pt.threshold_norm, pt.snr_scale);
                row.value = m.capacity_bits;
                row.error_estimate = m.stderr_capacity;
            } else if (method == "exact_subsets") {
                row.value = analysis_general::outage_exact_subsets(correlation, fit,
                                                                   pt.threshold_norm);
            } else if (method == "envelope_indep") {
                row.value = analysis_general::outage_envelope(fit, pt.threshold_norm,
                                                              pt.geometry.num_ports, rho_avg)
                                .independent_endpoint;
            } else if (method == "envelope_comono") {
                row.value = analysis_general::outage_envelope(fit, pt.threshold_norm,
                                                              pt.geometry.num_ports, rho_avg)
                                .comonotone_endpoint;
            } else if (method == "refined_neff") {
                row.value = analysis_general::outage_envelope(fit, pt.threshold_norm,
                                                              pt.geometry.num_ports, rho_avg)
                                .refined_lower;
            } else if (method == "asymptotic_small") {
                row.value = analysis_general::outage_asymptotic(fit, pt.threshold_norm,
                                                                analysis_general::Regime::small);
            } else if (method == "asymptotic_large") {
                row.value = analysis_general::outage_asymptotic(fit, pt.threshold_norm,
                                                                analysis_general::Regime::large);
            } else if (method == "capacity_exact") {
                const auto cap = analysis_general::capacity_exact([&](double g) {
                    return std::clamp(
                        analysis_general::outage_exact_subsets(correlation, fit, g), 0.0, 1.0);
                });
                row.value = cap.bits;
                row.error_estimate = cap.error_estimate;
            } else if (method == "capacity_lower") {
                const auto cap =
                    analysis_general::capacity_bounds(fit, pt.geometry.num_ports).first;
                row.value = cap.bits;
                row.error_estimate = cap.error_estimate;
            } else if (method == "capacity_upper") {
                const auto cap =
                    analysis_general::capacity_bounds(fit, pt.geometry.num_ports).second;
                row.value = cap.bits;
                row.error_estimate = cap.error_estimate;
            } else if (method == "mrc") {
                row.value = analysis_general::mrc_outage(cfg.mrc.n_rx, cfg.mrc.es_over_n0,
                                                         std::log2(1.0 + pt.snr_threshold));
            } else if (method == "sp_exact") {
                row.value =
                    analysis_singlepath::outage_exact_numeric(sp, pt.geometry, amp_threshold);
                row.error_estimate = 1e-8;
            } else if (method == "sp_quad") {
                row.value =
                    analysis_singlepath::outage_quadrature(sp, pt.geometry, amp_threshold,
                                                           pt.quad_m);
            } else if (method == "sp_cap_exact") {
                const auto cap = analysis_singlepath::capacity_exact_numeric(sp, pt.geometry);
                row.value = cap.bits;
                row.error_estimate = cap.error_estimate;
            } else if (method == "sp_cap_quad") {
                row.value = analysis_singlepath::capacity_quadrature(sp, pt.geometry, pt.quad_m,
                                                                     cfg.quadrature_l);
            } else {
                throw std::logic_error("run_sweep: unhandled method " + method);
            }

            row.wall_time_s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() +
                charged_sim;
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

FitCheckResult fit_check(const ExperimentConfig &cfg)
{
    cfg.validate();
    if (cfg.model != Model::general)
        throw std::invalid_argument("fit_check: model must be 'general'");

    FitCheckResult out;
    out.digest = config_digest(cfg);

    rng::Stream scen_stream(cfg.seed, kScenarioStream);
    const std::vector<channel::ClusterParams> clusters =
        channel::generate_scenario(cfg.scenario, cfg.geometry, scen_stream);
    const int port = gamma_fit::reference_port(cfg.geometry);

    out.m1_formula = gamma_fit::first_moment(clusters, port);
    out.var_uncorrected = gamma_fit::variance_uncorrelated(clusters, port);
    out.var_corrected =
        gamma_fit::variance_corrected(clusters, cfg.geometry, cfg.eta, port);

    // uncapped covariance: full ordered off-diagonal J0 sum, no damping, no cap
    const int n = cfg.geometry.num_ports;
    const double adjusted = gamma_fit::covariance_adjustment(cfg.geometry);
    const double raw_sum = adjusted * (static_cast<double>(n) * n) / 2.0;
    out.var_uncapped = out.var_uncorrected + 2.0 * raw_sum * out.m1_formula * out.m1_formula;

    const montecarlo::SimulationRun run = montecarlo::simulate_general_port(
        clusters, cfg.geometry, port, cfg.trials, cfg.seed, cfg.threads);

    double mean = 0.0, sq = 0.0;
    for (double s : run.samples) {
        mean += s;
        sq += s * s;
    }
    mean /= static_cast<double>(run.samples.size());
    sq /= static_cast<double>(run.samples.size());
    const double mc_var = std::max(sq - mean * mean, 1e-300);
    out.shape_from_mc_moments = mean * mean / mc_var;

    const gamma_fit::GammaFit fit_unc =
        gamma_fit::fit_gamma(out.m1_formula, out.var_uncorrected, cfg.eta);
    const gamma_fit::GammaFit fit_cor =
        gamma_fit::fit_gamma(out.m1_formula, out.var_corrected, cfg.eta);
    const gamma_fit::GammaFit fit_raw =
        gamma_fit::fit_gamma(out.m1_formula, out.var_uncapped, cfg.eta);

    out.ks_gamma_uncorrected = gamma_fit::fit_quality(fit_unc, run.samples);
    out.ks_gamma_corrected = gamma_fit::fit_quality(fit_cor, run.samples);
    out.ks_gamma_uncapped = gamma_fit::fit_quality(fit_raw, run.samples);
    out.ks_gaussian =
        gamma_fit::gaussian_fit_quality(out.m1_formula, out.var_uncorrected, run.samples);

    // equi-quantile table of the empirical distribution
    std::vector<double> sorted = run.samples;
    std::sort(sorted.begin(), sorted.end());
    const gamma_fit::GammaFit &active =
        cfg.fit_variance == FitVariance::uncorrected ? fit_unc : fit_cor;
    const std::size_t points = std::min<std::size_t>(256, sorted.size());
    out.table.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const std::size_t idx = (i * (sorted.size() - 1)) / (points - 1);
        const double x = sorted[idx];
        out.table.push_back({x, static_cast<double>(idx + 1) / sorted.size(),
                             gamma_fit::gamma_cdf(active, x),
                             gamma_fit::gaussian_cdf(out.m1_formula, out.var_uncorrected, x)});
    }
    return out;
}

} // namespace fasotfs::experiment
