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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace fasotfs::experiment {

namespace {

struct CsvRow {
    std::string param_name;
    double param_value = 0.0;
    std::string method;
    double value = 0.0;
    double error_estimate = 0.0;
    std::string seed;
};

struct CsvFile {
    std::filesystem::path path;
    std::map<std::string, std::string> meta;
    std::vector<CsvRow> rows;
};

CsvFile parse_csv(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("report: cannot open " + path.string());

    CsvFile file;
    file.path = path;
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line[0] == '#') {
            const std::size_t eq = line.find('=');
            if (eq != std::string::npos) {
                std::string key = line.substr(1, eq - 1);
                key.erase(0, key.find_first_not_of(' '));
                key.erase(key.find_last_not_of(' ') + 1);
                file.meta[key] = line.substr(eq + 1);
            }
            continue;
        }
        if (!saw_header) {
            saw_header = true; // column header row
            continue;
        }
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ','))
            fields.push_back(field);
        if (fields.size() != 6)
            throw std::runtime_error("report: malformed row in " + path.string() + ": " + line);
        CsvRow row;
        row.param_name = fields[0];
        row.param_value = std::stod(fields[1]);
        row.method = fields[2];
        row.value = std::stod(fields[3]);
        row.error_estimate = std::stod(fields[4]);
        row.seed = fields[5];
        file.rows.push_back(std::move(row));
    }
    return file;
}

bool is_probability_method(const std::string &m)
{
    return m == "envelope_indep" || m == "envelope_comono" || m == "refined_neff" ||
           m == "mrc" || m == "mc" || m == "sp_exact" || m.rfind("sp_quad_", 0) == 0;
}

bool is_outage_method(const std::string &m)
{
    return is_probability_method(m) || m == "exact_subsets" || m == "asymptotic_small" ||
           m == "asymptotic_large";
}

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

std::map<std::string, std::map<double, CsvRow>> by_method(const CsvFile &file)
{
    std::map<std::string, std::map<double, CsvRow>> grouped;
    for (const CsvRow &row : file.rows)
        grouped[row.method][row.param_value] = row;
    return grouped;
}

std::string fmt_margin(double v)
{
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

} // namespace

int emit_report(const std::vector<std::filesystem::path> &csv_paths, std::ostream &out)
{
    if (csv_paths.empty()) {
        out << "usage: report needs at least one sweep CSV\n";
        return 2;
    }

    int failures = 0;
    // files describing the same experiment must agree on the config digest
    std::map<std::string, std::string> digest_for;
    for (const std::filesystem::path &path : csv_paths) {
        CsvFile file;
        try {
            file = parse_csv(path);
        } catch (const std::exception &e) {
            out << "FAIL  " << path.string() << "  (" << e.what() << ")\n";
            ++failures;
            continue;
        }

        if (file.meta.count("config_digest")) {
            const std::string key = file.meta["model"] + "/" + file.meta["sweep_param"] + "/" +
                                    (file.rows.empty() ? "" : file.rows.front().seed);
            auto [it, inserted] = digest_for.emplace(key, file.meta["config_digest"]);
            if (!inserted && it->second != file.meta["config_digest"]) {
                out << "FAIL  " << path.string()
                    << "  (config digest mismatch with an earlier file of the same "
                       "model/sweep/seed; refusing to mix)\n";
                ++failures;
                continue;
            }
        }

        std::vector<Check> checks;
        const std::string digest = file.meta.count("config_digest")
                                       ? file.meta.at("config_digest")
                                       : std::string();
        {
            Check c{"digest-present"};
            if (digest.empty()) {
                c.pass = false;
                c.detail = "missing config_digest metadata";
            }
            checks.push_back(c);
        }
        if (file.rows.empty()) {
            checks.push_back({"rows", false, "no data rows"});
        }

        // seeds must agree within a file (one config digest, one seed)
        {
            Check c{"single-seed"};
            for (const CsvRow &row : file.rows)
                if (row.seed != file.rows.front().seed) {
                    c.pass = false;
                    c.detail = "mixed seeds in one file";
                    break;
                }
            checks.push_back(c);
        }

        const auto grouped = by_method(file);
        const std::string param =
            file.meta.count("sweep_param") ? file.meta.at("sweep_param") : "";

        // probability range
        {
            Check c{"outage-range"};
            for (const CsvRow &row : file.rows) {
                if (is_probability_method(row.method) &&
                    (row.value < -1e-12 || row.value > 1.0 + 1e-12)) {
                    c.pass = false;
                    c.detail = row.method + " at " + fmt_margin(row.param_value) + " = " +
                               fmt_margin(row.value);
                    break;
                }
            }
            checks.push_back(c);
        }

        // monotonicity along the grid
        if (param == "N" || param == "W" || param == "snr_threshold_db") {
            const bool increasing_expected = param == "snr_threshold_db";
            for (const auto &[method, pts] : grouped) {
                if (!is_outage_method(method) || method == "asymptotic_small" ||
                    method == "asymptotic_large" || method == "exact_subsets" || pts.size() < 2)
                    continue;
                Check c{"monotone-" + method};
                const CsvRow *prev = nullptr;
                for (const auto &[pv, row] : pts) {
                    if (prev) {
                        const double slack =
                            3.0 * std::hypot(row.error_estimate, prev->error_estimate) + 1e-12;
                        const double delta = row.value - prev->value;
                        const bool ok = increasing_expected ? delta >= -slack : delta <= slack;
                        if (!ok) {
                            c.pass = false;
                            c.detail = "at " + fmt_margin(pv) + " margin " +
                                       fmt_margin(std::abs(delta) - slack);
                            break;
                        }
                    }
                    prev = &row;
                }
                checks.push_back(c);
            }
        }

        // envelope sandwich against the Monte-Carlo oracle
        if (grouped.count("mc") && grouped.count("envelope_indep") &&
            grouped.count("envelope_comono")) {
            Check c{"envelope-sandwich"};
            for (const auto &[pv, mcrow] : grouped.at("mc")) {
                if (!grouped.at("envelope_indep").count(pv) ||
                    !grouped.at("envelope_comono").count(pv))
                    continue;
                const double lo = grouped.at("envelope_indep").at(pv).value;
                const double hi = grouped.at("envelope_comono").at(pv).value;
                const double slack = 3.0 * mcrow.error_estimate;
                if (mcrow.value < lo - slack || mcrow.value > hi + slack) {
                    c.pass = false;
                    c.detail = "at " + fmt_margin(pv) + " mc=" + fmt_margin(mcrow.value) +
                               " outside [" + fmt_margin(lo) + ", " + fmt_margin(hi) + "]";
                    break;
                }
            }
            checks.push_back(c);
        }

        // refined bound between the endpoints
        if (grouped.count("refined_neff") && grouped.count("envelope_indep") &&
            grouped.count("envelope_comono")) {
            Check c{"refined-in-envelope"};
            for (const auto &[pv, row] : grouped.at("refined_neff")) {
                const double lo = grouped.at("envelope_indep").at(pv).value;
                const double hi = grouped.at("envelope_comono").at(pv).value;
                if (row.value < lo - 1e-12 || row.value > hi + 1e-12) {
                    c.pass = false;
                    c.detail = "at " + fmt_margin(pv);
                    break;
                }
            }
            checks.push_back(c);
        }

        // capacity bound ordering
        if (grouped.count("capacity_lower") && grouped.count("capacity_upper")) {
            Check c{"capacity-bounds-ordered"};
            for (const auto &[pv, lo] : grouped.at("capacity_lower")) {
                const double hi = grouped.at("capacity_upper").at(pv).value;
                if (lo.value > hi + 1e-9) {
                    c.pass = false;
                    c.detail = "at " + fmt_margin(pv) + " lower " + fmt_margin(lo.value) +
                               " > upper " + fmt_margin(hi);
                    break;
                }
            }
            checks.push_back(c);
        }

        // quadrature vs exact: converging in M, tight at the configured order
        if (grouped.count("sp_exact")) {
            for (const auto &[method, pts] : grouped) {
                if (method.rfind("sp_quad_M", 0) != 0)
                    continue;
                Check c{"quad-vs-exact-" + method};
                const int m = std::stoi(method.substr(9));
                for (const auto &[pv, row] : pts) {
                    if (!grouped.at("sp_exact").count(pv))
                        continue;
                    const double d = std::abs(row.value - grouped.at("sp_exact").at(pv).value);
                    if (m >= 20 && d > 1e-3) {
                        c.pass = false;
                        c.detail = "at " + fmt_margin(pv) + " |quad-exact| = " + fmt_margin(d);
                        break;
                    }
                }
                checks.push_back(c);
            }
        }

        bool file_pass = true;
        for (const Check &c : checks)
            file_pass = file_pass && c.pass;
        out << (file_pass ? "PASS  " : "FAIL  ") << path.string() << "\n";
        for (const Check &c : checks) {
            out << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name;
            if (!c.detail.empty())
                out << "  (" << c.detail << ")";
            out << "\n";
        }
        if (!file_pass)
            ++failures;
    }
    return failures == 0 ? 0 : 1;
}

} // namespace fasotfs::experiment
