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

#include "fasotfs/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace fasotfs::montecarlo {

namespace {

constexpr char kMagic[8] = {'F', 'A', 'S', 'O', 'T', 'F', 'S', '1'};
// stream 0 is reserved for generate_scenario; trials use 1 + trial index
constexpr std::uint64_t kTrialStreamBase = 1;

static_assert(std::endian::native == std::endian::little,
              "sample dump assumes a little-endian host");

void append_double(std::string &buf, double v)
{
    char raw[sizeof(double)];
    std::memcpy(raw, &v, sizeof(double));
    buf.append(raw, sizeof(double));
}

std::string general_blob(const std::vector<channel::ClusterParams> &clusters,
                         const channel::FasGeometry &geom)
{
    std::string buf = "general";
    append_double(buf, geom.num_ports);
    append_double(buf, geom.aperture_wavelengths);
    for (const channel::ClusterParams &c : clusters) {
        append_double(buf, c.tap_gain);
        append_double(buf, c.delay_s);
        append_double(buf, c.doppler_hz);
        append_double(buf, c.diffuse_variance);
        for (const std::complex<double> &m : c.specular_means) {
            append_double(buf, m.real());
            append_double(buf, m.imag());
        }
    }
    return buf;
}

std::string singlepath_blob(const channel::SinglePathParams &params,
                            const channel::FasGeometry &geom)
{
    std::string buf = "singlepath";
    append_double(buf, geom.num_ports);
    append_double(buf, geom.aperture_wavelengths);
    append_double(buf, params.beta);
    append_double(buf, params.rician_k);
    append_double(buf, params.port_mu);
    for (const std::complex<double> &a : params.specular_per_port) {
        append_double(buf, a.real());
        append_double(buf, a.imag());
    }
    return buf;
}

template <class TrialFn>
void run_trials(std::uint64_t trials, int threads, TrialFn &&trial_fn)
{
    threads = std::max(1, threads);
    if (threads == 1 || trials < 4096) {
        for (std::uint64_t t = 0; t < trials; ++t)
            trial_fn(t);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    constexpr std::uint64_t block = 8192;
    auto worker = [&]() {
        for (;;) {
            const std::uint64_t start = next.fetch_add(block);
            if (start >= trials)
                return;
            const std::uint64_t stop = std::min(trials, start + block);
            for (std::uint64_t t = start; t < stop; ++t)
                trial_fn(t);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i)
        pool.emplace_back(worker);
    for (std::thread &th : pool)
        th.join();
}

} // namespace

PsdFactor psd_factor(const channel::CorrelationMatrix &correlation)
{
    const linalg::PsdProjection proj = linalg::psd_project(correlation.entries);
    return {proj.factor, proj.clipped_eigenvalues, proj.reconstruction_error};
}

SimulationRun simulate_general(const std::vector<channel::ClusterParams> &clusters,
                               const channel::FasGeometry &geom, std::uint64_t trials,
                               std::uint64_t seed, int threads)
{
    if (trials < 1)
        throw std::invalid_argument("simulate_general: trials must be >= 1");
    geom.validate();

    const channel::CorrelationMatrix correlation = channel::correlation_matrix(geom);
    const PsdFactor factor = psd_factor(correlation);

    SimulationRun run;
    run.seed = seed;
    run.trials = trials;
    run.samples.resize(trials);
    const std::string blob = general_blob(clusters, geom);
    run.config_digest = digest_string(fnv1a64(blob.data(), blob.size()));

    run_trials(trials, threads, [&](std::uint64_t t) {
        rng::Stream stream(seed, kTrialStreamBase + t);
        const channel::ChannelRealization r =
            channel::realize_channel(clusters, factor.factor, stream);
        run.samples[t] = *std::max_element(r.per_port_power.begin(), r.per_port_power.end());
    });
    return run;
}

SimulationRun simulate_singlepath(const channel::SinglePathParams &params,
                                  const channel::FasGeometry &geom, std::uint64_t trials,
                                  std::uint64_t seed, int threads)
{
    if (trials < 1)
        throw std::invalid_argument("simulate_singlepath: trials must be >= 1");
    params.validate();
    geom.validate();

    SimulationRun run;
    run.seed = seed;
    run.trials = trials;
    run.samples.resize(trials);
    const std::string blob = singlepath_blob(params, geom);
    run.config_digest = digest_string(fnv1a64(blob.data(), blob.size()));

    run_trials(trials, threads, [&](std::uint64_t t) {
        rng::Stream stream(seed, kTrialStreamBase + t);
        const channel::ChannelRealization r = channel::realize_singlepath(params, geom, stream);
        run.samples[t] = *std::max_element(r.per_port_power.begin(), r.per_port_power.end());
    });
    return run;
}

SimulationRun simulate_general_port(const std::vector<channel::ClusterParams> &clusters,
                                    const channel::FasGeometry &geom, int port,
                                    std::uint64_t trials, std::uint64_t seed, int threads)
{
    if (trials < 1)
        throw std::invalid_argument("simulate_general_port: trials must be >= 1");
    if (port < 1 || port > geom.num_ports)
        throw std::invalid_argument("simulate_general_port: port out of range");
    geom.validate();

    const channel::CorrelationMatrix correlation = channel::correlation_matrix(geom);
    const PsdFactor factor = psd_factor(correlation);

    SimulationRun run;
    run.seed = seed;
    run.trials = trials;
    run.samples.resize(trials);
    const std::string blob = general_blob(clusters, geom) + "@port";
    run.config_digest = digest_string(fnv1a64(blob.data(), blob.size()));

    run_trials(trials, threads, [&](std::uint64_t t) {
        rng::Stream stream(seed, kTrialStreamBase + t);
        const channel::ChannelRealization r =
            channel::realize_channel(clusters, factor.factor, stream);
        run.samples[t] = r.per_port_power[port - 1];
    });
    return run;
}

Metrics empirical_metrics(const SimulationRun &run, double threshold_norm, double snr_scale)
{
    if (run.samples.empty())
        throw std::invalid_argument("empirical_metrics: empty run");
    const double n = static_cast<double>(run.samples.size());

    std::uint64_t below = 0;
    double cap_sum = 0.0;
    double cap_sq = 0.0;
    for (double s : run.samples) {
        if (s < threshold_norm)
            ++below;
        const double c = std::log2(1.0 + snr_scale * s);
        cap_sum += c;
        cap_sq += c * c;
    }

    Metrics m;
    m.outage = below / n;
    m.capacity_bits = cap_sum / n;
    m.stderr_outage = std::sqrt(std::max(0.0, m.outage * (1.0 - m.outage) / n));
    const double var = std::max(0.0, cap_sq / n - m.capacity_bits * m.capacity_bits);
    m.stderr_capacity = std::sqrt(var / n);
    return m;
}

void write_samples(const std::filesystem::path &path, const SimulationRun &run)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("write_samples: cannot open " + path.string());
    out.write(kMagic, sizeof(kMagic));
    out.write(reinterpret_cast<const char *>(run.samples.data()),
              static_cast<std::streamsize>(run.samples.size() * sizeof(double)));
    if (!out)
        throw std::runtime_error("write_samples: short write to " + path.string());

    std::ofstream meta(path.string() + ".meta.txt", std::ios::trunc);
    meta << "seed=" << run.seed << "\n"
         << "trials=" << run.trials << "\n"
         << "config_digest=" << run.config_digest << "\n";
}

SimulationRun read_samples(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("read_samples: cannot open " + path.string());
    char magic[8];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
        throw std::runtime_error("read_samples: bad magic in " + path.string());

    SimulationRun run;
    in.seekg(0, std::ios::end);
    const std::streamoff bytes = in.tellg() - static_cast<std::streamoff>(sizeof(kMagic));
    if (bytes < 0 || bytes % sizeof(double) != 0)
        throw std::runtime_error("read_samples: truncated payload in " + path.string());
    run.samples.resize(static_cast<std::size_t>(bytes) / sizeof(double));
    in.seekg(sizeof(kMagic), std::ios::beg);
    in.read(reinterpret_cast<char *>(run.samples.data()), bytes);
    run.trials = run.samples.size();

    std::ifstream meta(path.string() + ".meta.txt");
    std::string line;
    while (std::getline(meta, line)) {
        if (line.rfind("seed=", 0) == 0)
            run.seed = std::stoull(line.substr(5));
        else if (line.rfind("config_digest=", 0) == 0)
            run.config_digest = line.substr(14);
    }
    return run;
}

std::uint64_t fnv1a64(const void *data, std::size_t size, std::uint64_t basis)
{
    const auto *bytes = static_cast<const unsigned char *>(data);
    std::uint64_t h = basis;
    for (std::size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_string(std::uint64_t h)
{
    static const char *hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = hex[h & 0xf];
        h >>= 4;
    }
    return s;
}

} // namespace fasotfs::montecarlo
