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

#include "fasotfs/rng.hpp"

#include <cmath>
#include <limits>

namespace fasotfs::rng {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t &hi, std::uint32_t &lo)
{
    const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(p >> 32);
    lo = static_cast<std::uint32_t>(p);
}

inline std::array<std::uint32_t, 4> philox_round(const std::array<std::uint32_t, 4> &c,
                                                 const std::array<std::uint32_t, 2> &k)
{
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, c[0], hi0, lo0);
    mulhilo(kPhiloxM1, c[2], hi1, lo1);
    return {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
}

} // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key)
{
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kPhiloxW0;
            key[1] += kPhiloxW1;
        }
        counter = philox_round(counter, key);
    }
    return counter;
}

void Stream::refill()
{
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(counter_ & 0xffffffffu),
        static_cast<std::uint32_t>(counter_ >> 32),
        static_cast<std::uint32_t>(stream_ & 0xffffffffu),
        static_cast<std::uint32_t>(stream_ >> 32),
    };
    buffer_ = philox4x32(ctr, key_);
    ++counter_;
    available_ = 4;
}

std::uint32_t Stream::next_u32()
{
    if (available_ == 0)
        refill();
    return buffer_[4 - available_--];
}

double Stream::next_uniform()
{
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    const std::uint64_t bits = (hi << 32) | lo;
    // 53-bit mantissa, offset by half an ulp so 0 and 1 are unreachable
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

std::complex<double> Stream::next_cnormal()
{
    const double re = next_normal();
    const double im = next_normal();
    return {re * 0.70710678118654752440, im * 0.70710678118654752440};
}

double normal_icdf(double u)
{
    if (!(u > 0.0 && u < 1.0))
        return std::numeric_limits<double>::quiet_NaN();

    const bool upper = u > 0.5;
    const double p = upper ? 1.0 - u : u;

    // Hastings rational start (|err| < 4.5e-4), then Halley against
    // Phi(z) - u computed from erfc; two steps reach ~1 ulp.
    const double t = std::sqrt(-2.0 * std::log(p));
    double z = t - (2.515517 + t * (0.802853 + t * 0.010328)) /
                       (1.0 + t * (1.432788 + t * (0.189269 + t * 0.001308)));
    z = -z; // left-tail convention while iterating on p

    for (int it = 0; it < 2; ++it) {
        const double phi = 0.5 * std::erfc(-z * 0.70710678118654752440);
        const double pdf = 0.39894228040143267794 * std::exp(-0.5 * z * z);
        if (pdf <= 0.0)
            break;
        const double w = (phi - p) / pdf;
        z -= w / (1.0 + 0.5 * z * w);
    }
    return upper ? -z : z;
}

} // namespace fasotfs::rng
