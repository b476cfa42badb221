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

#ifndef FASOTFS_RNG_HPP
#define FASOTFS_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace fasotfs::rng {

/// Philox4x32-10 keyed block function. Counter-based: the value at any
/// (key, counter) is independent of call order, which is what makes
/// Monte-Carlo runs reproducible regardless of the worker count.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Inverse CDF of the unit normal on (0,1). Hastings start refined by two
/// Halley steps against erfc; ~1 ulp on [1e-300, 1-1e-16].
double normal_icdf(double u);

/// One logical stream of draws: (seed, stream) select a disjoint counter
/// block, so Stream(seed, s) produces the same sequence everywhere. Streams
/// with distinct ids never overlap (the id and the draw counter occupy
/// separate counter words).
class Stream {
  public:
    Stream(std::uint64_t seed, std::uint64_t stream_id)
        : key_{static_cast<std::uint32_t>(seed & 0xffffffffu),
               static_cast<std::uint32_t>(seed >> 32)},
          stream_(stream_id) {}

    std::uint32_t next_u32();

    /// Uniform on the open interval (0,1) with 53 usable bits.
    double next_uniform();

    /// Standard normal via inverse CDF.
    double next_normal() { return normal_icdf(next_uniform()); }

    /// CN(0,1): independent real/imaginary parts with variance 1/2 each.
    std::complex<double> next_cnormal();

    std::uint64_t seed() const
    {
        return static_cast<std::uint64_t>(key_[0]) | (static_cast<std::uint64_t>(key_[1]) << 32);
    }
    std::uint64_t stream_id() const { return stream_; }

  private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_ = 0;
    std::uint64_t counter_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int available_ = 0;
};

} // namespace fasotfs::rng

#endif
