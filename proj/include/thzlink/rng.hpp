// thzlink - link-level Monte Carlo simulator for multi-carrier THz wireless links
// Copyright (C) 2026 thzlink contributors
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

#pragma once

#include <cmath>
#include <cstdint>

namespace thz {

// Counter-based per-trial random stream. The state sequence is a fixed
// arithmetic progression (SplitMix64), so draw i of stream (seed, stream_id)
// is a pure function of (seed, stream_id, i). Two streams with distinct ids
// never collide, and results do not depend on how trials are partitioned
// across workers.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
        : state_(mix(mix(seed + kGolden) ^ mix(stream_id + kGolden2))) {}

    std::uint64_t next_u64() noexcept {
        state_ += kGolden;
        return mix(state_);
    }

    // Uniform on (0, 1); never returns 0, so logs are safe.
    double uniform() noexcept {
        const std::uint64_t bits = next_u64() >> 11;  // 53 bits
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; pairs are cached.
    double normal() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    double normal(double mean, double stddev) noexcept {
        return mean + stddev * normal();
    }

private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kGolden2 = 0xD1B54A32D192ED03ULL;

    static std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

// Gamma(shape, scale) by Marsaglia-Tsang squeeze; shape < 1 handled by the
// boost relation Gamma(a) = Gamma(a+1) * U^{1/a}.
double sample_gamma(double shape, double scale, RandomStream& rng);

}  // namespace thz
