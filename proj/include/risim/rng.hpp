// SPDX-License-Identifier: Apache-2.0
//
// risim - spectral/energy efficiency simulation and design toolkit for
// block-controlled reconfigurable intelligent surfaces
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

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace risim::rng {

/// SplitMix64 finalizer. Bijective 64-bit avalanche mix.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// SplitMix64 sequence generator, used only to expand seeds into state words.
struct SplitMix64 {
    std::uint64_t state;

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

/// xoshiro256++ with splittable per-stream seeding.
///
/// Stream k of a 64-bit master seed s is initialized from
/// SplitMix64(mix64(s + k * 0x9E3779B97F4A7C15)), expanded to the four state
/// words. Distinct (seed, stream) pairs therefore give statistically
/// independent sequences, which is what the Monte Carlo engine relies on for
/// reproducible parallel trials (one stream per trial index).
///
/// Uniform doubles take the top 53 bits of the output word; Gaussian variates
/// use the Box-Muller transform written out below, so sequences are fully
/// determined by (seed, stream) and the floating-point library in use.
class Xoshiro256pp {
  public:
    explicit Xoshiro256pp(std::uint64_t seed) noexcept {
        SplitMix64 sm{mix64(seed)};
        for (auto& w : state_) w = sm.next();
    }

    /// Independent stream for a (seed, stream-index) pair.
    static Xoshiro256pp for_stream(std::uint64_t seed, std::uint64_t stream) noexcept {
        Xoshiro256pp g(0);
        SplitMix64 sm{mix64(seed + stream * 0x9E3779B97F4A7C15ULL)};
        for (auto& w : g.state_) w = sm.next();
        return g;
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) noexcept {
        return lo + (hi - lo) * uniform01();
    }

    /// Two independent N(0,1) variates (Box-Muller).
    std::array<double, 2> normal_pair() noexcept {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log1p(-u1));  // 1-u1 in (0,1]
        const double a = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

    /// Circularly-symmetric complex Gaussian CN(0,1): real and imaginary
    /// parts are each N(0, 1/2), so E|z|^2 = 1.
    std::complex<double> cnormal() noexcept {
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-std::log1p(-u1));
        const double a = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace risim::rng
