// SPDX-License-Identifier: Apache-2.0
//
// dyadcap: ergodic capacity of single-hop and dyadic Nakagami-m fading channels
// Copyright (C) 2026 The dyadcap Authors
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

#ifndef DYADCAP_RANDOM_HPP
#define DYADCAP_RANDOM_HPP

// Reproducible random streams. The engine is Philox4x32-10, a counter-based
// generator: output block i of a stream is a pure function of (key, i), so the
// sequence does not depend on platform, compiler or standard library. The
// samplers below are written out explicitly for the same reason (the
// std::*_distribution algorithms are implementation-defined).

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include "dyadcap/errors.hpp"

namespace dyadcap
{
    namespace detail
    {
        inline constexpr std::uint64_t splitmix64(std::uint64_t x)
        {
            x += 0x9E3779B97F4A7C15ull;
            x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
            x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
            return x ^ (x >> 31);
        }
    }

    /// Philox4x32-10 block function.
    inline constexpr std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> ctr,
                                                                std::array<std::uint32_t, 2> key)
    {
        constexpr std::uint32_t m0 = 0xD2511F53u;
        constexpr std::uint32_t m1 = 0xCD9E8D57u;
        constexpr std::uint32_t w0 = 0x9E3779B9u;
        constexpr std::uint32_t w1 = 0xBB67AE85u;
        for (int round = 0; round < 10; ++round)
        {
            const std::uint64_t p0 = std::uint64_t{m0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{m1} * ctr[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const auto lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
            key[0] += w0;
            key[1] += w1;
        }
        return ctr;
    }

    /// Seeded, splittable stream of random bits. Satisfies UniformRandomBitGenerator.
    ///
    /// The 64-bit seed is the Philox key. The 128-bit counter holds a 64-bit
    /// substream id (high half) and a 64-bit block index (low half); split(k)
    /// derives an independent substream deterministically from the current one.
    class RandomStream
    {
    public:
        using result_type = std::uint64_t;

        explicit RandomStream(std::uint64_t seed, std::uint64_t substream = 0) : seed_(seed), substream_(substream) {}

        static constexpr result_type min() { return 0; }
        static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

        std::uint64_t seed() const { return seed_; }
        std::uint64_t substream() const { return substream_; }

        RandomStream split(std::uint64_t k) const
        {
            return RandomStream(seed_, detail::splitmix64(substream_ ^ detail::splitmix64(k + 1)));
        }

        result_type operator()()
        {
            if (pos_ == 2)
            {
                const std::array<std::uint32_t, 4> ctr = {
                    static_cast<std::uint32_t>(block_), static_cast<std::uint32_t>(block_ >> 32),
                    static_cast<std::uint32_t>(substream_), static_cast<std::uint32_t>(substream_ >> 32)};
                const auto out = philox4x32_10(ctr, {static_cast<std::uint32_t>(seed_),
                                                     static_cast<std::uint32_t>(seed_ >> 32)});
                buffer_[0] = (std::uint64_t{out[1]} << 32) | out[0];
                buffer_[1] = (std::uint64_t{out[3]} << 32) | out[2];
                ++block_;
                pos_ = 0;
            }
            return buffer_[pos_++];
        }

        /// Uniform on the open interval (0, 1).
        double uniform()
        {
            return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
        }

        /// Standard normal by the Marsaglia polar method.
        double normal()
        {
            if (has_spare_)
            {
                has_spare_ = false;
                return spare_;
            }
            double u = 0.0;
            double v = 0.0;
            double s = 0.0;
            do
            {
                u = 2.0 * uniform() - 1.0;
                v = 2.0 * uniform() - 1.0;
                s = u * u + v * v;
            } while (s >= 1.0 || s == 0.0);
            const double f = std::sqrt(-2.0 * std::log(s) / s);
            spare_ = v * f;
            has_spare_ = true;
            return u * f;
        }

    private:
        std::uint64_t seed_;
        std::uint64_t substream_;
        std::uint64_t block_ = 0;
        std::array<std::uint64_t, 2> buffer_{};
        int pos_ = 2;
        double spare_ = 0.0;
        bool has_spare_ = false;
    };

    /// Gamma(shape, scale) variate. Marsaglia-Tsang squeeze for shape >= 1; for
    /// shape < 1 a Gamma(shape + 1) draw is multiplied by U^(1/shape).
    inline double sample_gamma(RandomStream &rng, double shape, double scale)
    {
        if (!(shape > 0.0) || !(scale > 0.0))
            throw dyadcap::domain_error("sample_gamma: shape and scale must be positive");
        if (shape < 1.0)
        {
            const double boost = std::exp(std::log(rng.uniform()) / shape);
            return sample_gamma(rng, shape + 1.0, scale) * boost;
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;)
        {
            const double x = rng.normal();
            double v = 1.0 + c * x;
            if (v <= 0.0)
                continue;
            v = v * v * v;
            const double u = rng.uniform();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2)
                return d * v * scale;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
                return d * v * scale;
        }
    }
}

#endif
