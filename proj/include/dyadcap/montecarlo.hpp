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

#ifndef DYADCAP_MONTECARLO_HPP
#define DYADCAP_MONTECARLO_HPP

// Plain Monte Carlo estimates of the water-filling power and capacity.
//
// Samples are drawn in fixed-size blocks; block k always uses substream k of
// the seed, and block sums are merged in block order. The estimate is
// therefore a function of (channel, argument, n, seed) only, whatever the
// number of worker threads.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <thread>
#include <vector>

#include "dyadcap/channel.hpp"
#include "dyadcap/errors.hpp"
#include "dyadcap/random.hpp"
#include "dyadcap/waterfill.hpp"

namespace dyadcap
{
    struct MonteCarloEstimate
    {
        double mean = 0.0;
        double std_error = 0.0;
        std::uint64_t n = 0;
        std::uint64_t seed = 0;

        friend bool operator==(const MonteCarloEstimate &, const MonteCarloEstimate &) = default;
    };

    /// Plain sampling sees ~1e-4 of its draws above the cutoff at -40 dB.
    inline constexpr double monte_carlo_min_snr = 1e-4;
    inline constexpr std::uint64_t monte_carlo_min_samples = 10000;
    inline constexpr std::uint64_t monte_carlo_block = std::uint64_t{1} << 16;

    namespace detail
    {
        // Neumaier compensated sum.
        class CompensatedSum
        {
        public:
            void add(double x)
            {
                const double t = sum_ + x;
                if (std::abs(sum_) >= std::abs(x))
                    comp_ += (sum_ - t) + x;
                else
                    comp_ += (x - t) + sum_;
                sum_ = t;
            }
            double value() const { return sum_ + comp_; }

        private:
            double sum_ = 0.0;
            double comp_ = 0.0;
        };

        struct BlockSums
        {
            double sum = 0.0;
            double sum_sq = 0.0;
        };

        template <class Value>
        MonteCarloEstimate run_blocks(std::uint64_t n, std::uint64_t seed, unsigned workers, const Value &value)
        {
            const std::uint64_t blocks = (n + monte_carlo_block - 1) / monte_carlo_block;
            std::vector<BlockSums> partial(blocks);
            const RandomStream root(seed);

            auto work = [&](unsigned worker, unsigned stride) {
                for (std::uint64_t b = worker; b < blocks; b += stride)
                {
                    RandomStream stream = root.split(b);
                    const std::uint64_t count = std::min(monte_carlo_block, n - b * monte_carlo_block);
                    CompensatedSum s;
                    CompensatedSum s2;
                    for (std::uint64_t i = 0; i < count; ++i)
                    {
                        const double v = value(stream);
                        s.add(v);
                        s2.add(v * v);
                    }
                    partial[b] = {s.value(), s2.value()};
                }
            };

            workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(blocks)));
            if (workers == 1)
                work(0, 1);
            else
            {
                std::vector<std::jthread> pool;
                pool.reserve(workers);
                for (unsigned w = 0; w < workers; ++w)
                    pool.emplace_back(work, w, workers);
            }

            CompensatedSum total;
            CompensatedSum total_sq;
            for (const auto &p : partial)
            {
                total.add(p.sum);
                total_sq.add(p.sum_sq);
            }
            const double nn = static_cast<double>(n);
            const double mean = total.value() / nn;
            const double var = std::max(0.0, (total_sq.value() - nn * mean * mean) / (nn - 1.0));
            return {mean, std::sqrt(var / nn), n, seed};
        }

        inline void require_samples(std::uint64_t n)
        {
            if (n < monte_carlo_min_samples)
                throw sampling_error("Monte Carlo estimate needs at least 10000 samples");
        }
    }

    /// Sample mean of max(0, 1/cutoff - 1/lambda).
    inline MonteCarloEstimate estimate_power(const DyadicChannel &ch, double cutoff, std::uint64_t n,
                                             std::uint64_t seed, unsigned workers = 1)
    {
        detail::require_samples(n);
        detail::require_domain(cutoff > 0.0 && std::isfinite(cutoff), "estimate_power: cutoff must be positive");
        const double inv_cutoff = 1.0 / cutoff;
        return detail::run_blocks(n, seed, workers, [&](RandomStream &s) {
            const double lambda = sample_gain(ch, s);
            return lambda > cutoff ? inv_cutoff - 1.0 / lambda : 0.0;
        });
    }

    /// Sample mean of max(0, log(lambda / cutoff)) at the water-filling cutoff for snr.
    inline MonteCarloEstimate estimate_capacity(const DyadicChannel &ch, double snr, std::uint64_t n,
                                                std::uint64_t seed, unsigned workers = 1)
    {
        detail::require_samples(n);
        if (!(snr >= monte_carlo_min_snr))
            throw sampling_error("estimate_capacity: snr below -40 dB, tail too rare for plain sampling");
        const double cutoff = solve_cutoff(ch, snr);
        return detail::run_blocks(n, seed, workers, [&](RandomStream &s) {
            const double lambda = sample_gain(ch, s);
            return lambda > cutoff ? std::log(lambda / cutoff) : 0.0;
        });
    }
}

#endif
