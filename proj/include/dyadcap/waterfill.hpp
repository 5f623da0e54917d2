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

#ifndef DYADCAP_WATERFILL_HPP
#define DYADCAP_WATERFILL_HPP

// Full-CSI ergodic capacity under water-filling.
//
// With power policy P(lambda) = (1/lambda0 - 1/lambda)^+ the average power and
// the capacity are
//
//   SNR(lambda0) = int_{lambda0}^inf (1/lambda0 - 1/lambda) f(lambda) dlambda
//   C(lambda0)   = int_{lambda0}^inf log(lambda/lambda0) f(lambda) dlambda   [nats]
//
// SNR(lambda0) is a strictly decreasing bijection of (0, inf) onto itself, so
// the cutoff for a given SNR is found by bisection on log(lambda0).

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "dyadcap/channel.hpp"
#include "dyadcap/errors.hpp"
#include "dyadcap/quadrature.hpp"

namespace dyadcap
{
    struct WaterfillSolution
    {
        double snr = 0.0;
        double cutoff = 0.0;
        double capacity_nats = 0.0;
        bool converged = false;
        int iterations = 0;
    };

    /// Below this linear SNR (-90 dB) the cutoff tail is not trusted in double precision.
    inline constexpr double min_supported_snr = 1e-9;

    inline double nats_to_bits(double nats) { return nats / std::numbers::ln2; }
    inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
    inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

    namespace detail
    {
        inline specfun::QuadratureConfig waterfill_config()
        {
            specfun::QuadratureConfig cfg;
            cfg.rel_tol = 1e-12;
            return cfg;
        }

        inline void require_snr(double snr)
        {
            require_domain(std::isfinite(snr) && snr > 0.0, "snr must be positive and finite");
            require_domain(snr >= min_supported_snr, "snr below -90 dB is not supported");
        }

        inline constexpr double solver_rel_residual = 1e-8;
    }

    /// Average transmit power spent by water-filling with the given cutoff.
    template <GainLaw Law>
    double avg_power(const Law &law, double cutoff, const specfun::QuadratureConfig &cfg = detail::waterfill_config())
    {
        detail::require_domain(cutoff > 0.0 && std::isfinite(cutoff), "avg_power: cutoff must be positive");
        const double log_cutoff = std::log(cutoff);
        auto log_integrand = [&](double u) {
            const double gain = law.gain_of(u);
            if (!(gain > cutoff))
                return -std::numeric_limits<double>::infinity();
            return std::log(gain - cutoff) - std::log(gain) - log_cutoff + law.log_density_natural(u);
        };
        return specfun::integrate_semi_infinite_log(log_integrand, law.natural_of(cutoff), cfg, law.natural_step())
            .value();
    }

    /// Ergodic capacity, in nats per symbol, for a given cutoff.
    template <GainLaw Law>
    double capacity_at_cutoff(const Law &law, double cutoff,
                              const specfun::QuadratureConfig &cfg = detail::waterfill_config())
    {
        detail::require_domain(cutoff > 0.0 && std::isfinite(cutoff), "capacity_at_cutoff: cutoff must be positive");
        auto log_integrand = [&](double u) {
            const double gain = law.gain_of(u);
            if (!(gain > cutoff))
                return -std::numeric_limits<double>::infinity();
            return std::log(std::log1p((gain - cutoff) / cutoff)) + law.log_density_natural(u);
        };
        return specfun::integrate_semi_infinite_log(log_integrand, law.natural_of(cutoff), cfg, law.natural_step())
            .value();
    }

    /// Cutoff and capacity for the given SNR. `converged` is false if the
    /// bisection budget ran out before the power residual reached 1e-8.
    template <GainLaw Law>
    WaterfillSolution solve_waterfill(const Law &law, double snr,
                                      const specfun::QuadratureConfig &cfg = detail::waterfill_config())
    {
        detail::require_snr(snr);
        const double log_snr = std::log(snr);
        auto mismatch = [&](double log_cutoff) { return std::log(avg_power(law, std::exp(log_cutoff), cfg)) - log_snr; };

        // Seed from the low-SNR law lambda0 ~ b (1/4) log^2(1/SNR).
        const double mu_seed = snr < 1.0 ? 0.25 * std::pow(std::log(1.0 / snr), 2) : 0.0;
        const double seed =
            std::log(mu_seed > 0.05 ? law.scale() * mu_seed : law.mean() / (1.0 + snr));

        WaterfillSolution sol;
        sol.snr = snr;
        double lo = seed - 0.5;
        double hi = seed + 0.5;
        double step = 1.0;
        int expansions = 0;
        while (mismatch(lo) < 0.0)
        {
            hi = lo;
            lo -= step;
            step *= 2.0;
            if (++expansions > 60)
                throw bracket_error("solve_cutoff: cannot bracket snr " + std::to_string(snr));
        }
        while (mismatch(hi) > 0.0)
        {
            lo = hi;
            hi += step;
            step *= 2.0;
            if (++expansions > 60)
                throw bracket_error("solve_cutoff: cannot bracket snr " + std::to_string(snr));
        }

        double mid = 0.5 * (lo + hi);
        for (int it = 0; it < 200; ++it)
        {
            mid = 0.5 * (lo + hi);
            sol.iterations = it + 1;
            const double r = mismatch(mid);
            if (std::abs(r) <= 1e-12)
                break;
            if (r > 0.0)
                lo = mid;
            else
                hi = mid;
            if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(mid)))
                break;
        }
        sol.cutoff = std::exp(mid);
        const double delivered = avg_power(law, sol.cutoff, cfg);
        sol.converged = std::abs(delivered - snr) <= detail::solver_rel_residual * snr;
        sol.capacity_nats = capacity_at_cutoff(law, sol.cutoff, cfg);
        return sol;
    }

    template <GainLaw Law>
    double solve_cutoff(const Law &law, double snr)
    {
        const WaterfillSolution sol = solve_waterfill(law, snr);
        if (!sol.converged)
            throw convergence_error("solve_cutoff: power constraint not met within tolerance");
        return sol.cutoff;
    }

    inline double avg_power(const DyadicChannel &ch, double cutoff) { return avg_power(DyadicGainLaw(ch), cutoff); }
    inline double avg_power(const NakagamiParams &p, double cutoff) { return avg_power(SingleHopGainLaw(p), cutoff); }

    inline WaterfillSolution solve_waterfill(const DyadicChannel &ch, double snr)
    {
        return solve_waterfill(DyadicGainLaw(ch), snr);
    }
    inline WaterfillSolution solve_waterfill(const NakagamiParams &p, double snr)
    {
        return solve_waterfill(SingleHopGainLaw(p), snr);
    }

    inline double solve_cutoff(const DyadicChannel &ch, double snr) { return solve_cutoff(DyadicGainLaw(ch), snr); }
    inline double solve_cutoff(const NakagamiParams &p, double snr) { return solve_cutoff(SingleHopGainLaw(p), snr); }

    /// Exact full-CSI capacity of the dyadic channel, nats per symbol.
    inline double capacity_exact(const DyadicChannel &ch, double snr)
    {
        const WaterfillSolution sol = solve_waterfill(DyadicGainLaw(ch), snr);
        if (!sol.converged)
            throw convergence_error("capacity_exact: power constraint not met within tolerance");
        return sol.capacity_nats;
    }

    /// Exact full-CSI capacity of a single Nakagami-m hop, nats per symbol.
    inline double capacity_exact_single(const NakagamiParams &p, double snr)
    {
        const WaterfillSolution sol = solve_waterfill(SingleHopGainLaw(p), snr);
        if (!sol.converged)
            throw convergence_error("capacity_exact_single: power constraint not met within tolerance");
        return sol.capacity_nats;
    }
}

#endif
