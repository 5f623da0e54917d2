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

#ifndef DYADCAP_ASYMPTOTIC_HPP
#define DYADCAP_ASYMPTOTIC_HPP

// Low-SNR closed forms for the dyadic channel.
//
// Replacing K_nu(t) by its large-argument form sqrt(pi/(2t)) e^{-t} and keeping
// leading terms, with scaled cutoff mu0 = lambda0 / b_tr and
// K = sqrt(pi) / (Gamma(m_T) Gamma(m_R)):
//
//   C   ~ K mu0^((m_T+m_R)/2 - 5/4) e^{-2 sqrt(mu0)}
//   SNR ~ (K / b_tr) mu0^((m_T+m_R)/2 - 9/4) e^{-2 sqrt(mu0)}
//
// so C ~ mu0 b_tr SNR, and inverting the SNR map to leading order gives
// mu0 ~ (1/4) log^2(1/SNR), hence
//
//   C ~ n_T n_R (omega_T omega_R / (m_T m_R)) (SNR/4) log^2(1/SNR)   [nats].
//
// The antenna factor n_T n_R applies to this asymptote only.

#include <cmath>
#include <numbers>

#include "dyadcap/channel.hpp"
#include "dyadcap/errors.hpp"
#include "dyadcap/specfun.hpp"

namespace dyadcap
{
    class AntennaConfig
    {
    public:
        AntennaConfig() = default;
        AntennaConfig(int n_t, int n_r) : n_t_(n_t), n_r_(n_r)
        {
            detail::require_domain(n_t >= 1 && n_r >= 1, "AntennaConfig: antenna counts must be at least 1");
        }

        int n_t() const { return n_t_; }
        int n_r() const { return n_r_; }
        double gain_factor() const { return static_cast<double>(n_t_) * static_cast<double>(n_r_); }

    private:
        int n_t_ = 1;
        int n_r_ = 1;
    };

    namespace detail
    {
        inline void require_low_snr(double snr)
        {
            require_domain(snr > 0.0 && snr < 1.0, "low-SNR asymptote requires 0 < snr < 1");
        }

        // K mu0^((m_T+m_R)/2 - 9/4) e^{-2 sqrt(mu0)}, shared by both maps so that
        // their ratio is exactly mu0 b_tr up to rounding.
        inline double tail_kernel(const DyadicChannel &ch, double mu0)
        {
            const double log_k =
                0.5 * std::log(std::numbers::pi) - specfun::ln_gamma(ch.tx().m()) - specfun::ln_gamma(ch.rx().m());
            const double exponent = 0.5 * (ch.tx().m() + ch.rx().m()) - 2.25;
            return std::exp(log_k + exponent * std::log(mu0) - 2.0 * std::sqrt(mu0));
        }
    }

    /// mu0 = (1/4) log^2(1/snr).
    inline double scaled_cutoff_lowsnr(double snr)
    {
        detail::require_low_snr(snr);
        const double l = std::log(1.0 / snr);
        return 0.25 * l * l;
    }

    /// Low-SNR capacity asymptote in nats per symbol.
    inline double capacity_lowsnr(const DyadicChannel &ch, double snr, const AntennaConfig &ant = {})
    {
        return ant.gain_factor() * (scaled_cutoff_lowsnr(snr) * ch.b_tr() * snr);
    }

    /// Approximate average power for scaled cutoff mu0.
    inline double snr_of_scaled_cutoff(const DyadicChannel &ch, double mu0)
    {
        detail::require_domain(mu0 > 0.0, "snr_of_scaled_cutoff: mu0 must be positive");
        return detail::tail_kernel(ch, mu0) / ch.b_tr();
    }

    /// Approximate capacity (nats) for scaled cutoff mu0.
    inline double capacity_of_scaled_cutoff_lowsnr(const DyadicChannel &ch, double mu0)
    {
        detail::require_domain(mu0 > 0.0, "capacity_of_scaled_cutoff_lowsnr: mu0 must be positive");
        return detail::tail_kernel(ch, mu0) * mu0;
    }
}

#endif
