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

#ifndef DYADCAP_CHANNEL_HPP
#define DYADCAP_CHANNEL_HPP

// Gain statistics of Nakagami-m fading.
//
// A single hop h = alpha e^{j psi} has a Nakagami-m envelope alpha with
// parameters (m, omega), omega = E[alpha^2]; its gain alpha^2 is
// Gamma(shape m, scale omega/m). The pinhole (dyadic) channel h = h_R h_T has
// gain lambda = |h_T|^2 |h_R|^2, a product of two independent Gamma variates,
// whose density is
//
//   f(lambda) = A K_{m_R - m_T}(2 sqrt(lambda/b)) (lambda/b)^((m_T + m_R)/2 - 1),
//   b = omega_T omega_R / (m_T m_R),  A = 2 / (b Gamma(m_T) Gamma(m_R)).
//
// Phases are uniform and play no part in anything gain-based, so they are not
// represented. Neither is the per-symbol model y = h x + w: the library works in
// the normalized convention N0 = 1, where the average transmit power budget is
// SNR = S / (N0 B).
//
// Integrals over the dyadic law are carried out in the coordinate
// u = 2 sqrt(lambda/b). In u the density is
//
//   g(u) = 2 / (Gamma(m_T) Gamma(m_R)) K_nu(u) (u/2)^(m_T + m_R - 1),
//
// which is bounded at u = 0 except for a logarithmic singularity when
// m_T = m_R = 1/2, and decays like exp(-u) in the tail.

#include <cmath>
#include <concepts>
#include <numbers>
#include <vector>

#include "dyadcap/errors.hpp"
#include "dyadcap/quadrature.hpp"
#include "dyadcap/random.hpp"
#include "dyadcap/specfun.hpp"

namespace dyadcap
{
    /// Per-hop Nakagami-m parameters: severity m >= 1/2 and mean gain omega > 0.
    class NakagamiParams
    {
    public:
        NakagamiParams(double m, double omega) : m_(m), omega_(omega)
        {
            detail::require_domain(m >= 0.5, "NakagamiParams: m must be at least 1/2");
            detail::require_domain(omega > 0.0 && std::isfinite(omega), "NakagamiParams: omega must be positive");
        }

        double m() const { return m_; }
        double omega() const { return omega_; }

        friend bool operator==(const NakagamiParams &, const NakagamiParams &) = default;

    private:
        double m_;
        double omega_;
    };

    /// Source-to-pinhole hop `tx` and pinhole-to-destination hop `rx`.
    class DyadicChannel
    {
    public:
        DyadicChannel(NakagamiParams tx, NakagamiParams rx)
            : tx_(tx), rx_(rx), b_tr_(tx.omega() * rx.omega() / (tx.m() * rx.m()))
        {
        }

        static DyadicChannel symmetric(double m, double omega = 1.0)
        {
            return {NakagamiParams(m, omega), NakagamiParams(m, omega)};
        }

        const NakagamiParams &tx() const { return tx_; }
        const NakagamiParams &rx() const { return rx_; }
        double b_tr() const { return b_tr_; }
        double mean_gain() const { return tx_.omega() * rx_.omega(); }
        double bessel_order() const { return rx_.m() - tx_.m(); }

    private:
        NakagamiParams tx_;
        NakagamiParams rx_;
        double b_tr_;
    };

    namespace detail
    {
        inline specfun::QuadratureConfig distribution_config()
        {
            specfun::QuadratureConfig cfg;
            cfg.rel_tol = 1e-13;
            return cfg;
        }
    }

    /// Channel gain law as seen by the water-filling solver.
    ///
    /// `natural` is a coordinate u with gain = gain_of(u), increasing, in which
    /// the density (log_density_natural) has a tail of unit-order length scale.
    template <class L>
    concept GainLaw = requires(const L &law, double x) {
        { law.gain_of(x) } -> std::convertible_to<double>;
        { law.natural_of(x) } -> std::convertible_to<double>;
        { law.log_density_natural(x) } -> std::convertible_to<double>;
        { law.log_pdf(x) } -> std::convertible_to<double>;
        { law.mean() } -> std::convertible_to<double>;
        { law.scale() } -> std::convertible_to<double>;
        { law.natural_step() } -> std::convertible_to<double>;
    };

    /// Gain law of the dyadic channel, natural coordinate u = 2 sqrt(lambda / b_tr).
    class DyadicGainLaw
    {
    public:
        explicit DyadicGainLaw(const DyadicChannel &ch)
            : ch_(ch), order_(ch.bessel_order()), power_(ch.tx().m() + ch.rx().m() - 1.0),
              log_norm_(std::log(2.0) - specfun::ln_gamma(ch.tx().m()) - specfun::ln_gamma(ch.rx().m()))
        {
        }

        const DyadicChannel &channel() const { return ch_; }
        double scale() const { return ch_.b_tr(); }
        double mean() const { return ch_.mean_gain(); }
        double natural_step() const { return 1.0; }

        double gain_of(double u) const { return 0.25 * ch_.b_tr() * u * u; }
        double natural_of(double gain) const { return 2.0 * std::sqrt(gain / ch_.b_tr()); }

        double log_density_natural(double u) const
        {
            return log_norm_ + specfun::log_bessel_k(order_, u) + power_ * std::log(0.5 * u);
        }

        double log_pdf(double gain) const
        {
            return log_density_natural(natural_of(gain)) - 0.5 * std::log(ch_.b_tr() * gain);
        }

        double cdf(double gain, const specfun::QuadratureConfig &cfg = detail::distribution_config()) const
        {
            if (gain == 0.0)
                return 0.0;
            if (gain > mean())
                return 1.0 - sf(gain, cfg);
            auto density = [this](double u) { return std::exp(log_density_natural(u)); };
            return specfun::integrate(density, 0.0, natural_of(gain), cfg).value;
        }

        double sf(double gain, const specfun::QuadratureConfig &cfg = detail::distribution_config()) const
        {
            if (gain <= mean())
                return 1.0 - cdf(gain, cfg);
            auto log_density = [this](double u) { return log_density_natural(u); };
            return specfun::integrate_semi_infinite_log(log_density, natural_of(gain), cfg, natural_step()).value();
        }

    private:
        DyadicChannel ch_;
        double order_;
        double power_;
        double log_norm_;
    };

    /// Gain law of a single Nakagami-m hop, natural coordinate z = sqrt(m lambda / omega).
    class SingleHopGainLaw
    {
    public:
        explicit SingleHopGainLaw(const NakagamiParams &p) : p_(p), log_norm_(std::log(2.0) - specfun::ln_gamma(p.m()))
        {
        }

        const NakagamiParams &params() const { return p_; }
        double scale() const { return p_.omega() / p_.m(); }
        double mean() const { return p_.omega(); }
        double natural_step() const { return 0.5; }

        double gain_of(double z) const { return scale() * z * z; }
        double natural_of(double gain) const { return std::sqrt(gain / scale()); }

        double log_density_natural(double z) const
        {
            return log_norm_ + (2.0 * p_.m() - 1.0) * std::log(z) - z * z;
        }

        double log_pdf(double gain) const
        {
            const double y = gain / scale();
            return (p_.m() - 1.0) * std::log(y) - y - specfun::ln_gamma(p_.m()) - std::log(scale());
        }

        double cdf(double gain) const { return specfun::regularized_gamma_p(p_.m(), gain / scale()); }
        double sf(double gain) const { return specfun::regularized_gamma_q(p_.m(), gain / scale()); }

    private:
        NakagamiParams p_;
        double log_norm_;
    };

    /// Nakagami-m envelope density at r >= 0.
    inline double envelope_pdf(const NakagamiParams &p, double r)
    {
        detail::require_domain(r >= 0.0, "envelope_pdf: r must be nonnegative");
        const double m = p.m();
        const double shape_power = 2.0 * m - 1.0;
        if (r == 0.0 && shape_power > 0.0)
            return 0.0;
        const double log_r_term = shape_power == 0.0 ? 0.0 : shape_power * std::log(r);
        return std::exp(std::log(2.0) - specfun::ln_gamma(m) + m * std::log(m / p.omega()) + log_r_term -
                        m * r * r / p.omega());
    }

    /// Gamma(m, omega/m) density of the single-hop gain at g > 0.
    inline double gain_pdf_single(const NakagamiParams &p, double g)
    {
        detail::require_domain(g > 0.0, "gain_pdf_single: g must be positive");
        return std::exp(SingleHopGainLaw(p).log_pdf(g));
    }

    /// Density of the dyadic gain lambda = |h_T|^2 |h_R|^2 at lambda > 0.
    inline double gain_pdf_dyadic(const DyadicChannel &ch, double lambda)
    {
        detail::require_domain(lambda > 0.0, "gain_pdf_dyadic: lambda must be positive");
        return std::exp(DyadicGainLaw(ch).log_pdf(lambda));
    }

    /// P(lambda' <= lambda) for the dyadic gain, by quadrature of the density.
    inline double gain_cdf_dyadic(const DyadicChannel &ch, double lambda)
    {
        detail::require_domain(lambda >= 0.0, "gain_cdf_dyadic: lambda must be nonnegative");
        return DyadicGainLaw(ch).cdf(lambda);
    }

    /// P(lambda' > lambda) for the dyadic gain.
    inline double gain_sf_dyadic(const DyadicChannel &ch, double lambda)
    {
        detail::require_domain(lambda >= 0.0, "gain_sf_dyadic: lambda must be nonnegative");
        return DyadicGainLaw(ch).sf(lambda);
    }

    /// P(g <= lambda) for the single-hop gain.
    inline double gain_cdf_single(const NakagamiParams &p, double lambda)
    {
        detail::require_domain(lambda >= 0.0, "gain_cdf_single: lambda must be nonnegative");
        return SingleHopGainLaw(p).cdf(lambda);
    }

    /// One draw of the dyadic gain.
    inline double sample_gain(const DyadicChannel &ch, RandomStream &stream)
    {
        const double g_t = sample_gamma(stream, ch.tx().m(), ch.tx().omega() / ch.tx().m());
        const double g_r = sample_gamma(stream, ch.rx().m(), ch.rx().omega() / ch.rx().m());
        return g_t * g_r;
    }

    /// n independent draws of the dyadic gain.
    inline std::vector<double> sample_gain(const DyadicChannel &ch, RandomStream &stream, std::size_t n)
    {
        if (n == 0)
            throw dyadcap::domain_error("sample_gain: n must be at least 1");
        std::vector<double> out(n);
        for (auto &v : out)
            v = sample_gain(ch, stream);
        return out;
    }
}

#endif
