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

#ifndef DYADCAP_SPECFUN_HPP
#define DYADCAP_SPECFUN_HPP

// Special functions needed by the capacity integrals:
//
//   ln_gamma(x)                  log Gamma(x), x > 0
//   upper_incomplete_gamma(s,x)  Gamma(s,x) for any real s, x > 0
//   regularized_gamma_p(s,x)     P(s,x) = gamma(s,x)/Gamma(s), s > 0
//   bessel_k(nu,x)               K_nu(x), real order
//   bessel_k_scaled(nu,x)        exp(x) K_nu(x)
//
// Everything is a pure function of its arguments.

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include <tuple>

#include "dyadcap/errors.hpp"

namespace dyadcap::specfun
{
    namespace detail
    {
        inline constexpr double eps = std::numeric_limits<double>::epsilon();
        inline constexpr double tiny = 1.0e-300;
        inline constexpr int max_iter = 10000;

        // Lanczos approximation, g = 7, n = 9.
        inline constexpr std::array<double, 9> lanczos_coef = {
            0.99999999999980993227684700473478,
            676.520368121885098567009190444019,
            -1259.13921672240287047156078755283,
            771.3234287776530788486528258894,
            -176.61502916214059906584551354,
            12.507343278686904814458936853,
            -0.13857109526572011689554707,
            9.984369578019570859563e-6,
            1.50563273514931155834e-7};

        // Taylor coefficients of 1/Gamma(z) about z = 0, c[k] multiplies z^k.
        inline constexpr std::array<double, 27> rgamma_taylor = {
            0.0,
            1.0,
            0.5772156649015328606065,
            -0.655878071520253881077,
            -0.042002635034095235529,
            0.1665386113822914895017,
            -0.04219773455554433674821,
            -0.009621971527876973562115,
            0.007218943246663099542395,
            -0.001165167591859065112114,
            -0.0002152416741149509728157,
            0.0001280502823881161861532,
            -0.00002013485478078823865569,
            -0.000001250493482142670657345,
            0.000001133027231981695882374,
            -2.05633841697760710345e-7,
            6.116095104481415817862e-9,
            5.002007644469222930056e-9,
            -1.181274570487020144588e-9,
            1.043426711691100510492e-10,
            7.78226343990507125405e-12,
            -3.696805618642205708188e-12,
            5.100370287454475979015e-13,
            -2.058326053566506783222e-14,
            -5.34812253942301798237e-15,
            1.226778628238260790159e-15,
            -1.181259301697458769514e-16};

        // Temme's auxiliary functions for |mu| <= 1/2:
        //   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
        //   gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
        // Both are even in mu and regular at mu = 0, which is what keeps
        // integer orders (K_0 in particular) free of cancellation.
        inline std::pair<double, double> temme_gammas(double mu)
        {
            const double mu2 = mu * mu;
            double gam1 = 0.0;
            double gam2 = 0.0;
            double p = 1.0;
            for (std::size_t k = 1; k + 1 < rgamma_taylor.size(); k += 2)
            {
                gam2 += rgamma_taylor[k] * p;
                gam1 -= rgamma_taylor[k + 1] * p;
                p *= mu2;
            }
            return {gam1, gam2};
        }

        // K_mu(x), K_{mu+1}(x) by Temme's series, |mu| <= 1/2, 0 < x <= 2. Unscaled.
        inline std::pair<double, double> bessel_k_temme(double mu, double x)
        {
            const double x2 = 0.5 * x;
            const double pimu = std::numbers::pi * mu;
            const double fact = std::abs(pimu) < eps ? 1.0 : pimu / std::sin(pimu);
            double d = -std::log(x2);
            double e = mu * d;
            const double fact2 = std::abs(e) < eps ? 1.0 : std::sinh(e) / e;
            const auto [gam1, gam2] = temme_gammas(mu);
            const double gampl = gam2 - mu * gam1; // 1/Gamma(1+mu)
            const double gammi = gam2 + mu * gam1; // 1/Gamma(1-mu)

            double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
            double sum = ff;
            e = std::exp(e);
            double p = 0.5 * e / gampl;
            double q = 0.5 / (e * gammi);
            double c = 1.0;
            d = x2 * x2;
            double sum1 = p;
            const double mu2 = mu * mu;
            for (int i = 1; i <= max_iter; ++i)
            {
                const double fi = i;
                ff = (fi * ff + p + q) / (fi * fi - mu2);
                c *= d / fi;
                p /= fi - mu;
                q /= fi + mu;
                const double del = c * ff;
                sum += del;
                const double del1 = c * (p - fi * ff);
                sum1 += del1;
                if (std::abs(del) < std::abs(sum) * eps)
                    return {sum, sum1 * 2.0 / x};
            }
            throw convergence_error("bessel_k: Temme series did not converge");
        }

        // exp(x) K_mu(x), exp(x) K_{mu+1}(x) by Steed's continued fraction, x >= 2.
        inline std::pair<double, double> bessel_k_steed_scaled(double mu, double x)
        {
            const double mu2 = mu * mu;
            double b = 2.0 * (1.0 + x);
            double d = 1.0 / b;
            double h = d;
            double delh = d;
            double q1 = 0.0;
            double q2 = 1.0;
            const double a1 = 0.25 - mu2;
            double q = a1;
            double c = a1;
            double a = -a1;
            double s = 1.0 + q * delh;
            int i = 1;
            for (; i <= max_iter; ++i)
            {
                a -= 2.0 * i;
                c = -a * c / (i + 1.0);
                const double qnew = (q1 - b * q2) / a;
                q1 = q2;
                q2 = qnew;
                q += c * qnew;
                b += 2.0;
                d = 1.0 / (b + a * d);
                delh = (b * d - 1.0) * delh;
                h += delh;
                const double dels = q * delh;
                s += dels;
                if (std::abs(dels / s) < eps)
                    break;
            }
            if (i > max_iter)
                throw convergence_error("bessel_k: continued fraction did not converge");
            h = a1 * h;
            const double kmu = std::sqrt(std::numbers::pi / (2.0 * x)) / s;
            const double kmu1 = kmu * (mu + x + 0.5 - h) / x;
            return {kmu, kmu1};
        }

        // Returns {m, e} with e^x K_nu(x) = m * exp(e). The forward recurrence is
        // stable for K but overflows for large orders, so it is rescaled as it goes.
        inline std::pair<double, double> bessel_k_scaled_parts(double nu, double x)
        {
            nu = std::abs(nu);
            const int nl = static_cast<int>(nu + 0.5);
            const double mu = nu - nl;

            double kmu = 0.0;
            double kmu1 = 0.0;
            if (x < 2.0)
            {
                std::tie(kmu, kmu1) = bessel_k_temme(mu, x);
                const double ex = std::exp(x);
                kmu *= ex;
                kmu1 *= ex;
            }
            else
                std::tie(kmu, kmu1) = bessel_k_steed_scaled(mu, x);

            constexpr double big = 0x1p+600;
            constexpr double log_big = 600.0 * std::numbers::ln2;
            double log_scale = 0.0;
            const double xi2 = 2.0 / x;
            for (int i = 1; i <= nl; ++i)
            {
                const double next = (mu + i) * xi2 * kmu1 + kmu;
                kmu = kmu1;
                kmu1 = next;
                if (kmu1 > big)
                {
                    kmu /= big;
                    kmu1 /= big;
                    log_scale += log_big;
                }
            }
            return {kmu, log_scale};
        }

        inline double bessel_k_impl(double nu, double x, bool scaled)
        {
            const auto [m, e] = bessel_k_scaled_parts(nu, x);
            return scaled ? m * std::exp(e) : m * std::exp(e - x);
        }

        // Legendre continued fraction for Gamma(s,x), modified Lentz. Any real s,
        // converges quickly once x >= 1 and s < x + 1.
        inline double upper_gamma_cf(double s, double x)
        {
            double b = x + 1.0 - s;
            double c = 1.0 / tiny;
            double d = 1.0 / b;
            double h = d;
            for (int i = 1; i <= max_iter; ++i)
            {
                const double an = -i * (i - s);
                b += 2.0;
                d = an * d + b;
                if (std::abs(d) < tiny)
                    d = tiny;
                c = b + an / c;
                if (std::abs(c) < tiny)
                    c = tiny;
                d = 1.0 / d;
                const double del = d * c;
                h *= del;
                if (std::abs(del - 1.0) < eps)
                    return std::exp(-x + s * std::log(x)) * h;
            }
            throw convergence_error("upper_incomplete_gamma: continued fraction did not converge");
        }

        // Series sum_{n>=0} x^n / (s (s+1) ... (s+n)), s > 0.
        inline double lower_gamma_series_sum(double s, double x)
        {
            double ap = s;
            double del = 1.0 / s;
            double sum = del;
            for (int n = 1; n <= max_iter; ++n)
            {
                ap += 1.0;
                del *= x / ap;
                sum += del;
                if (std::abs(del) < std::abs(sum) * eps)
                    return sum;
            }
            throw convergence_error("incomplete gamma: series did not converge");
        }

        // (1 - x^c)/c, continuous through c = 0 where it equals -log(x).
        inline double power_integral(double c, double log_x)
        {
            if (c == 0.0)
                return -log_x;
            return -std::expm1(c * log_x) / c;
        }
    }

    /// Natural logarithm of the Gamma function for x > 0.
    inline double ln_gamma(double x)
    {
        dyadcap::detail::require_domain(x > 0.0, "ln_gamma: x must be positive");
        if (x == 1.0 || x == 2.0)
            return 0.0;
        if (x < 0.5)
            return ln_gamma(x + 1.0) - std::log(x);
        const double z = x - 1.0;
        double series = detail::lanczos_coef[0];
        for (std::size_t i = 1; i < detail::lanczos_coef.size(); ++i)
            series += detail::lanczos_coef[i] / (z + static_cast<double>(i));
        const double t = z + 7.5;
        return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t + std::log(series);
    }

    /// Upper incomplete gamma Gamma(s, x) = int_x^inf t^(s-1) e^(-t) dt for real s and x > 0.
    ///
    /// Three regimes. For x >= 1 and s < x + 1 the Legendre continued fraction is
    /// used directly. For s >= x + 1 the complement of the lower series is
    /// well conditioned. For x < 1 and s < x + 1 (this covers every negative
    /// order) the integral is split at t = 1 and the piece over [x, 1] is
    /// expanded term by term in e^(-t), each term being (1 - x^c)/c.
    inline double upper_incomplete_gamma(double s, double x)
    {
        dyadcap::detail::require_domain(x > 0.0, "upper_incomplete_gamma: x must be positive");
        if (s >= x + 1.0)
        {
            const double lower =
                std::exp(-x + s * std::log(x) - ln_gamma(s)) * detail::lower_gamma_series_sum(s, x);
            return std::exp(ln_gamma(s)) * (1.0 - lower);
        }
        if (x >= 1.0)
            return detail::upper_gamma_cf(s, x);

        const double log_x = std::log(x);
        double sum = 0.0;
        double inv_factorial = 1.0;
        for (int n = 0; n <= detail::max_iter; ++n)
        {
            const double term = inv_factorial * detail::power_integral(s + n, log_x);
            sum += (n % 2 == 0) ? term : -term;
            if (n > 2 && std::abs(term) < std::abs(sum) * detail::eps)
                return detail::upper_gamma_cf(s, 1.0) + sum;
            inv_factorial /= n + 1.0;
        }
        throw convergence_error("upper_incomplete_gamma: split series did not converge");
    }

    /// Regularized lower incomplete gamma P(s, x) for s > 0, x >= 0.
    inline double regularized_gamma_p(double s, double x)
    {
        dyadcap::detail::require_domain(s > 0.0, "regularized_gamma_p: s must be positive");
        dyadcap::detail::require_domain(x >= 0.0, "regularized_gamma_p: x must be nonnegative");
        if (x == 0.0)
            return 0.0;
        const double log_prefactor = -x + s * std::log(x) - ln_gamma(s);
        if (x < s + 1.0)
            return std::exp(log_prefactor) * detail::lower_gamma_series_sum(s, x);
        return 1.0 - std::exp(-ln_gamma(s)) * detail::upper_gamma_cf(s, x);
    }

    /// Regularized upper incomplete gamma Q(s, x) = 1 - P(s, x) for s > 0, x >= 0.
    inline double regularized_gamma_q(double s, double x)
    {
        dyadcap::detail::require_domain(s > 0.0, "regularized_gamma_q: s must be positive");
        dyadcap::detail::require_domain(x >= 0.0, "regularized_gamma_q: x must be nonnegative");
        if (x == 0.0)
            return 1.0;
        if (x < s + 1.0)
            return 1.0 - regularized_gamma_p(s, x);
        return std::exp(-ln_gamma(s)) * detail::upper_gamma_cf(s, x);
    }

    /// Modified Bessel function of the second kind K_nu(x), real nu, x > 0.
    inline double bessel_k(double nu, double x)
    {
        dyadcap::detail::require_domain(x > 0.0, "bessel_k: x must be positive");
        return detail::bessel_k_impl(nu, x, false);
    }

    /// exp(x) K_nu(x). Finite for any x > 0 that does not overflow the small-x side.
    inline double bessel_k_scaled(double nu, double x)
    {
        dyadcap::detail::require_domain(x > 0.0, "bessel_k_scaled: x must be positive");
        return detail::bessel_k_impl(nu, x, true);
    }

    /// log K_nu(x), usable far past the point where K_nu(x) underflows.
    inline double log_bessel_k(double nu, double x)
    {
        dyadcap::detail::require_domain(x > 0.0, "log_bessel_k: x must be positive");
        const auto [m, e] = detail::bessel_k_scaled_parts(nu, x);
        return std::log(m) + e - x;
    }
}

#endif
