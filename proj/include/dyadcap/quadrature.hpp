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

#ifndef DYADCAP_QUADRATURE_HPP
#define DYADCAP_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dyadcap/errors.hpp"

namespace dyadcap::specfun
{
    struct QuadratureConfig
    {
        double rel_tol = 1e-9;
        double abs_tol = 1e-300;
        int max_subdivisions = 2000;
        // A semi-infinite integral stops once the log-integrand has fallen this
        // far below the largest value seen so far.
        double tail_truncation_log = 40.0;

        void validate() const
        {
            if (!(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_subdivisions < 1 || !(tail_truncation_log > 0.0))
                throw dyadcap::domain_error("QuadratureConfig: invalid tolerances");
        }
    };

    struct QuadratureResult
    {
        double value = 0.0;
        double abs_error = 0.0;
        int subdivisions = 0;
    };

    // Integral in log form: the integral equals exp(log_value).
    struct LogQuadratureResult
    {
        double log_value = -std::numeric_limits<double>::infinity();
        double rel_error = 0.0;
        int subdivisions = 0;

        double value() const { return std::exp(log_value); }
    };

    namespace detail
    {
        // 21-point Kronrod rule with its embedded 10-point Gauss rule.
        inline constexpr std::array<double, 11> gk21_nodes = {
            0.995657163025808080735527280689003,
            0.973906528517171720077964012084452,
            0.930157491355708226001207180059508,
            0.865063366688984510732096688423493,
            0.780817726586416897063717578345042,
            0.679409568299024406234327365114874,
            0.562757134668604683339000099272694,
            0.433395394129247190799265943165784,
            0.294392862701460198131126603103866,
            0.148874338981631210884826001129720,
            0.0};
        inline constexpr std::array<double, 11> gk21_kronrod_weights = {
            0.011694638867371874278064396062192,
            0.032558162307964727478818972459390,
            0.054755896574351996031381300244580,
            0.075039674810919952767043140916190,
            0.093125454583697605535065465083366,
            0.109387158802297641899210590325805,
            0.123491976262065851077958109831074,
            0.134709217311473325928054001771707,
            0.142775938577060080797094273138717,
            0.147739104901338491374841515972068,
            0.149445554002916905664936468389821};
        // Gauss weights for the odd-indexed nodes above.
        inline constexpr std::array<double, 5> gk21_gauss_weights = {
            0.066671344308688137593568809893332,
            0.149451349150580593145776339657697,
            0.219086362515982043995534934228163,
            0.269266719309996355091226921569469,
            0.295524224714752870173892994651338};

        struct Segment
        {
            double a;
            double b;
            double value;
            double error;
        };

        template <class F>
        Segment gk21(F &f, double a, double b)
        {
            const double center = 0.5 * (a + b);
            const double half = 0.5 * (b - a);
            const double fc = f(center);
            double kronrod = fc * gk21_kronrod_weights[10];
            double gauss = 0.0;
            for (std::size_t i = 0; i < 10; ++i)
            {
                const double dx = half * gk21_nodes[i];
                const double pair = f(center - dx) + f(center + dx);
                kronrod += gk21_kronrod_weights[i] * pair;
                if (i % 2 == 1)
                    gauss += gk21_gauss_weights[i / 2] * pair;
            }
            kronrod *= half;
            gauss *= half;
            if (!std::isfinite(kronrod))
                throw convergence_error("quadrature: integrand is not finite on [" + std::to_string(a) + ", " +
                                        std::to_string(b) + "]");
            return {a, b, kronrod, std::abs(kronrod - gauss)};
        }

        // Globally adaptive bisection on [a, b]. `budget` is shared across calls so
        // that a panelled semi-infinite integral obeys one subdivision limit.
        template <class F>
        QuadratureResult adaptive(F &f, double a, double b, double rel_tol, double abs_tol, int &budget)
        {
            auto worse = [](const Segment &x, const Segment &y) { return x.error < y.error; };
            std::vector<Segment> heap;
            heap.push_back(gk21(f, a, b));
            double total = heap.front().value;
            double error = heap.front().error;
            int used = 0;
            while (error > std::max(abs_tol, rel_tol * std::abs(total)))
            {
                std::pop_heap(heap.begin(), heap.end(), worse);
                const Segment worst = heap.back();
                heap.pop_back();
                const double mid = 0.5 * (worst.a + worst.b);
                // Interval exhausted at double resolution: keep what we have.
                if (!(mid > worst.a && mid < worst.b))
                {
                    heap.push_back(worst);
                    std::push_heap(heap.begin(), heap.end(), worse);
                    break;
                }
                if (budget <= 0)
                    throw convergence_error("quadrature: subdivision budget exhausted");
                --budget;
                ++used;
                const Segment left = gk21(f, worst.a, mid);
                const Segment right = gk21(f, mid, worst.b);
                heap.push_back(left);
                std::push_heap(heap.begin(), heap.end(), worse);
                heap.push_back(right);
                std::push_heap(heap.begin(), heap.end(), worse);
                // Recompute from scratch to avoid drift in the running sums.
                total = 0.0;
                error = 0.0;
                for (const auto &s : heap)
                {
                    total += s.value;
                    error += s.error;
                }
            }
            return {total, error, used};
        }

        inline double log_add(double x, double y)
        {
            if (x < y)
                std::swap(x, y);
            if (y == -std::numeric_limits<double>::infinity())
                return x;
            return x + std::log1p(std::exp(y - x));
        }

        inline constexpr int max_panels = 256;
    }

    /// Adaptive Gauss-Kronrod integral of f over the finite interval [a, b].
    template <class F>
    QuadratureResult integrate(F &&f, double a, double b, const QuadratureConfig &cfg = {})
    {
        cfg.validate();
        if (a == b)
            return {};
        int budget = cfg.max_subdivisions;
        return detail::adaptive(f, a, b, cfg.rel_tol, cfg.abs_tol, budget);
    }

    /// Integral over [a, inf) of a function given by its logarithm.
    ///
    /// The half-line is cut into panels of geometrically growing width starting
    /// at `initial_step`. Each panel is integrated relative to a local reference
    /// value so that the magnitude of the integrand never matters, only its
    /// shape. Integration stops once log_f at the end of a panel has fallen
    /// cfg.tail_truncation_log below the running maximum and the last panel no
    /// longer moves the total. log_f may return -inf where the integrand vanishes.
    template <class LogF>
    LogQuadratureResult integrate_semi_infinite_log(LogF &&log_f, double a, const QuadratureConfig &cfg = {},
                                                    double initial_step = 1.0)
    {
        cfg.validate();
        if (!(initial_step > 0.0))
            throw dyadcap::domain_error("integrate_semi_infinite_log: initial step must be positive");
        constexpr double neg_inf = -std::numeric_limits<double>::infinity();

        int budget = cfg.max_subdivisions;
        LogQuadratureResult out;
        double running_max = neg_inf;
        double abs_error_scaled_log = neg_inf; // log of accumulated absolute error
        double left = a;
        double width = initial_step;

        for (int panel = 0; panel < detail::max_panels; ++panel)
        {
            const double right = left + width;
            const double mid = 0.5 * (left + right);
            double ref = std::max({log_f(mid), log_f(right), log_f(left + 0.25 * width)});
            running_max = std::max(running_max, ref);

            double panel_log = neg_inf;
            if (ref > neg_inf)
            {
                auto scaled = [&](double t) {
                    const double v = log_f(t);
                    return v == neg_inf ? 0.0 : std::exp(v - ref);
                };
                // Panels far below the running total only need absolute accuracy.
                const double abs_tol =
                    out.log_value > neg_inf ? 0.1 * cfg.rel_tol * std::exp(std::min(out.log_value - ref, 700.0))
                                            : 0.0;
                const QuadratureResult r = detail::adaptive(scaled, left, right, cfg.rel_tol, abs_tol, budget);
                out.subdivisions += r.subdivisions;
                if (r.value > 0.0)
                {
                    panel_log = ref + std::log(r.value);
                    out.log_value = detail::log_add(out.log_value, panel_log);
                }
                if (r.abs_error > 0.0)
                    abs_error_scaled_log = detail::log_add(abs_error_scaled_log, ref + std::log(r.abs_error));
            }

            const double end_log = log_f(right);
            const bool tail_cut = end_log < running_max - cfg.tail_truncation_log;
            const bool negligible = panel_log == neg_inf || panel_log < out.log_value + std::log(cfg.rel_tol) - 2.0;
            if (tail_cut && negligible && panel > 0)
            {
                out.rel_error = out.log_value > neg_inf ? std::exp(abs_error_scaled_log - out.log_value) : 0.0;
                return out;
            }
            left = right;
            width *= 2.0;
            if (!std::isfinite(left + width))
                break;
        }
        throw convergence_error("integrate_semi_infinite: integrand tail did not decay");
    }

    /// Integral over [a, inf) of an ordinary integrand.
    template <class F>
    QuadratureResult integrate_semi_infinite(F &&f, double a, const QuadratureConfig &cfg = {},
                                             double initial_step = 1.0)
    {
        cfg.validate();
        if (!(initial_step > 0.0))
            throw dyadcap::domain_error("integrate_semi_infinite: initial step must be positive");
        auto log_abs = [&](double t) {
            const double v = std::abs(f(t));
            return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
        };

        int budget = cfg.max_subdivisions;
        QuadratureResult out;
        double running_max = -std::numeric_limits<double>::infinity();
        double left = a;
        double width = initial_step;
        for (int panel = 0; panel < detail::max_panels; ++panel)
        {
            const double right = left + width;
            running_max = std::max({running_max, log_abs(0.5 * (left + right)), log_abs(right)});
            const double abs_tol = std::max(cfg.abs_tol, 0.1 * cfg.rel_tol * std::abs(out.value));
            const QuadratureResult r = detail::adaptive(f, left, right, cfg.rel_tol, abs_tol, budget);
            out.value += r.value;
            out.abs_error += r.abs_error;
            out.subdivisions += r.subdivisions;

            const bool tail_cut = log_abs(right) < running_max - cfg.tail_truncation_log;
            const bool negligible = std::abs(r.value) <= std::max(cfg.abs_tol, 1e-2 * cfg.rel_tol * std::abs(out.value));
            if (tail_cut && negligible && panel > 0)
                return out;
            left = right;
            width *= 2.0;
            if (!std::isfinite(left + width))
                break;
        }
        throw convergence_error("integrate_semi_infinite: integrand tail did not decay");
    }
}

#endif
