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

#ifndef DYADCAP_CLI_HPP
#define DYADCAP_CLI_HPP

// Table producers behind the `dyadcap` command line tool. Argument parsing
// lives in tools/dyadcap.cpp; everything here takes plain option structs and
// writes to a std::ostream so it can be driven from tests.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dyadcap/asymptotic.hpp"
#include "dyadcap/channel.hpp"
#include "dyadcap/montecarlo.hpp"
#include "dyadcap/waterfill.hpp"

namespace dyadcap::cli
{
    enum ExitCode : int
    {
        exit_ok = 0,
        exit_usage = 1,
        exit_numerical = 2,
    };

    class usage_error : public std::invalid_argument
    {
    public:
        explicit usage_error(const std::string &what) : std::invalid_argument(what) {}
    };

    /// Shortest round-trip-stable text for 10 significant digits; '.' decimal
    /// point regardless of locale.
    inline std::string format_number(double v)
    {
        char buf[64];
        const auto r = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 10);
        return std::string(buf, r.ptr);
    }

    struct Table
    {
        std::vector<std::string> header;
        std::vector<std::vector<std::string>> rows;
    };

    inline void write_csv(std::ostream &os, const Table &t)
    {
        auto line = [&os](const std::vector<std::string> &cells) {
            for (std::size_t i = 0; i < cells.size(); ++i)
                os << (i ? "," : "") << cells[i];
            os << "\n";
        };
        line(t.header);
        for (const auto &r : t.rows)
            line(r);
    }

    /// from, from + step, ... up to `to` inclusive (within 1e-9 step).
    inline std::vector<double> linear_grid(double from, double to, double step)
    {
        if (!(step > 0.0))
            throw usage_error("grid step must be positive");
        if (!(from < to))
            throw usage_error("grid start must be below its end");
        std::vector<double> out;
        for (long k = 0;; ++k)
        {
            const double v = from + static_cast<double>(k) * step;
            if (v > to + 1e-9 * step)
                break;
            out.push_back(v);
        }
        return out;
    }

    inline void check_severity(const std::vector<double> &ms)
    {
        if (ms.empty())
            throw usage_error("at least one --m value is required");
        for (double m : ms)
            if (!(m >= 0.5))
                throw usage_error("--m must be at least 0.5, got " + format_number(m));
    }

    // ------------------------------------------------------------------ fade-cdf

    struct FadeCdfOptions
    {
        std::vector<double> m_values = {0.5, 1.0, 2.0, 4.0};
        std::vector<int> hops = {1, 2};
        std::vector<double> threshold_db; // gain thresholds relative to the unit mean
    };

    /// CDF of the mean-normalized gain, one column per (hops, m) combination.
    inline Table fade_cdf_table(const FadeCdfOptions &opt)
    {
        check_severity(opt.m_values);
        if (opt.threshold_db.empty())
            throw usage_error("empty threshold range");
        if (opt.hops.empty())
            throw usage_error("at least one --hops value is required");
        for (int h : opt.hops)
            if (h != 1 && h != 2)
                throw usage_error("--hops must be 1 or 2");

        Table t;
        t.header.push_back("gain_db");
        for (int h : opt.hops)
            for (double m : opt.m_values)
                t.header.push_back("cdf_hops" + std::to_string(h) + "_m" + format_number(m));
        for (double db : opt.threshold_db)
        {
            const double gain = db_to_linear(db);
            std::vector<std::string> row{format_number(db)};
            for (int h : opt.hops)
                for (double m : opt.m_values)
                {
                    const double p = h == 1 ? gain_cdf_single(NakagamiParams(m, 1.0), gain)
                                            : gain_cdf_dyadic(DyadicChannel::symmetric(m, 1.0), gain);
                    row.push_back(format_number(p));
                }
            t.rows.push_back(std::move(row));
        }
        return t;
    }

    // ------------------------------------------------------------ capacity-curve

    enum class Units
    {
        bits,
        nats,
    };

    struct CurveOptions
    {
        double m_t = 1.0;
        double m_r = 1.0;
        double omega_t = 1.0;
        double omega_r = 1.0;
        double snr_db_from = -60.0;
        double snr_db_to = 0.0;
        double snr_db_step = 1.0;
        Units units = Units::bits;
        bool single_hop = false;
        int n_t = 1;
        int n_r = 1;
        unsigned threads = 1;
    };

    struct CurveRow
    {
        double snr_db = 0.0;
        double cutoff = 0.0;
        double capacity_exact = 0.0;
        std::optional<double> capacity_asymptotic;
        std::string error; // empty when the row solved
    };

    struct CapacityCurve
    {
        std::vector<CurveRow> rows;
        Units units = Units::bits;
        CurveOptions params;

        bool ok() const
        {
            return std::all_of(rows.begin(), rows.end(), [](const CurveRow &r) { return r.error.empty(); });
        }
    };

    inline CurveRow capacity_row(const CurveOptions &opt, double snr_db)
    {
        CurveRow row;
        row.snr_db = snr_db;
        const double snr = db_to_linear(snr_db);
        auto in_units = [&opt](double nats) { return opt.units == Units::bits ? nats_to_bits(nats) : nats; };
        try
        {
            WaterfillSolution sol;
            if (opt.single_hop)
                sol = solve_waterfill(SingleHopGainLaw(NakagamiParams(opt.m_t, opt.omega_t)), snr);
            else
            {
                const DyadicChannel ch(NakagamiParams(opt.m_t, opt.omega_t), NakagamiParams(opt.m_r, opt.omega_r));
                sol = solve_waterfill(DyadicGainLaw(ch), snr);
                if (snr_db < 0.0)
                    row.capacity_asymptotic = in_units(capacity_lowsnr(ch, snr, AntennaConfig(opt.n_t, opt.n_r)));
            }
            if (!sol.converged)
                throw convergence_error("power constraint not met");
            row.cutoff = sol.cutoff;
            row.capacity_exact = in_units(sol.capacity_nats);
        }
        catch (const std::exception &e)
        {
            row.error = e.what();
        }
        return row;
    }

    /// Exact (and, for the dyadic channel below 0 dB, asymptotic) capacity over an SNR grid.
    inline CapacityCurve compute_capacity_curve(const CurveOptions &opt)
    {
        if (!(opt.m_t >= 0.5) || !(opt.m_r >= 0.5))
            throw usage_error("--mt and --mr must be at least 0.5");
        if (!(opt.omega_t > 0.0) || !(opt.omega_r > 0.0))
            throw usage_error("--omega-t and --omega-r must be positive");
        if (opt.n_t < 1 || opt.n_r < 1)
            throw usage_error("--nt and --nr must be at least 1");
        const std::vector<double> grid = linear_grid(opt.snr_db_from, opt.snr_db_to, opt.snr_db_step);

        CapacityCurve curve;
        curve.units = opt.units;
        curve.params = opt;
        curve.rows.resize(grid.size());
        // Rows are independent; output order is by grid index regardless of completion order.
        const unsigned workers = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(grid.size())));
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    for (std::size_t i = w; i < grid.size(); i += workers)
                        curve.rows[i] = capacity_row(opt, grid[i]);
                });
        }
        return curve;
    }

    inline Table to_table(const CapacityCurve &curve)
    {
        const std::string suffix = curve.units == Units::bits ? "_bits" : "_nats";
        Table t;
        t.header = {"snr_db", "cutoff", "capacity_exact" + suffix, "capacity_asymptotic" + suffix, "status"};
        for (const auto &r : curve.rows)
        {
            if (!r.error.empty())
            {
                t.rows.push_back({format_number(r.snr_db), "", "", "", "error"});
                continue;
            }
            t.rows.push_back({format_number(r.snr_db), format_number(r.cutoff), format_number(r.capacity_exact),
                              r.capacity_asymptotic ? format_number(*r.capacity_asymptotic) : "", "ok"});
        }
        return t;
    }

    inline std::string describe(const CurveOptions &p)
    {
        std::ostringstream os;
        os << "# channel=" << (p.single_hop ? "single-hop" : "dyadic") << " mt=" << format_number(p.m_t);
        if (!p.single_hop)
            os << " mr=" << format_number(p.m_r);
        os << " omega_t=" << format_number(p.omega_t);
        if (!p.single_hop)
            os << " omega_r=" << format_number(p.omega_r) << " nt=" << p.n_t << " nr=" << p.n_r;
        os << " units=" << (p.units == Units::bits ? "bits/s/Hz" : "nats");
        return os.str();
    }

    // ----------------------------------------------------------------- pdf-table

    struct PdfTableOptions
    {
        std::vector<double> m_values = {0.5, 1.0, 2.0, 4.0};
        double lambda_from = 1e-3;
        double lambda_to = 20.0;
        int points = 200;
        bool log_grid = false;
    };

    /// Density of the dyadic gain (m_T = m_R = m, unit mean gain per hop).
    inline Table pdf_table(const PdfTableOptions &opt)
    {
        check_severity(opt.m_values);
        if (!(opt.lambda_from > 0.0) || !(opt.lambda_to > 0.0))
            throw usage_error("lambda bounds must be positive");
        if (!(opt.lambda_from < opt.lambda_to))
            throw usage_error("--lambda-from must be below --lambda-to");
        if (opt.points < 2)
            throw usage_error("--points must be at least 2");

        Table t;
        t.header.push_back("lambda");
        std::vector<DyadicGainLaw> laws;
        for (double m : opt.m_values)
        {
            t.header.push_back("pdf_m" + format_number(m));
            laws.emplace_back(DyadicChannel::symmetric(m, 1.0));
        }
        for (int i = 0; i < opt.points; ++i)
        {
            const double frac = static_cast<double>(i) / (opt.points - 1);
            const double lambda =
                opt.log_grid ? std::exp(std::log(opt.lambda_from) + frac * std::log(opt.lambda_to / opt.lambda_from))
                             : opt.lambda_from + frac * (opt.lambda_to - opt.lambda_from);
            std::vector<std::string> row{format_number(lambda)};
            for (const auto &law : laws)
                row.push_back(format_number(std::exp(law.log_pdf(lambda))));
            t.rows.push_back(std::move(row));
        }
        return t;
    }

    // ------------------------------------------------------------------ validate

    struct ValidateOptions
    {
        std::uint64_t samples = 1000000;
        std::uint64_t seed = 42;
        std::vector<double> snr_db = {-10.0, -20.0, -30.0};
        std::vector<double> m_values = {0.5, 1.0, 2.0};
        unsigned threads = 1;
    };

    struct CheckResult
    {
        std::string name;
        double measured = 0.0;
        double bound = 0.0;
        bool pass = false;
    };

    struct ValidationReport
    {
        std::vector<CheckResult> checks;
        std::vector<std::string> notes;

        bool all_pass() const
        {
            return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });
        }
    };

    inline constexpr double validation_sigmas = 3.0;
    inline const std::vector<double> trend_ladder_db = {-30.0, -50.0, -70.0};

    /// Quadrature against Monte Carlo on the (m, snr) grid, then the low-SNR trend checks.
    inline ValidationReport run_validation(const ValidateOptions &opt)
    {
        check_severity(opt.m_values);
        if (opt.snr_db.empty())
            throw usage_error("at least one --snr-db value is required");
        for (double db : opt.snr_db)
            if (!(db_to_linear(db) >= monte_carlo_min_snr))
                throw usage_error("--snr-db " + format_number(db) +
                                  " is below the -40 dB Monte Carlo floor (tail too rare for plain sampling)");

        ValidationReport rep;
        const bool sample_mc = opt.samples >= monte_carlo_min_samples;
        if (!sample_mc)
            rep.notes.push_back("WARNING insufficient samples: " + std::to_string(opt.samples) + " < " +
                                std::to_string(monte_carlo_min_samples) + ", Monte Carlo checks skipped");

        if (sample_mc)
        {
            for (double m : opt.m_values)
                for (double db : opt.snr_db)
                {
                    const DyadicChannel ch = DyadicChannel::symmetric(m);
                    const double snr = db_to_linear(db);
                    const WaterfillSolution sol = solve_waterfill(DyadicGainLaw(ch), snr);
                    const std::string tag = "m=" + format_number(m) + " snr_db=" + format_number(db);

                    const MonteCarloEstimate cap = estimate_capacity(ch, snr, opt.samples, opt.seed, opt.threads);
                    rep.checks.push_back({"capacity quad-vs-mc " + tag, std::abs(sol.capacity_nats - cap.mean),
                                          validation_sigmas * cap.std_error,
                                          std::abs(sol.capacity_nats - cap.mean) <= validation_sigmas * cap.std_error});

                    const MonteCarloEstimate pow = estimate_power(ch, sol.cutoff, opt.samples, opt.seed, opt.threads);
                    rep.checks.push_back({"power quad-vs-mc " + tag, std::abs(snr - pow.mean),
                                          validation_sigmas * pow.std_error,
                                          std::abs(snr - pow.mean) <= validation_sigmas * pow.std_error});
                }
        }

        for (double m : opt.m_values)
        {
            const DyadicChannel ch = DyadicChannel::symmetric(m);
            std::vector<double> cutoff_gap;
            std::vector<double> relation_gap;
            std::vector<double> asymptote_gap;
            for (double db : trend_ladder_db)
            {
                const double snr = db_to_linear(db);
                const WaterfillSolution sol = solve_waterfill(DyadicGainLaw(ch), snr);
                cutoff_gap.push_back(std::abs(sol.cutoff / (ch.b_tr() * scaled_cutoff_lowsnr(snr)) - 1.0));
                relation_gap.push_back(std::abs(sol.capacity_nats / (sol.cutoff * snr) - 1.0));
                asymptote_gap.push_back(std::abs(std::log(sol.capacity_nats / capacity_lowsnr(ch, snr))));
            }
            auto decreasing = [](const std::vector<double> &v) {
                return std::is_sorted(v.rbegin(), v.rend()) && std::adjacent_find(v.begin(), v.end()) == v.end();
            };
            const std::string tag = "m=" + format_number(m) + " snr_db=-30/-50/-70";
            rep.checks.push_back({"cutoff-ratio trend |lambda0/(b mu0)-1| " + tag, cutoff_gap.back(), cutoff_gap.front(),
                                  decreasing(cutoff_gap)});
            rep.checks.push_back({"capacity-cutoff trend |C/(lambda0 snr)-1| " + tag, relation_gap.back(),
                                  relation_gap.front(), decreasing(relation_gap)});
            rep.notes.push_back("INFO |ln(C_exact/C_asym)| " + tag + ": " + format_number(asymptote_gap[0]) + " " +
                                format_number(asymptote_gap[1]) + " " + format_number(asymptote_gap[2]));
        }
        return rep;
    }

    inline void write_report(std::ostream &os, const ValidationReport &rep, const ValidateOptions &opt)
    {
        os << "dyadcap validate: samples=" << opt.samples << " seed=" << opt.seed << "\n";
        for (const auto &n : rep.notes)
            if (n.rfind("WARNING", 0) == 0)
                os << n << "\n";
        for (const auto &c : rep.checks)
            os << (c.pass ? "PASS " : "FAIL ") << c.name << "  measured=" << format_number(c.measured)
               << " bound=" << format_number(c.bound) << "\n";
        for (const auto &n : rep.notes)
            if (n.rfind("WARNING", 0) != 0)
                os << n << "\n";
        const auto passed = std::count_if(rep.checks.begin(), rep.checks.end(), [](const auto &c) { return c.pass; });
        os << "summary: " << passed << "/" << rep.checks.size() << " checks passed\n";
    }
}

#endif
