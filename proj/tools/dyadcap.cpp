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

// dyadcap command line tool.
//
//   dyadcap fade-cdf       CDF of the mean-normalized gain (single hop / dyadic)
//   dyadcap capacity-curve exact and low-SNR capacity over an SNR grid
//   dyadcap pdf-table      density of the dyadic gain
//   dyadcap validate       quadrature vs Monte Carlo and low-SNR trend checks
//
// Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "dyadcap/cli.hpp"

namespace
{
    using namespace dyadcap::cli;

    unsigned default_threads()
    {
        return std::max(1u, std::thread::hardware_concurrency());
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Ergodic capacity of Nakagami-m and dyadic (pinhole) fading channels"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("--output", output, "Write to FILE instead of standard output");

    // fade-cdf
    FadeCdfOptions fade;
    std::vector<double> threshold_db;
    double thr_from = -40.0, thr_to = 0.0, thr_step = 1.0;
    auto *fade_cmd = app.add_subcommand("fade-cdf", "CDF of the unit-mean channel gain at given fade thresholds");
    fade_cmd->add_option("--m", fade.m_values, "Fading severity (repeatable)");
    fade_cmd->add_option("--hops", fade.hops, "1 for single hop, 2 for dyadic (repeatable)");
    fade_cmd->add_option("--threshold-db", threshold_db, "Gain threshold in dB relative to the mean (repeatable)");
    auto *thr_from_opt = fade_cmd->add_option("--threshold-db-from", thr_from, "Range start in dB");
    auto *thr_to_opt = fade_cmd->add_option("--threshold-db-to", thr_to, "Range end in dB");
    auto *thr_step_opt = fade_cmd->add_option("--threshold-db-step", thr_step, "Range step in dB");
    fade_cmd->add_option("--output", output, "Write to FILE instead of standard output");

    // capacity-curve
    CurveOptions curve;
    curve.threads = default_threads();
    std::string units = "bits";
    auto *curve_cmd = app.add_subcommand("capacity-curve", "Exact and asymptotic capacity over an SNR grid");
    curve_cmd->add_option("--mt", curve.m_t, "Severity of the source-to-pinhole hop (or the single hop)");
    curve_cmd->add_option("--mr", curve.m_r, "Severity of the pinhole-to-destination hop");
    curve_cmd->add_option("--omega-t", curve.omega_t, "Mean gain of the source-to-pinhole hop");
    curve_cmd->add_option("--omega-r", curve.omega_r, "Mean gain of the pinhole-to-destination hop");
    curve_cmd->add_option("--snr-db-from", curve.snr_db_from, "First SNR in dB");
    curve_cmd->add_option("--snr-db-to", curve.snr_db_to, "Last SNR in dB");
    curve_cmd->add_option("--snr-db-step", curve.snr_db_step, "SNR step in dB");
    curve_cmd->add_option("--units", units, "bits or nats")->check(CLI::IsMember({"bits", "nats"}));
    curve_cmd->add_flag("--single-hop", curve.single_hop, "Single Nakagami-m hop with (mt, omega-t)");
    curve_cmd->add_option("--nt", curve.n_t, "Transmit antennas (asymptote only)");
    curve_cmd->add_option("--nr", curve.n_r, "Receive antennas (asymptote only)");
    curve_cmd->add_option("--threads", curve.threads, "Worker threads for the SNR grid");
    curve_cmd->add_option("--output", output, "Write to FILE instead of standard output");

    // pdf-table
    PdfTableOptions pdf;
    auto *pdf_cmd = app.add_subcommand("pdf-table", "Density of the dyadic gain, m_T = m_R = m, unit mean per hop");
    pdf_cmd->add_option("--m", pdf.m_values, "Fading severity (repeatable)");
    pdf_cmd->add_option("--lambda-from", pdf.lambda_from, "Smallest gain");
    pdf_cmd->add_option("--lambda-to", pdf.lambda_to, "Largest gain");
    pdf_cmd->add_option("--points", pdf.points, "Number of grid points");
    pdf_cmd->add_flag("--log-grid", pdf.log_grid, "Logarithmically spaced grid");
    pdf_cmd->add_option("--output", output, "Write to FILE instead of standard output");

    // validate
    ValidateOptions val;
    val.threads = default_threads();
    auto *val_cmd = app.add_subcommand("validate", "Quadrature vs Monte Carlo and low-SNR trend checks");
    val_cmd->add_option("--samples", val.samples, "Monte Carlo samples per estimate");
    val_cmd->add_option("--seed", val.seed, "64-bit seed");
    val_cmd->add_option("--snr-db", val.snr_db, "SNR in dB (repeatable, >= -40)");
    val_cmd->add_option("--m", val.m_values, "Fading severity (repeatable)");
    val_cmd->add_option("--threads", val.threads, "Worker threads for sampling");
    val_cmd->add_option("--output", output, "Write to FILE instead of standard output");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        std::cerr << "dyadcap: " << e.what() << "\n" << app.help();
        return exit_usage;
    }

    std::ofstream file;
    if (!output.empty())
    {
        file.open(output);
        if (!file)
        {
            std::cerr << "dyadcap: cannot open " << output << "\n";
            return exit_usage;
        }
    }
    std::ostream &out = output.empty() ? std::cout : file;

    try
    {
        if (fade_cmd->parsed())
        {
            fade.threshold_db = threshold_db;
            const bool range_given = thr_from_opt->count() || thr_to_opt->count() || thr_step_opt->count();
            if (range_given || threshold_db.empty())
                for (double v : linear_grid(thr_from, thr_to, thr_step))
                    fade.threshold_db.push_back(v);
            write_csv(out, fade_cdf_table(fade));
            return exit_ok;
        }
        if (curve_cmd->parsed())
        {
            curve.units = units == "nats" ? Units::nats : Units::bits;
            const CapacityCurve result = compute_capacity_curve(curve);
            std::cerr << describe(curve) << "\n";
            write_csv(out, to_table(result));
            for (const auto &row : result.rows)
                if (!row.error.empty())
                    std::cerr << "dyadcap: snr_db=" << format_number(row.snr_db) << ": " << row.error << "\n";
            return result.ok() ? exit_ok : exit_numerical;
        }
        if (pdf_cmd->parsed())
        {
            write_csv(out, pdf_table(pdf));
            return exit_ok;
        }
        if (val_cmd->parsed())
        {
            const ValidationReport rep = run_validation(val);
            write_report(out, rep, val);
            return rep.all_pass() ? exit_ok : exit_numerical;
        }
    }
    catch (const usage_error &e)
    {
        std::cerr << "dyadcap: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const dyadcap::domain_error &e)
    {
        std::cerr << "dyadcap: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception &e)
    {
        std::cerr << "dyadcap: numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
    return exit_usage;
}
