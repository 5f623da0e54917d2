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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "dyadcap/montecarlo.hpp"
#include "dyadcap/waterfill.hpp"
#include "fixtures.hpp"

using namespace dyadcap;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("unit conversions", "[waterfill]")
{
    CHECK(nats_to_bits(std::numbers::ln2) == 1.0);
    CHECK_THAT(db_to_linear(-30.0), WithinRel(1e-3, 1e-15));
    CHECK_THAT(linear_to_db(1e-3), WithinRel(-30.0, 1e-15));
}

TEST_CASE("avg_power examples", "[waterfill]")
{
    const auto ch = DyadicChannel::symmetric(1.0);
    CHECK(avg_power(ch, 1e4 * ch.b_tr()) < 1e-12);
    CHECK(avg_power(ch, 1e4 * ch.b_tr()) > 0.0);
    CHECK_THAT(avg_power(ch, 1.0), WithinRel(fixtures::dyadic_power_m1_cutoff1, 1e-9));
    CHECK(avg_power(ch, 0.5) > avg_power(ch, 1.0));
    CHECK(avg_power(ch, 1.0) > avg_power(ch, 2.0));
    CHECK_THROWS_AS(avg_power(ch, 0.0), domain_error);

    // Rayleigh hop: e^{-1} - E_1(1).
    CHECK_THAT(avg_power(NakagamiParams(1.0, 1.0), 1.0), WithinRel(fixtures::single_power_m1_cutoff1, 1e-9));
}

TEST_CASE("avg_power at cutoff 1 agrees with Monte Carlo", "[waterfill][mc]")
{
    const auto ch = DyadicChannel::symmetric(1.0);
    const auto mc = estimate_power(ch, 1.0, 10'000'000, 2024);
    CHECK(std::abs(mc.mean - avg_power(ch, 1.0)) <= 3.0 * mc.std_error);
}

TEST_CASE("avg_power is strictly decreasing over a wide cutoff range", "[waterfill]")
{
    for (double m : {0.5, 1.0, 4.0})
    {
        const DyadicChannel ch(NakagamiParams(m, 2.0), NakagamiParams(1.0, 0.5));
        double prev = INFINITY;
        for (double c = 1e-4; c < 1e3; c *= 2.0)
        {
            const double p = avg_power(ch, c);
            INFO("m=" << m << " cutoff=" << c);
            CHECK(p > 0.0);
            CHECK(p < prev);
            prev = p;
        }
    }
}

TEST_CASE("solve_cutoff round trip and monotonicity", "[waterfill]")
{
    for (double m : {0.5, 1.0, 2.0})
    {
        const auto ch = DyadicChannel::symmetric(m);
        double prev = INFINITY;
        for (double s : {1e-5, 1e-3, 1e-1})
        {
            const double c = solve_cutoff(ch, s);
            CHECK_THAT(avg_power(ch, c), WithinRel(s, 1e-8));
            CHECK(c < prev);
            prev = c;
        }
    }
}

TEST_CASE("round trip over 12 log-spaced SNRs in [-80, 0] dB", "[waterfill]")
{
    const DyadicChannel ch(NakagamiParams(0.5, 1.0), NakagamiParams(2.0, 3.0));
    const NakagamiParams single(0.5, 1.0);
    for (int i = 0; i < 12; ++i)
    {
        const double snr = db_to_linear(-80.0 + 80.0 * i / 11.0);
        INFO("snr=" << snr);
        const WaterfillSolution sol = solve_waterfill(ch, snr);
        CHECK(sol.converged);
        CHECK(sol.iterations <= 60);
        CHECK_THAT(avg_power(ch, sol.cutoff), WithinRel(snr, 1e-8));
        CHECK(sol.capacity_nats >= 0.0);
        CHECK_THAT(avg_power(single, solve_cutoff(single, snr)), WithinRel(snr, 1e-8));
    }
}

TEST_CASE("solver input domain", "[waterfill]")
{
    const auto ch = DyadicChannel::symmetric(1.0);
    CHECK_THROWS_AS(solve_cutoff(ch, 0.0), domain_error);
    CHECK_THROWS_AS(solve_cutoff(ch, -1.0), domain_error);
    CHECK_THROWS_AS(solve_cutoff(ch, 0.5 * min_supported_snr), domain_error);
    CHECK_NOTHROW(solve_cutoff(ch, min_supported_snr));
    CHECK_NOTHROW(solve_cutoff(ch, 100.0));
}

TEST_CASE("low-SNR cutoff scaling approaches the log-squared law", "[waterfill]")
{
    const auto ch = DyadicChannel::symmetric(1.0);
    auto gap = [&](double db) {
        const double snr = db_to_linear(db);
        const double l = std::log(1.0 / snr);
        return std::abs(solve_cutoff(ch, snr) / ch.b_tr() / (0.25 * l * l) - 1.0);
    };
    CHECK(gap(-70.0) < gap(-30.0));
}

TEST_CASE("exact capacities at -30 dB for Rayleigh and double Rayleigh", "[waterfill]")
{
    const double snr = 1e-3;
    const auto dy = solve_waterfill(DyadicChannel::symmetric(1.0), snr);
    const auto sh = solve_waterfill(NakagamiParams(1.0, 1.0), snr);
    CHECK_THAT(dy.cutoff, WithinRel(fixtures::dyadic_cutoff_m1_m30db, 1e-8));
    CHECK_THAT(dy.capacity_nats, WithinRel(fixtures::dyadic_capacity_m1_m30db_nats, 1e-8));
    CHECK_THAT(sh.cutoff, WithinRel(fixtures::single_cutoff_m1_m30db, 1e-8));
    CHECK_THAT(sh.capacity_nats, WithinRel(fixtures::single_capacity_m1_m30db_nats, 1e-8));

    // Plot read-offs 1.5e-2 and 7e-3 bits/s/Hz, +-25%.
    CHECK_THAT(nats_to_bits(dy.capacity_nats), WithinRel(1.5e-2, 0.25));
    CHECK_THAT(nats_to_bits(sh.capacity_nats), WithinRel(7e-3, 0.25));
}

TEST_CASE("capacity is positive and increasing in SNR", "[waterfill]")
{
    const auto ch = DyadicChannel::symmetric(1.0);
    CHECK(capacity_exact(ch, 10.0) > capacity_exact(ch, 1.0));
    CHECK(capacity_exact(ch, 1.0) > 0.0);

    const NakagamiParams single(1.0, 1.0);
    double prev = 0.0;
    for (double db = -60.0; db <= 0.0; db += 1.0)
    {
        const double c = capacity_exact_single(single, db_to_linear(db));
        INFO("snr_db=" << db);
        CHECK(c > prev);
        prev = c;
    }
}

TEST_CASE("capacity at -20 dB agrees with Monte Carlo", "[waterfill][mc]")
{
    const auto ch = DyadicChannel::symmetric(1.0);
    const auto mc = estimate_capacity(ch, 1e-2, 10'000'000, 77);
    CHECK(std::abs(mc.mean - capacity_exact(ch, 1e-2)) <= 3.0 * mc.std_error);
}

TEST_CASE("severity gain at low SNR", "[waterfill]")
{
    const double snr = 1e-3;
    const double c05 = capacity_exact(DyadicChannel::symmetric(0.5), snr);
    const double c1 = capacity_exact(DyadicChannel::symmetric(1.0), snr);
    const double c2 = capacity_exact(DyadicChannel::symmetric(2.0), snr);
    const double c4 = capacity_exact(DyadicChannel::symmetric(4.0), snr);
    CHECK(c05 > c1);
    CHECK(c1 > c2);
    CHECK(c2 > c4);
    CHECK(c05 / c4 >= 3.0);
    CHECK(c05 / c4 <= 5.0);
}

TEST_CASE("dyadic advantage over a single hop grows as SNR falls", "[waterfill]")
{
    for (double m : {0.5, 1.0})
    {
        const auto ch = DyadicChannel::symmetric(m);
        const NakagamiParams single(m, 1.0);
        double prev = 1.0;
        for (double db : {-30.0, -40.0, -55.0})
        {
            const double snr = db_to_linear(db);
            const double ratio = capacity_exact(ch, snr) / capacity_exact_single(single, snr);
            INFO("m=" << m << " snr_db=" << db << " ratio=" << ratio);
            CHECK(ratio > prev);
            prev = ratio;
        }
    }
    // At -30 dB and m = 1 the exact advantage is 1.765x.
    const double r = fixtures::dyadic_capacity_m1_m30db_nats / fixtures::single_capacity_m1_m30db_nats;
    CHECK_THAT(capacity_exact(DyadicChannel::symmetric(1.0), 1e-3) /
                   capacity_exact_single(NakagamiParams(1.0, 1.0), 1e-3),
               WithinRel(r, 1e-8));
}

TEST_CASE("quadrature matches Monte Carlo on the 4x3 grid", "[waterfill][mc]")
{
    std::uint64_t seed = 500;
    for (double m : {0.5, 1.0, 2.0, 4.0})
        for (double db : {-10.0, -20.0, -30.0})
        {
            const auto ch = DyadicChannel::symmetric(m);
            const double snr = db_to_linear(db);
            const auto mc = estimate_capacity(ch, snr, 10'000'000, seed++);
            INFO("m=" << m << " snr_db=" << db);
            CHECK(std::abs(mc.mean - capacity_exact(ch, snr)) <= 3.0 * mc.std_error);
        }
}

TEST_CASE("generic gain-law interface accepts both laws", "[waterfill]")
{
    STATIC_REQUIRE(GainLaw<DyadicGainLaw>);
    STATIC_REQUIRE(GainLaw<SingleHopGainLaw>);
    // A dyadic channel whose second hop is deterministic-like (large m) approaches the single hop.
    const DyadicChannel near_single(NakagamiParams(1.0, 1.0), NakagamiParams(400.0, 1.0));
    CHECK_THAT(capacity_exact(near_single, 0.1), WithinRel(capacity_exact_single(NakagamiParams(1.0, 1.0), 0.1), 0.02));
}
