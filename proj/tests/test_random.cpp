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
#include <set>

#include "dyadcap/random.hpp"

using namespace dyadcap;

TEST_CASE("Philox4x32-10 known-answer vectors", "[random]")
{
    using W = std::array<std::uint32_t, 4>;
    CHECK(philox4x32_10(W{0, 0, 0, 0}, {0, 0}) == W{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    CHECK(philox4x32_10(W{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
          W{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
    CHECK(philox4x32_10(W{0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
          W{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
    static_assert(philox4x32_10(W{0, 0, 0, 0}, {0, 0})[0] == 0x6627e8d5);
}

TEST_CASE("streams are deterministic and substreams differ", "[random]")
{
    RandomStream a(42), b(42), c(43), d(42, 1);
    for (int i = 0; i < 100; ++i)
    {
        const auto x = a();
        CHECK(x == b());
        (void)c();
        (void)d();
    }
    RandomStream a2(42), c2(43), d2(42, 1);
    CHECK(a2() != c2());
    CHECK(RandomStream(42)() != d2());

    const RandomStream root(5);
    std::set<std::uint64_t> firsts;
    for (std::uint64_t k = 0; k < 1000; ++k)
    {
        RandomStream s = root.split(k);
        firsts.insert(s());
    }
    CHECK(firsts.size() == 1000);
    RandomStream s1 = root.split(3), s2 = root.split(3);
    CHECK(s1() == s2());
}

TEST_CASE("uniform and normal moments", "[random]")
{
    RandomStream s(99);
    const int n = 1'000'000;
    double su = 0.0, sn = 0.0, sn2 = 0.0;
    double umin = 1.0, umax = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const double u = s.uniform();
        umin = std::min(umin, u);
        umax = std::max(umax, u);
        su += u;
        const double z = s.normal();
        sn += z;
        sn2 += z * z;
    }
    CHECK(umin > 0.0);
    CHECK(umax < 1.0);
    CHECK(std::abs(su / n - 0.5) < 5.0 * std::sqrt(1.0 / 12.0 / n));
    CHECK(std::abs(sn / n) < 5.0 / std::sqrt(n));
    CHECK(std::abs(sn2 / n - 1.0) < 5.0 * std::sqrt(2.0 / n));
}

TEST_CASE("gamma sampler moments", "[random]")
{
    for (double shape : {0.5, 1.0, 2.0, 4.0})
    {
        RandomStream s(static_cast<std::uint64_t>(shape * 100));
        const double scale = 1.0 / shape;
        const int n = 500'000;
        double sum = 0.0, sum2 = 0.0;
        for (int i = 0; i < n; ++i)
        {
            const double g = sample_gamma(s, shape, scale);
            sum += g;
            sum2 += g * g;
        }
        const double mean = sum / n;
        const double var = sum2 / n - mean * mean;
        // Mean 1, variance 1/shape; fourth central moment (3 shape^2 + 6 shape) scale^4.
        const double var_true = 1.0 / shape;
        const double mu4 = (3.0 * shape * shape + 6.0 * shape) * std::pow(scale, 4);
        INFO("shape=" << shape);
        CHECK(std::abs(mean - 1.0) < 5.0 * std::sqrt(var_true / n));
        CHECK(std::abs(var - var_true) < 5.0 * std::sqrt((mu4 - var_true * var_true) / n));
    }
    RandomStream s(1);
    CHECK_THROWS_AS(sample_gamma(s, 0.0, 1.0), domain_error);
    CHECK_THROWS_AS(sample_gamma(s, 1.0, -1.0), domain_error);
}
