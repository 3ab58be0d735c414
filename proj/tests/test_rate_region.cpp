// SPDX-License-Identifier: Apache-2.0
//
// femtorelay: link-level simulator for femtocell uplinks with limited backhaul
// Copyright (C) 2026 femtorelay developers
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

#include "femtorelay/rate_region.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

using namespace femtorelay;
using doctest::Approx;

namespace {

RatePair random_pair(Rng& rng, double hi)
{
    return {hi * uniform01(rng), hi * uniform01(rng)};
}

}  // namespace

TEST_CASE("max_sum_rate")
{
    SUBCASE("equal sums break toward larger r_u")
    {
        const OperatingPoint op = max_sum_rate(RateRegion({{1.0, 2.0}, {2.0, 1.0}}));
        CHECK(op.value == 3.0);
        CHECK(op.r_u == 2.0);
        CHECK(op.r_v == 1.0);
        CHECK(op.first == 1);
        CHECK(op.objective == Objective::MaxSum);
    }
    SUBCASE("DF reference corners")
    {
        const double a = std::log2(1.75);
        CHECK(max_sum_rate(RateRegion({{a, 2.0}, {2.0, a}})).value == Approx(2.0 + a).epsilon(1e-15));
        CHECK(max_sum_rate(RateRegion({{a, 2.0}, {2.0, a}})).value == Approx(2.8074).epsilon(1e-4));
    }
    SUBCASE("degenerate")
    {
        CHECK(max_sum_rate(RateRegion({{0.0, 0.0}})).value == 0.0);
    }
    SUBCASE("identical points keep the first")
    {
        CHECK(max_sum_rate(RateRegion({{1.0, 1.0}, {1.0, 1.0}})).first == 0);
    }
}

TEST_CASE("max_min_two reference cases")
{
    SUBCASE("segment crossing the diagonal")
    {
        const MaxMinTwo m = max_min_two({2.0, 1.0}, {1.0, 2.0});
        CHECK(m.branch == MaxMinCase::OppositeSides);
        CHECK(m.value == Approx(1.5).epsilon(1e-15));
        CHECK(m.weight == Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("dominated point")
    {
        const MaxMinTwo m = max_min_two({3.0, 1.0}, {2.0, 0.5});
        CHECK(m.branch == MaxMinCase::Dominated);
        CHECK(m.value == 1.0);
        CHECK(m.weight == 1.0);
    }
    SUBCASE("both below the diagonal")
    {
        const MaxMinTwo m = max_min_two({3.0, 1.0}, {2.0, 1.5});
        CHECK(m.branch == MaxMinCase::SameSide);
        CHECK(m.value == 1.5);
        CHECK(m.weight == 0.0);
    }
    SUBCASE("coincident diagonal points")
    {
        for (double c : {0.0, 0.3, 7.0})
            CHECK(max_min_two({c, c}, {c, c}).value == c);
    }
}

TEST_CASE("max_min_two boundary routing is continuous")
{
    // Shared coordinate: x1 == x2 (zero spread).
    CHECK(max_min_two({2.0, 3.0}, {2.0, 1.0}).value == 2.0);
    CHECK(max_min_two({2.0, 1.0}, {2.0, 3.0}).value == 2.0);
    CHECK(max_min_two({3.0, 1.0}, {2.0, 1.0}).value == 1.0);

    // One point on the diagonal with the other across: side product zero.
    const MaxMinTwo on_diag = max_min_two({1.0, 1.0}, {3.0, 0.5});
    CHECK(on_diag.value == Approx(1.0).epsilon(1e-15));
    CHECK(on_diag.branch == MaxMinCase::SameSide);

    // Neighbouring inputs on each side of every boundary agree.
    const double eps = 1e-9;
    const std::pair<RatePair, RatePair> boundaries[] = {
        {{1.0, 1.0}, {3.0, 0.5}},
        {{1.0, 1.0}, {0.5, 3.0}},
        {{2.0, 3.0}, {2.0, 1.0}},
        {{3.0, 1.0}, {2.0, 1.0}},
        {{1.0, 2.0}, {2.0, 2.0}},
    };
    for (const auto& [p1, p2] : boundaries) {
        const double center = max_min_two(p1, p2).value;
        for (double dx : {-eps, 0.0, eps})
            for (double dy : {-eps, 0.0, eps}) {
                const double v = max_min_two({p1.r_u + dx, p1.r_v + dy}, p2).value;
                CHECK(std::abs(v - center) < 10 * eps);
            }
    }
}

TEST_CASE("max_min_two properties")
{
    Rng rng(17);
    std::size_t branch_hits[3] = {0, 0, 0};
    for (int i = 0; i < 100000; ++i) {
        const RatePair p1 = random_pair(rng, 10.0);
        const RatePair p2 = random_pair(rng, 10.0);
        const MaxMinTwo m = max_min_two(p1, p2);
        ++branch_hits[static_cast<int>(m.branch)];

        REQUIRE(std::abs(m.value - max_min_two(p2, p1).value) <= 1e-12);
        const double lower = std::max(std::min(p1.r_u, p1.r_v), std::min(p2.r_u, p2.r_v));
        const double upper = std::min(std::max(p1.r_u, p2.r_u), std::max(p1.r_v, p2.r_v));
        REQUIRE(m.value >= lower - 1e-12);
        REQUIRE(m.value <= upper + 1e-12);

        // The reported operating point is achievable and attains the value.
        REQUIRE(m.weight >= 0.0);
        REQUIRE(m.weight <= 1.0);
        const double ru = m.weight * p1.r_u + (1.0 - m.weight) * p2.r_u;
        const double rv = m.weight * p1.r_v + (1.0 - m.weight) * p2.r_v;
        REQUIRE(std::min(ru, rv) == Approx(m.value).epsilon(1e-9).scale(1.0));
        if (m.branch == MaxMinCase::OppositeSides) {
            REQUIRE(ru == Approx(m.value).epsilon(1e-9).scale(1.0));
            REQUIRE(rv == Approx(m.value).epsilon(1e-9).scale(1.0));
        }

        // Positive scaling commutes with the metric.
        const double c = 0.25 + 4.0 * uniform01(rng);
        const double scaled = max_min_two({c * p1.r_u, c * p1.r_v}, {c * p2.r_u, c * p2.r_v}).value;
        REQUIRE(scaled == Approx(c * m.value).epsilon(1e-12).scale(1.0));
    }
    for (std::size_t hits : branch_hits)
        CHECK(hits >= 1000);
}

TEST_CASE("max_min_region")
{
    SUBCASE("single point")
    {
        const OperatingPoint op = max_min_region(RateRegion({{2.0, 0.5}}));
        CHECK(op.value == 0.5);
        CHECK(op.objective == Objective::MaxMin);
    }
    SUBCASE("crossing pair beats an interior point")
    {
        const OperatingPoint op = max_min_region(RateRegion({{2.0, 1.0}, {1.0, 2.0}, {1.4, 1.4}}));
        CHECK(op.value == Approx(1.5).epsilon(1e-15));
        CHECK(op.first == 0);
        CHECK(op.second == 1);
        CHECK(op.r_u == Approx(1.5));
        CHECK(op.r_v == Approx(1.5));
    }
    SUBCASE("four corners of one realization")
    {
        const SnrTriplet snr{3.0, 3.0, 3.0};
        const BackhaulCapacities caps{2.0, 2.0};
        std::vector<RatePoint> pts;
        for (Scheme s : {Scheme::DF, Scheme::QF_WZQ})
            for (DecodingOrder o : {DecodingOrder::UV, DecodingOrder::VU})
                pts.push_back(scheme_rates(s, o, snr, caps));
        const RateRegion region = RateRegion::from_rate_points(pts);
        CHECK(std::abs(max_min_region(region).value - max_min_oracle(region, 1e-4)) <= 2e-4);
    }
}

TEST_CASE("max_min_oracle")
{
    CHECK(std::abs(max_min_oracle(RateRegion({{2.0, 1.0}, {1.0, 2.0}}), 1e-4) - 1.5) <= 1e-4);
    CHECK(max_min_oracle(RateRegion({{2.0, 0.7}}), 1e-3) == 0.7);
    CHECK_THROWS_AS(max_min_oracle(RateRegion({{1.0, 1.0}}), 0.0), std::invalid_argument);
    CHECK_THROWS_AS(max_min_oracle(RateRegion({{1.0, 1.0}}), 0.05), std::invalid_argument);
}

TEST_CASE("max_min_region agrees with the grid oracle on random regions")
{
    // Coordinates in [0, 2] keep the oracle's grid error below 2 * step.
    constexpr double step = 1e-3;
    Rng rng(29);
    for (int i = 0; i < 100000; ++i) {
        const auto n = 2 + static_cast<std::size_t>(uniform01(rng) * 5.0);
        std::vector<RatePair> pts(n);
        for (auto& p : pts)
            p = random_pair(rng, 2.0);
        const RateRegion region(pts);
        REQUIRE(std::abs(max_min_region(region).value - max_min_oracle(region, step)) <= 2.0 * step);
    }
}

TEST_CASE("rate regions reject invalid corners")
{
    CHECK_THROWS_AS(RateRegion({}), std::invalid_argument);
    CHECK_THROWS_AS(RateRegion({{-0.1, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(RateRegion({{std::numeric_limits<double>::infinity(), 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(RateRegion({{1.0, std::numeric_limits<double>::quiet_NaN()}}), std::invalid_argument);
}
