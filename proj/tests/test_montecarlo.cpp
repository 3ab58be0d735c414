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

#include "femtorelay/montecarlo.hpp"

#include "femtorelay/rng.hpp"

#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>

using namespace femtorelay;
using doctest::Approx;

namespace {

ScenarioConfig small_backhaul_sweep(std::size_t trials, unsigned workers = 1)
{
    ScenarioConfig c;
    c.trials = trials;
    c.workers = workers;
    c.master_seed = 12345;
    c.variable = SweepVariable::CUp;
    c.values = {0.5, 2.0, 8.0};
    c.backhaul.c_up = 0.5;
    c.backhaul.down_ratio = 3.0;
    return c;
}

bool same_bits(const Estimate& a, const Estimate& b)
{
    return a.mean == b.mean && a.std_error == b.std_error;
}

}  // namespace

TEST_CASE("split_seed spreads neighbouring indices")
{
    std::set<std::uint64_t> seeds;
    for (std::uint64_t k = 0; k < 20; ++k)
        for (std::uint64_t i = 0; i < 500; ++i)
            seeds.insert(split_seed(7, k, i));
    CHECK(seeds.size() == 20 * 500);
    CHECK(split_seed(7, 1, 2) == split_seed(7, 1, 2));
    CHECK(split_seed(7, 1, 2) != split_seed(7, 2, 1));
    CHECK(split_seed(7, 1, 2) != split_seed(8, 1, 2));
}

TEST_CASE("run_trial with a forced equidistant placement")
{
    PointConfig point;
    point.propagation.shadow_sigma_db = 0.0;
    point.propagation.rx_snr_db = 10.0;
    point.caps = {2.0, 0.0};
    point.schemes = {Scheme::DF, Scheme::QF_WZQ};
    const Placement forced{{75.0, 0.0}, {150.0, 0.0}};

    const TrialResult r = run_trial(99, point, forced);
    CHECK(r.snr.gamma_uf == Approx(10.0).epsilon(1e-12));
    REQUIRE(r.schemes.size() == 2);

    // gamma = (10, 10, 10), C_up = 2.
    const SchemeTrial& df = r.schemes[0];
    CHECK(df.scheme == Scheme::DF);
    CHECK(df.uv.r_u == Approx(std::log2(21.0 / 11.0)).epsilon(1e-12));
    CHECK(df.uv.r_v == Approx(2.0).epsilon(1e-15));
    CHECK(df.vu.r_u == Approx(std::log2(11.0)).epsilon(1e-12));
    CHECK(df.vu.r_v == Approx(std::log2(21.0 / 11.0)).epsilon(1e-12));
    CHECK(df.max_sum.value == Approx(std::log2(11.0) + std::log2(21.0 / 11.0)).epsilon(1e-12));

    // Same placement, same SNRs, regardless of the seed.
    const TrialResult other = run_trial(100, point, forced);
    CHECK(other.schemes[1].uv.r_u == r.schemes[1].uv.r_u);
}

TEST_CASE("zero uplink capacity kills DF max-min")
{
    PointConfig point;
    point.caps = {0.0, 0.0};
    point.schemes = {kAllSchemes.begin(), kAllSchemes.end()};
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const TrialResult r = run_trial(seed, point);
        for (const SchemeTrial& t : r.schemes) {
            CHECK(t.uv.r_v == 0.0);
            CHECK(t.vu.r_v == 0.0);
            CHECK(t.max_min.value == 0.0);
        }
    }
}

TEST_CASE("per-realization dominance between schemes")
{
    PointConfig point;
    point.propagation.shadow_sigma_db = 8.0;
    point.schemes = {kAllSchemes.begin(), kAllSchemes.end()};
    Rng caps_rng(4);
    for (std::uint64_t seed = 0; seed < 5000; ++seed) {
        point.caps = {8.0 * uniform01(caps_rng), 8.0 * uniform01(caps_rng)};
        const TrialResult r = run_trial(seed, point);
        const auto& df = r.schemes[0];
        const auto& eq = r.schemes[1];
        const auto& wzq = r.schemes[2];
        const auto& dfqsi = r.schemes[3];
        REQUIRE(wzq.max_sum.value >= eq.max_sum.value);
        REQUIRE(dfqsi.max_sum.value >= df.max_sum.value);
        for (const auto& t : r.schemes) {
            REQUIRE(t.max_min.value >= 0.0);
            REQUIRE(t.max_min.value <= std::min(std::max(t.uv.r_u, t.vu.r_u), std::max(t.uv.r_v, t.vu.r_v)));
        }
    }
}

TEST_CASE("estimate")
{
    const double one[] = {2.5};
    CHECK(estimate(one).mean == 2.5);
    CHECK(estimate(one).std_error == 0.0);
    const double xs[] = {1.0, 2.0, 3.0, 4.0};
    const Estimate e = estimate(xs);
    CHECK(e.mean == 2.5);
    // sample sd sqrt(5/3), divided by sqrt(4)
    CHECK(e.std_error == Approx(std::sqrt(5.0 / 3.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("single-trial sweep reproduces the trial")
{
    ScenarioConfig c = small_backhaul_sweep(1);
    c.values = {2.0};
    c.schemes = {Scheme::QF_EQ};
    const SweepSummary s = run_sweep(c);
    REQUIRE(s.rows.size() == 1);
    const TrialResult t = run_trial(split_seed(c.master_seed, 0, 0), point_config(c, 0));
    CHECK(s.rows[0].max_sum.mean == t.schemes[0].max_sum.value);
    CHECK(s.rows[0].max_min.mean == t.schemes[0].max_min.value);
    CHECK(s.rows[0].ru_maxmin.mean == t.schemes[0].max_min.r_u);
    CHECK(s.rows[0].rv_maxsum.mean == t.schemes[0].max_sum.r_v);
    CHECK(s.rows[0].max_sum.std_error == 0.0);
    CHECK(s.rows[0].trials == 1);
}

TEST_CASE("sweep layout and bit-identical results across worker counts")
{
    const SweepSummary a = run_sweep(small_backhaul_sweep(600, 1));
    const SweepSummary b = run_sweep(small_backhaul_sweep(600, 4));
    const SweepSummary c = run_sweep(small_backhaul_sweep(600, 7));
    REQUIRE(a.rows.size() == 3 * 4);
    REQUIRE(b.rows.size() == a.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].value == small_backhaul_sweep(1).values[i / 4]);
        CHECK(a.rows[i].scheme == kAllSchemes[i % 4]);
        for (const SweepSummary* other : {&b, &c}) {
            const SummaryRow& x = a.rows[i];
            const SummaryRow& y = other->rows[i];
            CHECK(same_bits(x.max_sum, y.max_sum));
            CHECK(same_bits(x.max_min, y.max_min));
            CHECK(same_bits(x.ru_maxmin, y.ru_maxmin));
            CHECK(same_bits(x.rv_maxmin, y.rv_maxmin));
            CHECK(same_bits(x.ru_maxsum, y.ru_maxsum));
            CHECK(same_bits(x.rv_maxsum, y.rv_maxsum));
        }
        CHECK(a.rows[i].max_min.mean <= a.rows[i].max_sum.mean);
        CHECK(a.rows[i].max_sum.std_error >= 0.0);
    }
}

TEST_CASE("position sweep moves the FBS")
{
    ScenarioConfig c;
    c.trials = 50;
    c.variable = SweepVariable::SO;
    c.values = {50.0, 150.0};
    c.backhaul = {4.0, 1.0, std::nullopt};
    const PointConfig p = point_config(c, 1);
    CHECK(p.geometry.s_o == 150.0);
    CHECK(p.caps.c_up == 4.0);
    CHECK(p.caps.c_down == 1.0);
    CHECK(run_sweep(c).rows.size() == 8);
}

TEST_CASE("standard error shrinks as one over root n")
{
    ScenarioConfig c = small_backhaul_sweep(2000);
    c.values = {2.0};
    c.schemes = {Scheme::QF_WZQ, Scheme::DF};
    double ratio_sum = 0.0;
    constexpr int family = 5;
    for (int k = 0; k < family; ++k) {
        c.master_seed = 1000 + k;
        c.trials = 2000;
        const double se_small = run_sweep(c).rows[0].max_sum.std_error;
        c.trials = 8000;
        const double se_large = run_sweep(c).rows[0].max_sum.std_error;
        ratio_sum += se_small / se_large;
    }
    CHECK(ratio_sum / family == Approx(2.0).epsilon(0.2));
}

TEST_CASE("scenario validation")
{
    ScenarioConfig c = small_backhaul_sweep(10);
    CHECK_NOTHROW(c.validate());

    auto broken = c;
    broken.trials = 0;
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
    broken = c;
    broken.values = {1.0, 1.0};
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
    broken = c;
    broken.values = {};
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
    broken = c;
    broken.values = {-1.0, 2.0};
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
    broken = c;
    broken.backhaul.down_ratio = -1.0;
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
    broken = c;
    broken.schemes = {Scheme::DF, Scheme::DF};
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
    broken = c;
    broken.schemes.clear();
    CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
    broken = c;
    broken.geometry.r_f = 500.0;
    CHECK_THROWS_AS(run_sweep(broken), std::invalid_argument);
}
