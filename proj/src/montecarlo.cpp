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

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

namespace femtorelay {

namespace {

void require(bool condition, const char* message)
{
    if (!condition)
        throw std::invalid_argument(message);
}

enum Metric : std::size_t
{
    kMaxSum,
    kMaxMin,
    kRuMaxMin,
    kRvMaxMin,
    kRuMaxSum,
    kRvMaxSum,
    kMetricCount,
};

using MetricRow = std::array<double, kMetricCount>;

MetricRow metrics_of(const SchemeTrial& t)
{
    return {t.max_sum.value, t.max_min.value, t.max_min.r_u, t.max_min.r_v, t.max_sum.r_u, t.max_sum.r_v};
}

unsigned resolve_workers(unsigned requested, std::size_t trials)
{
    unsigned n = requested == 0 ? std::max(1u, std::thread::hardware_concurrency()) : requested;
    return static_cast<unsigned>(std::min<std::size_t>(n, trials));
}

// Run body(i) for i in [0, count) on `workers` threads, contiguous blocks each.
template <typename Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body)
{
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t block = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = std::min(count, w * block);
        const std::size_t end = std::min(count, begin + block);
        pool.emplace_back([&, w, begin, end] {
            try {
                for (std::size_t i = begin; i < end; ++i)
                    body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
}

}  // namespace

std::string_view to_string(SweepVariable variable)
{
    return variable == SweepVariable::CUp ? "c_up" : "s_o";
}

BackhaulCapacities BackhaulRule::at(double c_up_value) const
{
    BackhaulCapacities caps;
    caps.c_up = c_up_value;
    caps.c_down = down_ratio ? *down_ratio * c_up_value : c_down;
    return caps;
}

void ScenarioConfig::validate() const
{
    geometry.validate();
    propagation.validate();
    backhaul.at(backhaul.c_up).validate();
    if (backhaul.down_ratio)
        require(std::isfinite(*backhaul.down_ratio) && *backhaul.down_ratio >= 0.0, "c_down ratio must be finite and >= 0");
    require(trials >= 1, "trials must be >= 1");
    require(!schemes.empty(), "at least one scheme is required");
    for (std::size_t i = 0; i < schemes.size(); ++i)
        for (std::size_t j = i + 1; j < schemes.size(); ++j)
            require(schemes[i] != schemes[j], "schemes must be distinct");
    require(!values.empty(), "sweep needs at least one value");
    for (std::size_t i = 0; i < values.size(); ++i) {
        require(std::isfinite(values[i]) && values[i] >= 0.0, "sweep values must be finite and >= 0");
        require(i == 0 || values[i] > values[i - 1], "sweep values must be strictly increasing");
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        point_config(*this, i).caps.validate();
}

PointConfig point_config(const ScenarioConfig& config, std::size_t value_index)
{
    PointConfig p;
    p.geometry = config.geometry;
    p.propagation = config.propagation;
    p.schemes = config.schemes;
    const double value = config.values.at(value_index);
    if (config.variable == SweepVariable::CUp) {
        p.caps = config.backhaul.at(value);
    } else {
        p.geometry.s_o = value;
        p.caps = config.backhaul.at(config.backhaul.c_up);
    }
    return p;
}

TrialResult evaluate_schemes(const SnrTriplet& snr, const BackhaulCapacities& caps, std::span<const Scheme> schemes)
{
    TrialResult result;
    result.snr = snr;
    result.schemes.reserve(schemes.size());
    for (Scheme s : schemes) {
        SchemeTrial t;
        t.scheme = s;
        t.uv = scheme_rates(s, DecodingOrder::UV, snr, caps);
        t.vu = scheme_rates(s, DecodingOrder::VU, snr, caps);
        const RateRegion region({{t.uv.r_u, t.uv.r_v}, {t.vu.r_u, t.vu.r_v}});
        t.max_sum = max_sum_rate(region);
        t.max_min = max_min_region(region);
        result.schemes.push_back(t);
    }
    return result;
}

TrialResult run_trial(std::uint64_t trial_seed, const PointConfig& config, const std::optional<Placement>& forced_placement)
{
    Rng rng(trial_seed);
    const Placement placement = sample_placement(rng, config.geometry);
    const ShadowDraws shadow = sample_shadowing(rng, config.propagation);
    const SnrTriplet snr = snr_triplet(forced_placement.value_or(placement), config.geometry, config.propagation, shadow);
    return evaluate_schemes(snr, config.caps, config.schemes);
}

Estimate estimate(std::span<const double> samples)
{
    Estimate e;
    if (samples.empty())
        return e;
    double sum = 0.0;
    for (double x : samples)
        sum += x;
    const auto n = static_cast<double>(samples.size());
    e.mean = sum / n;
    if (samples.size() < 2)
        return e;
    double ss = 0.0;
    for (double x : samples)
        ss += (x - e.mean) * (x - e.mean);
    e.std_error = std::sqrt(ss / (n - 1.0) / n);
    return e;
}

SweepSummary run_sweep(const ScenarioConfig& config)
{
    config.validate();
    SweepSummary summary;
    summary.master_seed = config.master_seed;
    summary.rows.reserve(config.values.size() * config.schemes.size());

    const std::size_t n_schemes = config.schemes.size();
    const unsigned workers = resolve_workers(config.workers, config.trials);
    // per_trial[trial * n_schemes + scheme]
    std::vector<MetricRow> per_trial(config.trials * n_schemes);
    std::vector<double> column(config.trials);

    for (std::size_t k = 0; k < config.values.size(); ++k) {
        const PointConfig point = point_config(config, k);
        parallel_for(config.trials, workers, [&](std::size_t i) {
            const TrialResult r = run_trial(split_seed(config.master_seed, k, i), point);
            for (std::size_t s = 0; s < n_schemes; ++s)
                per_trial[i * n_schemes + s] = metrics_of(r.schemes[s]);
        });

        for (std::size_t s = 0; s < n_schemes; ++s) {
            std::array<Estimate, kMetricCount> est;
            for (std::size_t m = 0; m < kMetricCount; ++m) {
                for (std::size_t i = 0; i < config.trials; ++i)
                    column[i] = per_trial[i * n_schemes + s][m];
                est[m] = estimate(column);
            }
            SummaryRow row;
            row.variable = config.variable;
            row.value = config.values[k];
            row.scheme = config.schemes[s];
            row.max_sum = est[kMaxSum];
            row.max_min = est[kMaxMin];
            row.ru_maxmin = est[kRuMaxMin];
            row.rv_maxmin = est[kRvMaxMin];
            row.ru_maxsum = est[kRuMaxSum];
            row.rv_maxsum = est[kRvMaxSum];
            row.trials = config.trials;
            summary.rows.push_back(row);
        }
    }
    return summary;
}

}  // namespace femtorelay
