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

#pragma once

#include "femtorelay/channel_model.hpp"
#include "femtorelay/rate_region.hpp"
#include "femtorelay/schemes.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace femtorelay {

enum class SweepVariable
{
    CUp,  ///< backhaul uplink capacity, b/s/Hz
    SO,   ///< FBS distance from the MBS, meters
};

std::string_view to_string(SweepVariable variable);

/*!
 * Backhaul settings of a scenario. When down_ratio is set the downlink
 * follows the uplink as c_down = down_ratio * c_up, otherwise c_down is
 * used as given.
 */
struct BackhaulRule
{
    double c_up = 4.0;
    double c_down = 1.0;
    std::optional<double> down_ratio;

    BackhaulCapacities at(double c_up_value) const;
};

struct ScenarioConfig
{
    NetworkGeometry geometry;
    PropagationParams propagation;
    BackhaulRule backhaul;
    std::vector<Scheme> schemes{kAllSchemes.begin(), kAllSchemes.end()};
    std::size_t trials = 10000;
    std::uint64_t master_seed = 1;
    SweepVariable variable = SweepVariable::CUp;
    std::vector<double> values;
    /// Worker threads; 0 picks the hardware concurrency. Never changes results.
    unsigned workers = 1;

    /// Throws std::invalid_argument on any violated invariant.
    void validate() const;
};

/// Everything one trial needs: the scenario with the sweep variable substituted.
struct PointConfig
{
    NetworkGeometry geometry;
    PropagationParams propagation;
    BackhaulCapacities caps;
    std::vector<Scheme> schemes;
};

PointConfig point_config(const ScenarioConfig& config, std::size_t value_index);

struct SchemeTrial
{
    Scheme scheme = Scheme::DF;
    RatePoint uv;
    RatePoint vu;
    OperatingPoint max_sum;
    OperatingPoint max_min;
};

struct TrialResult
{
    SnrTriplet snr;
    std::vector<SchemeTrial> schemes;  ///< in PointConfig::schemes order
};

/// Both decoding orders and both metrics for each scheme, from a fixed SNR triplet.
TrialResult evaluate_schemes(const SnrTriplet& snr, const BackhaulCapacities& caps, std::span<const Scheme> schemes);

/*!
 * One Monte Carlo realization: placement, shadowing, SNRs, then every scheme.
 *
 * forced_placement replaces the random placement (shadowing is still drawn
 * from the same stream). Deterministic in trial_seed.
 */
TrialResult run_trial(std::uint64_t trial_seed,
                      const PointConfig& config,
                      const std::optional<Placement>& forced_placement = std::nullopt);

struct Estimate
{
    double mean = 0.0;
    double std_error = 0.0;  ///< sample standard deviation / sqrt(n); 0 for n = 1
};

struct SummaryRow
{
    SweepVariable variable = SweepVariable::CUp;
    double value = 0.0;
    Scheme scheme = Scheme::DF;
    Estimate max_sum;
    Estimate max_min;
    Estimate ru_maxmin;  ///< R_U at the max-min operating point
    Estimate rv_maxmin;
    Estimate ru_maxsum;  ///< R_U at the max-sum operating point
    Estimate rv_maxsum;
    std::size_t trials = 0;
};

struct SweepSummary
{
    std::vector<SummaryRow> rows;  ///< sweep value major, scheme minor
    std::uint64_t master_seed = 0;
};

/*!
 * Run every trial at every sweep value and aggregate.
 *
 * Trial i at value index k uses split_seed(master_seed, k, i). Per-trial
 * results are stored by index and reduced in index order, so the summary is
 * bit-identical for any worker count.
 */
SweepSummary run_sweep(const ScenarioConfig& config);

/// Mean and standard error, summed in the given order.
Estimate estimate(std::span<const double> samples);

}  // namespace femtorelay
