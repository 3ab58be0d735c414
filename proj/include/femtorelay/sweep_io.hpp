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

#include "femtorelay/montecarlo.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace femtorelay {

inline constexpr std::string_view kVersion = "femtorelay 0.1.0";

inline constexpr std::string_view kCsvHeader =
    "sweep_var,sweep_value,scheme,mean_max_sum,se_max_sum,mean_max_min,se_max_min,"
    "mean_ru_maxmin,mean_rv_maxmin,mean_ru_maxsum,mean_rv_maxsum,trials";

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Metadata lines (without the leading '#') sufficient to rerun a sweep.
std::vector<std::string> describe_config(const ScenarioConfig& config);

/*!
 * Sweep summary as CSV: a '#'-prefixed metadata block, the header row, then
 * one row per (sweep value, scheme). Contains nothing run-dependent such as
 * wall time or worker count.
 */
void write_sweep_csv(std::ostream& out, const SweepSummary& summary, const ScenarioConfig& config);

/// Aligned human-readable table of the same rows.
void write_sweep_table(std::ostream& out, const SweepSummary& summary, const ScenarioConfig& config);

/// Parse rows written by write_sweep_csv; '#' lines are skipped. Throws std::runtime_error on malformed input.
std::vector<SummaryRow> read_sweep_csv(std::istream& in);

}  // namespace femtorelay
