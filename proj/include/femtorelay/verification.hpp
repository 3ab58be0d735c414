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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace femtorelay {

/*!
 * Outcome of one randomized property. max_residual is the worst violation
 * observed (an error magnitude, or the largest amount by which an
 * inequality was broken); the property passes when it stays within
 * threshold (strictly below it for the identity check).
 */
struct PropertyReport
{
    std::string name;
    std::size_t samples = 0;
    double max_residual = 0.0;
    double threshold = 0.0;
    bool strict = false;  ///< residual must be < threshold rather than <=
    bool passed = false;
};

/// Run the randomized property battery. Throws std::invalid_argument if samples == 0.
std::vector<PropertyReport> run_verification(std::size_t samples, std::uint64_t seed);

/// One line per property: "<name>: max residual <r> <op> <threshold> (<n> samples) PASS|FAIL".
void write_verification_report(std::ostream& out, const std::vector<PropertyReport>& reports);

}  // namespace femtorelay
