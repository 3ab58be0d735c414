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

#include "femtorelay/schemes.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace femtorelay {

struct RatePair
{
    double r_u = 0.0;
    double r_v = 0.0;

    friend bool operator==(const RatePair&, const RatePair&) = default;
};

/*!
 * Corner points of a two-user rate region.
 *
 * The achievable set is the convex hull of the rectangles each corner
 * dominates, i.e. the corners plus time sharing plus rate reduction.
 */
class RateRegion
{
  public:
    /// Throws std::invalid_argument if empty or any coordinate is negative or non-finite.
    explicit RateRegion(std::vector<RatePair> points);

    static RateRegion from_rate_points(std::span<const RatePoint> points);

    std::span<const RatePair> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const RatePair& operator[](std::size_t i) const { return points_[i]; }

  private:
    std::vector<RatePair> points_;
};

enum class Objective
{
    MaxSum,
    MaxMin,
};

/*!
 * Where a metric is attained: the rate pair weight * corners[first] +
 * (1 - weight) * corners[second]. first == second for a single corner.
 */
struct OperatingPoint
{
    double r_u = 0.0;
    double r_v = 0.0;
    Objective objective = Objective::MaxSum;
    double value = 0.0;  ///< r_u + r_v for MaxSum, min(r_u, r_v) for MaxMin
    double weight = 1.0;
    std::size_t first = 0;
    std::size_t second = 0;
};

/// Best corner for r_u + r_v; ties go to larger r_u, then larger r_v.
OperatingPoint max_sum_rate(const RateRegion& region);

/// Which branch of the two-point max-min formula applied.
enum class MaxMinCase
{
    Dominated,      ///< one point weakly dominates the other
    SameSide,       ///< both points on one side of r_u = r_v
    OppositeSides,  ///< segment crosses the diagonal
};

struct MaxMinTwo
{
    double value = 0.0;
    MaxMinCase branch = MaxMinCase::Dominated;
    double weight = 1.0;  ///< time share on p1
    double r_u = 0.0;
    double r_v = 0.0;
};

/*!
 * Largest min(r_u, r_v) reachable by time sharing between two corners.
 *
 * With dx = x1 - x2, dy = y1 - y2 and side = (x1 - y1)(x2 - y2):
 *   dx * dy >= 0            -> min(max(x1, x2), max(y1, y2))
 *   dx * dy < 0, side >= 0  -> max(min(x1, y1), min(x2, y2))
 *   dx * dy < 0, side < 0   -> (x1 y2 - y1 x2) / (y2 - y1 + x1 - x2)
 * The zero-product boundaries go to the neighbouring branch, where the
 * formulas agree. In the last branch the denominator is |dx| + |dy| > 0.
 */
MaxMinTwo max_min_two(RatePair p1, RatePair p2);

/// Maximum of max_min_two over all unordered pairs, including a point with itself.
OperatingPoint max_min_region(const RateRegion& region);

/*!
 * Brute-force reference for max_min_region: scans time-share weights on a
 * grid of the given step for every pair. Only meant for verification.
 *
 * Throws std::invalid_argument unless 0 < grid_step <= 0.01.
 */
double max_min_oracle(const RateRegion& region, double grid_step);

}  // namespace femtorelay
