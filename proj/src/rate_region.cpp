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

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace femtorelay {

RateRegion::RateRegion(std::vector<RatePair> points)
    : points_(std::move(points))
{
    if (points_.empty())
        throw std::invalid_argument("rate region needs at least one point");
    for (const RatePair& p : points_) {
        if (!std::isfinite(p.r_u) || !std::isfinite(p.r_v) || p.r_u < 0.0 || p.r_v < 0.0)
            throw std::invalid_argument("rate region points must be finite and >= 0");
    }
}

RateRegion RateRegion::from_rate_points(std::span<const RatePoint> points)
{
    std::vector<RatePair> pairs;
    pairs.reserve(points.size());
    for (const RatePoint& p : points)
        pairs.push_back({p.r_u, p.r_v});
    return RateRegion(std::move(pairs));
}

OperatingPoint max_sum_rate(const RateRegion& region)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < region.size(); ++i) {
        const RatePair& p = region[i];
        const RatePair& b = region[best];
        const double sum = p.r_u + p.r_v;
        const double best_sum = b.r_u + b.r_v;
        if (sum > best_sum || (sum == best_sum && (p.r_u > b.r_u || (p.r_u == b.r_u && p.r_v > b.r_v))))
            best = i;
    }
    const RatePair& b = region[best];
    OperatingPoint op;
    op.r_u = b.r_u;
    op.r_v = b.r_v;
    op.objective = Objective::MaxSum;
    op.value = b.r_u + b.r_v;
    op.weight = 1.0;
    op.first = op.second = best;
    return op;
}

MaxMinTwo max_min_two(RatePair p1, RatePair p2)
{
    const double x1 = p1.r_u, y1 = p1.r_v;
    const double x2 = p2.r_u, y2 = p2.r_v;
    const double spread = (x1 - x2) * (y1 - y2);

    MaxMinTwo out;
    if (spread >= 0.0) {
        const bool first_dominates = x1 >= x2 && y1 >= y2;
        const RatePair& top = first_dominates ? p1 : p2;
        out.branch = MaxMinCase::Dominated;
        out.value = std::min(std::max(x1, x2), std::max(y1, y2));
        out.weight = first_dominates ? 1.0 : 0.0;
        out.r_u = top.r_u;
        out.r_v = top.r_v;
        return out;
    }

    const double side = (x1 - y1) * (x2 - y2);
    if (side >= 0.0) {
        const double m1 = std::min(x1, y1);
        const double m2 = std::min(x2, y2);
        const bool first_better = m1 >= m2;
        const RatePair& top = first_better ? p1 : p2;
        out.branch = MaxMinCase::SameSide;
        out.value = std::max(m1, m2);
        out.weight = first_better ? 1.0 : 0.0;
        out.r_u = top.r_u;
        out.r_v = top.r_v;
        return out;
    }

    out.branch = MaxMinCase::OppositeSides;
    out.value = (x1 * y2 - y1 * x2) / (y2 - y1 + x1 - x2);
    out.weight = std::clamp((out.value - x2) / (x1 - x2), 0.0, 1.0);
    out.r_u = out.value;
    out.r_v = out.value;
    return out;
}

OperatingPoint max_min_region(const RateRegion& region)
{
    OperatingPoint op;
    op.objective = Objective::MaxMin;
    op.value = -1.0;
    for (std::size_t i = 0; i < region.size(); ++i) {
        for (std::size_t j = i; j < region.size(); ++j) {
            const MaxMinTwo m = max_min_two(region[i], region[j]);
            if (m.value > op.value) {
                op.value = m.value;
                op.r_u = m.r_u;
                op.r_v = m.r_v;
                op.weight = m.weight;
                op.first = i;
                op.second = j;
            }
        }
    }
    return op;
}

double max_min_oracle(const RateRegion& region, double grid_step)
{
    if (!(grid_step > 0.0 && grid_step <= 0.01))
        throw std::invalid_argument("grid step must lie in (0, 0.01]");
    const auto steps = static_cast<std::size_t>(std::ceil(1.0 / grid_step));
    double best = 0.0;
    for (std::size_t i = 0; i < region.size(); ++i) {
        for (std::size_t j = i; j < region.size(); ++j) {
            const RatePair& a = region[i];
            const RatePair& b = region[j];
            if (i == j) {
                best = std::max(best, std::min(a.r_u, a.r_v));
                continue;
            }
            for (std::size_t k = 0; k <= steps; ++k) {
                const double lambda = std::min(static_cast<double>(k) * grid_step, 1.0);
                const double ru = lambda * a.r_u + (1.0 - lambda) * b.r_u;
                const double rv = lambda * a.r_v + (1.0 - lambda) * b.r_v;
                best = std::max(best, std::min(ru, rv));
            }
        }
    }
    return best;
}

}  // namespace femtorelay
