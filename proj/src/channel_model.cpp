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

#include "femtorelay/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace femtorelay {

namespace {

void require(bool condition, const char* message)
{
    if (!condition)
        throw std::invalid_argument(message);
}

}  // namespace

double distance(Point2 a, Point2 b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

void NetworkGeometry::validate() const
{
    require(std::isfinite(s_o) && std::isfinite(r_m) && std::isfinite(r_f), "geometry values must be finite");
    require(s_o >= 0.0, "s_o must be >= 0");
    require(r_m > 0.0, "macrocell radius must be > 0");
    require(r_f > 0.0, "femtocell radius must be > 0");
    require(r_f < r_m, "femtocell radius must be smaller than macrocell radius");
}

double PropagationParams::rx_snr_linear() const
{
    return db_to_linear(rx_snr_db);
}

void PropagationParams::validate() const
{
    require(std::isfinite(alpha) && std::isfinite(shadow_sigma_db) && std::isfinite(d_min) && std::isfinite(rx_snr_db),
            "propagation parameters must be finite");
    require(alpha >= 2.0, "path-loss exponent must be >= 2");
    require(shadow_sigma_db >= 0.0, "shadowing deviation must be >= 0");
    require(d_min > 0.0, "minimum distance must be > 0");
}

void SnrTriplet::validate() const
{
    for (double g : {gamma_uf, gamma_vf, gamma_ub})
        require(std::isfinite(g) && g >= 0.0, "SNR values must be finite and >= 0");
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

Point2 sample_in_disk(Rng& rng, Point2 center, double radius)
{
    const double r = radius * std::sqrt(uniform01(rng));
    const double phi = 2.0 * std::numbers::pi * uniform01(rng);
    return {center.x + r * std::cos(phi), center.y + r * std::sin(phi)};
}

Placement sample_placement(Rng& rng, const NetworkGeometry& geometry)
{
    Placement p;
    p.u = sample_in_disk(rng, geometry.mbs(), geometry.r_m);
    p.v = sample_in_disk(rng, geometry.fbs(), geometry.r_f);
    return p;
}

ShadowDraws sample_shadowing(Rng& rng, const PropagationParams& params)
{
    if (params.shadow_sigma_db == 0.0)
        return {};
    std::normal_distribution<double> shadow_db(0.0, params.shadow_sigma_db);
    ShadowDraws s;
    s.g_uf = db_to_linear(shadow_db(rng));
    s.g_ub = db_to_linear(shadow_db(rng));
    s.g_vf = db_to_linear(shadow_db(rng));
    return s;
}

double link_gain(double distance_m, const PropagationParams& params, double shadow, double path_loss_constant)
{
    const double d = std::max(distance_m, params.d_min);
    return path_loss_constant * shadow / std::pow(d, params.alpha);
}

SnrTriplet snr_triplet(const Placement& placement,
                       const NetworkGeometry& geometry,
                       const PropagationParams& params,
                       const ShadowDraws& shadow,
                       double path_loss_constant)
{
    for (double g : {shadow.g_uf, shadow.g_ub, shadow.g_vf})
        require(std::isfinite(g) && g > 0.0, "shadow gains must be finite and > 0");
    require(std::isfinite(path_loss_constant) && path_loss_constant > 0.0, "path-loss constant must be finite and > 0");

    const double rx_snr = params.rx_snr_linear();
    const double gain_ub = link_gain(distance(placement.u, geometry.mbs()), params, shadow.g_ub, path_loss_constant);
    const double gain_uf = link_gain(distance(placement.u, geometry.fbs()), params, shadow.g_uf, path_loss_constant);

    // U transmits with power rx_snr / gain_ub, so the FBS sees the ratio.
    SnrTriplet snr;
    snr.gamma_ub = rx_snr;
    snr.gamma_vf = rx_snr;
    snr.gamma_uf = rx_snr * (gain_uf / gain_ub);
    return snr;
}

}  // namespace femtorelay
