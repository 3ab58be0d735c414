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

#include "femtorelay/rng.hpp"

namespace femtorelay {

struct Point2
{
    double x = 0.0;
    double y = 0.0;
};

double distance(Point2 a, Point2 b);

/*!
 * Two-cell layout. The macro base station sits at the origin and the femto
 * base station at (s_o, 0). Distances in meters.
 */
struct NetworkGeometry
{
    double s_o = 150.0;
    double r_m = 200.0;  ///< macrocell radius
    double r_f = 20.0;   ///< femtocell radius

    Point2 mbs() const { return {0.0, 0.0}; }
    Point2 fbs() const { return {s_o, 0.0}; }

    /// Throws std::invalid_argument unless s_o >= 0 and 0 < r_f < r_m.
    void validate() const;
};

/*!
 * Path loss, shadowing and power-control parameters.
 *
 * Shadowing is log-normal with zero mean in dB; shadow_sigma_db = 0 turns it
 * off. rx_snr_db is the received SNR the power control targets on the
 * U->MBS and V->FBS links.
 */
struct PropagationParams
{
    double alpha = 3.0;
    double shadow_sigma_db = 8.0;
    double d_min = 1.0;
    double rx_snr_db = 10.0;

    double rx_snr_linear() const;
    void validate() const;
};

/// Macro user U and femto user V positions.
struct Placement
{
    Point2 u;
    Point2 v;
};

/// Linear shadowing gains g for each link, 1 when shadowing is off.
struct ShadowDraws
{
    double g_uf = 1.0;
    double g_ub = 1.0;
    double g_vf = 1.0;
};

/*!
 * The three SNRs (linear) that drive every rate formula.
 *
 * The V->MBS link is taken as zero and has no field.
 */
struct SnrTriplet
{
    double gamma_uf = 0.0;  ///< U's signal at the FBS
    double gamma_vf = 0.0;  ///< V's signal at the FBS
    double gamma_ub = 0.0;  ///< U's signal at the MBS

    /// Throws std::invalid_argument on negative or non-finite entries.
    void validate() const;
};

double db_to_linear(double db);

/// Point uniform (by area) on the disk of the given radius around center.
Point2 sample_in_disk(Rng& rng, Point2 center, double radius);

Placement sample_placement(Rng& rng, const NetworkGeometry& geometry);

/// Independent log-normal gains per link; all ones if shadowing is off.
ShadowDraws sample_shadowing(Rng& rng, const PropagationParams& params);

/// Power gain K * g / d^alpha of one link, distance clamped below at d_min.
double link_gain(double distance_m, const PropagationParams& params, double shadow, double path_loss_constant = 1.0);

/*!
 * SNR triplet under perfect power control.
 *
 * U and V invert their channels toward their own base stations, so
 * gamma_ub = gamma_vf = rx SNR and
 * gamma_uf = rx SNR * |h_UF|^2 / |h_UB|^2 = rx SNR * (d_UB / d_UF)^alpha * g_UF / g_UB.
 * path_loss_constant multiplies both link gains and cancels; it exists so
 * tests can check that it does.
 *
 * Throws std::invalid_argument on non-finite or non-positive shadow gains.
 */
SnrTriplet snr_triplet(const Placement& placement,
                       const NetworkGeometry& geometry,
                       const PropagationParams& params,
                       const ShadowDraws& shadow = {},
                       double path_loss_constant = 1.0);

}  // namespace femtorelay
