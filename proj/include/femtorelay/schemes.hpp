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

#include <array>
#include <optional>
#include <string_view>

namespace femtorelay {

/// Backhaul capacities between FBS and MBS in b/s/Hz.
struct BackhaulCapacities
{
    double c_up = 0.0;
    double c_down = 0.0;

    void validate() const;
};

enum class Scheme
{
    DF,      ///< FBS decodes x_V and forwards the bits
    QF_EQ,   ///< FBS quantizes y_F ignoring the MBS observation
    QF_WZQ,  ///< FBS quantizes y_F with y_B as decoder side information
    DFQSI,   ///< DF plus a quantized copy of x_U sent down to the FBS
};

/// Which message is decoded first (the other treated as noise), then cancelled.
enum class DecodingOrder
{
    UV,
    VU,
};

inline constexpr std::array<Scheme, 4> kAllSchemes = {Scheme::DF, Scheme::QF_EQ, Scheme::QF_WZQ, Scheme::DFQSI};

std::string_view to_string(Scheme scheme);
std::string_view to_string(DecodingOrder order);
std::optional<Scheme> parse_scheme(std::string_view name);

struct RatePoint
{
    double r_u = 0.0;
    double r_v = 0.0;
    Scheme scheme = Scheme::DF;
    DecodingOrder order = DecodingOrder::UV;
};

/*!
 * Quantization noise and side-information quality for one evaluation.
 *
 * beta is sigma_Q^2 / sigma^2 for the uplink quantizer (+inf when c_up = 0,
 * NaN-free). gamma_qu is the SNR of the quantized x_U delivered over the
 * downlink, 2^c_down - 1.
 */
struct QuantizationState
{
    double beta = 0.0;
    double gamma_qu = 0.0;
};

/// log2(1 + x).
double capacity(double snr);

/// 2^bits - 1, accurate for small arguments.
double pow2_minus_one(double bits);

RatePoint df_rates(DecodingOrder order, const SnrTriplet& snr, double c_up);

/// (gamma_UF + gamma_VF + 1) / (2^c_up - 1); +inf when c_up = 0.
double beta_eq(const SnrTriplet& snr, double c_up);

/*!
 * Wyner-Ziv quantization noise ratio
 * ((gamma_VF + 1) + gamma_UF / (gamma_UB + 1)) / (2^c_up - 1); +inf when c_up = 0.
 *
 * Never exceeds beta_eq() for the same inputs, bit for bit.
 */
double beta_wzq(const SnrTriplet& snr, double c_up);

/// QF rates given the quantization noise ratio; beta = +inf yields (C(gamma_UB), 0).
RatePoint qf_rates(DecodingOrder order, const SnrTriplet& snr, double beta, Scheme quantizer = Scheme::QF_WZQ);

/// 2^c_down - 1.
double gamma_qu(double c_down);

/// DFQSI rates. The VU order does not use the downlink and equals DF-VU.
RatePoint dfqsi_rates(DecodingOrder order, const SnrTriplet& snr, const BackhaulCapacities& caps);

/// Quantizer state for any scheme (beta is 0 for DF and DFQSI, gamma_qu is 0 except for DFQSI).
QuantizationState quantization_state(Scheme scheme, const SnrTriplet& snr, const BackhaulCapacities& caps);

/// Dispatch to the rate formula of one scheme.
RatePoint scheme_rates(Scheme scheme, DecodingOrder order, const SnrTriplet& snr, const BackhaulCapacities& caps);

struct WzqIdentityCheck
{
    double beta = 0.0;
    double mutual_information = 0.0;  ///< I(Y_F; Yhat_F | Y_B) in bits
    double residual = 0.0;            ///< |mutual_information - c_up|
    bool passed = false;
};

/*!
 * Numerically confirm that beta_wzq spends exactly c_up bits.
 *
 * Builds the joint Gaussian covariance of (Y_B, Y_F, Yhat_F) from the signal
 * model with unit-power symbols and unit noise,
 *   Y_B = sqrt(gamma_UB) X_U + Z_B
 *   Y_F = sqrt(gamma_UF) X_U + sqrt(gamma_VF) X_V + Z_F
 *   Yhat_F = Y_F + Z_Q,  Var(Z_Q) = beta,
 * and evaluates I(Y_F; Yhat_F | Y_B) = log2(Var(Yhat_F | Y_B) / Var(Yhat_F | Y_F, Y_B)).
 * Y_B - Y_F - Yhat_F is a Markov chain, so the denominator is Var(Z_Q) = beta;
 * the numerator is the Schur complement of the covariance.
 *
 * Requires c_up > 0 (std::invalid_argument otherwise); a singular
 * covariance also raises std::invalid_argument.
 */
WzqIdentityCheck verify_wzq_identity(const SnrTriplet& snr, double c_up, double tolerance = 1e-9);

}  // namespace femtorelay
