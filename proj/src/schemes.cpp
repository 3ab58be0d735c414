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

#include "femtorelay/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace femtorelay {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_capacity(double c, const char* message)
{
    if (!std::isfinite(c) || c < 0.0)
        throw std::invalid_argument(message);
}

// Sources (X_U, X_V, Z_B, Z_F, Z_Q), mixed into observations (Y_B, Y_F, Yhat_F).
constexpr std::size_t kSources = 5;
constexpr std::size_t kObservations = 3;
using Mixing = std::array<std::array<double, kSources>, kObservations>;
using Covariance = std::array<std::array<double, kObservations>, kObservations>;

Covariance covariance(const Mixing& mix, const std::array<double, kSources>& source_var)
{
    Covariance cov{};
    for (std::size_t i = 0; i < kObservations; ++i)
        for (std::size_t j = 0; j < kObservations; ++j)
            for (std::size_t k = 0; k < kSources; ++k)
                cov[i][j] += mix[i][k] * source_var[k] * mix[j][k];
    return cov;
}

}  // namespace

void BackhaulCapacities::validate() const
{
    require_capacity(c_up, "c_up must be finite and >= 0");
    require_capacity(c_down, "c_down must be finite and >= 0");
}

std::string_view to_string(Scheme scheme)
{
    switch (scheme) {
    case Scheme::DF: return "DF";
    case Scheme::QF_EQ: return "QF_EQ";
    case Scheme::QF_WZQ: return "QF_WZQ";
    case Scheme::DFQSI: return "DFQSI";
    }
    return "?";
}

std::string_view to_string(DecodingOrder order)
{
    return order == DecodingOrder::UV ? "UV" : "VU";
}

std::optional<Scheme> parse_scheme(std::string_view name)
{
    for (Scheme s : kAllSchemes)
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

double capacity(double snr)
{
    return std::log1p(snr) / std::numbers::ln2;
}

double pow2_minus_one(double bits)
{
    return std::expm1(bits * std::numbers::ln2);
}

RatePoint df_rates(DecodingOrder order, const SnrTriplet& snr, double c_up)
{
    RatePoint p{0.0, 0.0, Scheme::DF, order};
    if (order == DecodingOrder::UV) {
        p.r_u = std::min(capacity(snr.gamma_uf / (snr.gamma_vf + 1.0)), capacity(snr.gamma_ub));
        p.r_v = std::min(c_up, capacity(snr.gamma_vf));
    } else {
        p.r_v = std::min(c_up, capacity(snr.gamma_vf / (snr.gamma_uf + 1.0)));
        p.r_u = capacity(snr.gamma_ub);
    }
    return p;
}

// Both betas share the summation order (gamma_VF + 1) + x so that
// beta_wzq <= beta_eq survives rounding.
double beta_eq(const SnrTriplet& snr, double c_up)
{
    if (c_up == 0.0)
        return kInf;
    return ((snr.gamma_vf + 1.0) + snr.gamma_uf) / pow2_minus_one(c_up);
}

double beta_wzq(const SnrTriplet& snr, double c_up)
{
    if (c_up == 0.0)
        return kInf;
    return ((snr.gamma_vf + 1.0) + snr.gamma_uf / (snr.gamma_ub + 1.0)) / pow2_minus_one(c_up);
}

RatePoint qf_rates(DecodingOrder order, const SnrTriplet& snr, double beta, Scheme quantizer)
{
    RatePoint p{0.0, 0.0, quantizer, order};
    if (std::isinf(beta)) {
        // Nothing crosses the backhaul: MBS decodes U from y_B alone.
        p.r_u = capacity(snr.gamma_ub);
        return p;
    }
    if (order == DecodingOrder::UV) {
        p.r_u = capacity(snr.gamma_ub + snr.gamma_uf / (snr.gamma_vf + 1.0 + beta));
        p.r_v = capacity(snr.gamma_vf / (1.0 + beta));
    } else {
        p.r_u = capacity(snr.gamma_ub + snr.gamma_uf / (1.0 + beta));
        p.r_v = capacity(snr.gamma_vf / (snr.gamma_uf / (snr.gamma_ub + 1.0) + 1.0 + beta));
    }
    return p;
}

double gamma_qu(double c_down)
{
    return pow2_minus_one(c_down);
}

RatePoint dfqsi_rates(DecodingOrder order, const SnrTriplet& snr, const BackhaulCapacities& caps)
{
    RatePoint p = df_rates(order, snr, caps.c_up);
    p.scheme = Scheme::DFQSI;
    if (order == DecodingOrder::UV) {
        const double side = gamma_qu(caps.c_down);
        p.r_u = std::min(capacity(side + snr.gamma_uf / (snr.gamma_vf + 1.0)), capacity(snr.gamma_ub));
    }
    return p;
}

QuantizationState quantization_state(Scheme scheme, const SnrTriplet& snr, const BackhaulCapacities& caps)
{
    switch (scheme) {
    case Scheme::QF_EQ: return {beta_eq(snr, caps.c_up), 0.0};
    case Scheme::QF_WZQ: return {beta_wzq(snr, caps.c_up), 0.0};
    case Scheme::DFQSI: return {0.0, gamma_qu(caps.c_down)};
    case Scheme::DF: break;
    }
    return {};
}

RatePoint scheme_rates(Scheme scheme, DecodingOrder order, const SnrTriplet& snr, const BackhaulCapacities& caps)
{
    switch (scheme) {
    case Scheme::DF: return df_rates(order, snr, caps.c_up);
    case Scheme::QF_EQ: return qf_rates(order, snr, beta_eq(snr, caps.c_up), Scheme::QF_EQ);
    case Scheme::QF_WZQ: return qf_rates(order, snr, beta_wzq(snr, caps.c_up), Scheme::QF_WZQ);
    case Scheme::DFQSI: return dfqsi_rates(order, snr, caps);
    }
    throw std::invalid_argument("unknown scheme");
}

WzqIdentityCheck verify_wzq_identity(const SnrTriplet& snr, double c_up, double tolerance)
{
    snr.validate();
    if (!(std::isfinite(c_up) && c_up > 0.0))
        throw std::invalid_argument("identity check needs finite c_up > 0");

    WzqIdentityCheck out;
    out.beta = beta_wzq(snr, c_up);

    const double a_ub = std::sqrt(snr.gamma_ub);
    const double a_uf = std::sqrt(snr.gamma_uf);
    const double a_vf = std::sqrt(snr.gamma_vf);
    const Mixing mix = {{
        {a_ub, 0.0, 1.0, 0.0, 0.0},   // Y_B
        {a_uf, a_vf, 0.0, 1.0, 0.0},  // Y_F
        {a_uf, a_vf, 0.0, 1.0, 1.0},  // Yhat_F
    }};
    const Covariance cov = covariance(mix, {1.0, 1.0, 1.0, 1.0, out.beta});
    constexpr std::size_t kB = 0, kQ = 2;

    if (!(cov[kB][kB] > 0.0) || !(out.beta > 0.0))
        throw std::invalid_argument("singular covariance");

    const double var_q_given_b = cov[kQ][kQ] - cov[kQ][kB] * cov[kQ][kB] / cov[kB][kB];
    const double var_q_given_fb = out.beta;
    out.mutual_information = std::log2(var_q_given_b / var_q_given_fb);
    out.residual = std::abs(out.mutual_information - c_up);
    out.passed = out.residual < tolerance;
    return out;
}

}  // namespace femtorelay
