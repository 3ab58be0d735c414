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

#include "femtorelay/verification.hpp"

#include "femtorelay/rate_region.hpp"
#include "femtorelay/rng.hpp"
#include "femtorelay/schemes.hpp"
#include "femtorelay/sweep_io.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace femtorelay {

namespace {

SnrTriplet random_snr(Rng& rng, double max_snr)
{
    return {max_snr * uniform01(rng), max_snr * uniform01(rng), max_snr * uniform01(rng)};
}

// Uniform on (0, hi].
double positive_uniform(Rng& rng, double hi)
{
    return hi * (1.0 - uniform01(rng));
}

double excess(double lhs, double rhs)
{
    return std::max(0.0, lhs - rhs);
}

std::array<double, 4> components(const RatePoint& uv, const RatePoint& vu)
{
    return {uv.r_u, uv.r_v, vu.r_u, vu.r_v};
}

std::array<double, 4> scheme_components(Scheme s, const SnrTriplet& snr, const BackhaulCapacities& caps)
{
    return components(scheme_rates(s, DecodingOrder::UV, snr, caps), scheme_rates(s, DecodingOrder::VU, snr, caps));
}

struct Property
{
    const char* name;
    double threshold;
    bool strict;
    // Returns the residual of one random sample.
    std::function<double(Rng&)> sample;
};

std::vector<Property> battery()
{
    std::vector<Property> props;

    props.push_back({"wzq_identity", 1e-9, true, [](Rng& rng) {
                         const SnrTriplet snr = random_snr(rng, 100.0);
                         return verify_wzq_identity(snr, positive_uniform(rng, 20.0)).residual;
                     }});

    props.push_back({"max_min_oracle", 1e-3, false, [](Rng& rng) {
                         const RatePair p1{10.0 * uniform01(rng), 10.0 * uniform01(rng)};
                         const RatePair p2{10.0 * uniform01(rng), 10.0 * uniform01(rng)};
                         return std::abs(max_min_two(p1, p2).value - max_min_oracle(RateRegion({p1, p2}), 1e-4));
                     }});

    props.push_back({"max_min_symmetry", 1e-12, false, [](Rng& rng) {
                         const RatePair p1{10.0 * uniform01(rng), 10.0 * uniform01(rng)};
                         const RatePair p2{10.0 * uniform01(rng), 10.0 * uniform01(rng)};
                         return std::abs(max_min_two(p1, p2).value - max_min_two(p2, p1).value);
                     }});

    props.push_back({"max_min_bounds", 1e-12, false, [](Rng& rng) {
                         const RatePair p1{10.0 * uniform01(rng), 10.0 * uniform01(rng)};
                         const RatePair p2{10.0 * uniform01(rng), 10.0 * uniform01(rng)};
                         const double v = max_min_two(p1, p2).value;
                         const double lower = std::max(std::min(p1.r_u, p1.r_v), std::min(p2.r_u, p2.r_v));
                         const double upper = std::min(std::max(p1.r_u, p2.r_u), std::max(p1.r_v, p2.r_v));
                         return std::max(excess(lower, v), excess(v, upper));
                     }});

    props.push_back({"beta_wzq_le_beta_eq", 0.0, false, [](Rng& rng) {
                         const SnrTriplet snr = random_snr(rng, 100.0);
                         const double c_up = positive_uniform(rng, 20.0);
                         return excess(beta_wzq(snr, c_up), beta_eq(snr, c_up));
                     }});

    props.push_back({"qf_wzq_ge_qf_eq", 0.0, false, [](Rng& rng) {
                         const SnrTriplet snr = random_snr(rng, 100.0);
                         const BackhaulCapacities caps{20.0 * uniform01(rng), 0.0};
                         const auto wzq = scheme_components(Scheme::QF_WZQ, snr, caps);
                         const auto eq = scheme_components(Scheme::QF_EQ, snr, caps);
                         double worst = 0.0;
                         for (std::size_t i = 0; i < wzq.size(); ++i)
                             worst = std::max(worst, excess(eq[i], wzq[i]));
                         return worst;
                     }});

    props.push_back({"dfqsi_ge_df", 0.0, false, [](Rng& rng) {
                         const SnrTriplet snr = random_snr(rng, 100.0);
                         const BackhaulCapacities caps{20.0 * uniform01(rng), 20.0 * uniform01(rng)};
                         const double df = df_rates(DecodingOrder::UV, snr, caps.c_up).r_u;
                         const double dfqsi = dfqsi_rates(DecodingOrder::UV, snr, caps).r_u;
                         const double at_zero = dfqsi_rates(DecodingOrder::UV, snr, {caps.c_up, 0.0}).r_u;
                         return std::max(excess(df, dfqsi), std::abs(at_zero - df));
                     }});

    props.push_back({"monotone_in_c_up", 0.0, false, [](Rng& rng) {
                         const SnrTriplet snr = random_snr(rng, 100.0);
                         const double lo = 20.0 * uniform01(rng);
                         const double hi = lo + 5.0 * uniform01(rng);
                         const double c_down = 20.0 * uniform01(rng);
                         double worst = 0.0;
                         for (Scheme s : kAllSchemes) {
                             const auto a = scheme_components(s, snr, {lo, c_down});
                             const auto b = scheme_components(s, snr, {hi, c_down});
                             for (std::size_t i = 0; i < a.size(); ++i)
                                 worst = std::max(worst, excess(a[i], b[i]));
                         }
                         return worst;
                     }});

    props.push_back({"monotone_in_c_down", 0.0, false, [](Rng& rng) {
                         const SnrTriplet snr = random_snr(rng, 100.0);
                         const double c_up = 20.0 * uniform01(rng);
                         const double lo = 20.0 * uniform01(rng);
                         const double hi = lo + 5.0 * uniform01(rng);
                         const auto a = scheme_components(Scheme::DFQSI, snr, {c_up, lo});
                         const auto b = scheme_components(Scheme::DFQSI, snr, {c_up, hi});
                         double worst = 0.0;
                         for (std::size_t i = 0; i < a.size(); ++i)
                             worst = std::max(worst, excess(a[i], b[i]));
                         return worst;
                     }});

    props.push_back({"limit_c_up_60_rate", 1e-6, true, [](Rng& rng) {
                         const SnrTriplet snr = random_snr(rng, 100.0);
                         double worst = 0.0;
                         for (Scheme s : {Scheme::QF_EQ, Scheme::QF_WZQ})
                             worst = std::max(worst, std::abs(scheme_rates(s, DecodingOrder::UV, snr, {60.0, 0.0}).r_v -
                                                              capacity(snr.gamma_vf)));
                         return worst;
                     }});

    props.push_back({"limit_c_up_60_beta", 1e-12, true, [](Rng& rng) {
                         const SnrTriplet snr = random_snr(rng, 100.0);
                         return std::max(beta_eq(snr, 60.0), beta_wzq(snr, 60.0));
                     }});

    props.push_back({"limit_c_up_0", 0.0, false, [](Rng& rng) {
                         const SnrTriplet snr = random_snr(rng, 100.0);
                         const BackhaulCapacities caps{0.0, 20.0 * uniform01(rng)};
                         double worst = 0.0;
                         for (Scheme s : kAllSchemes) {
                             const auto c = scheme_components(s, snr, caps);
                             worst = std::max({worst, c[1], c[3]});
                         }
                         for (Scheme s : {Scheme::QF_EQ, Scheme::QF_WZQ})
                             for (DecodingOrder o : {DecodingOrder::UV, DecodingOrder::VU})
                                 worst = std::max(worst, std::abs(scheme_rates(s, o, snr, caps).r_u - capacity(snr.gamma_ub)));
                         return worst;
                     }});

    return props;
}

}  // namespace

std::vector<PropertyReport> run_verification(std::size_t samples, std::uint64_t seed)
{
    if (samples == 0)
        throw std::invalid_argument("samples must be >= 1");
    const std::vector<Property> props = battery();
    std::vector<PropertyReport> reports;
    reports.reserve(props.size());
    for (std::size_t k = 0; k < props.size(); ++k) {
        const Property& p = props[k];
        Rng rng(split_seed(seed, k, 0));
        PropertyReport r;
        r.name = p.name;
        r.samples = samples;
        r.threshold = p.threshold;
        r.strict = p.strict;
        for (std::size_t i = 0; i < samples; ++i)
            r.max_residual = std::max(r.max_residual, p.sample(rng));
        r.passed = r.strict ? r.max_residual < p.threshold : r.max_residual <= p.threshold;
        reports.push_back(r);
    }
    return reports;
}

void write_verification_report(std::ostream& out, const std::vector<PropertyReport>& reports)
{
    for (const PropertyReport& r : reports) {
        out << r.name << ": max residual " << format_double(r.max_residual) << (r.strict ? " < " : " <= ")
            << format_double(r.threshold) << " (" << r.samples << " samples) " << (r.passed ? "PASS" : "FAIL") << '\n';
    }
}

}  // namespace femtorelay
