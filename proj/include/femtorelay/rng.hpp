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

#include <cstdint>
#include <random>
#include <string_view>

namespace femtorelay {

/// Per-trial random engine. Every trial owns one, seeded from split_seed().
using Rng = std::mt19937_64;

/// Name of the seed mixer, written into sweep metadata.
inline constexpr std::string_view kSeedMixer = 
    "h=sm64(master); h=sm64(h^(value_index+0x632be59bd9b4e019)); h=sm64(h^(trial_index+0x8cb92ba72f3d8dd7)); mt19937_64(h)";

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/*!
 * Derive an independent stream seed for one trial.
 *
 * The three integers are chained through the SplitMix64 finalizer so that
 * neighbouring (value_index, trial_index) pairs land on unrelated seeds.
 */
constexpr std::uint64_t split_seed(std::uint64_t master_seed,
                                   std::uint64_t value_index,
                                   std::uint64_t trial_index)
{
    std::uint64_t h = splitmix64(master_seed);
    h = splitmix64(h ^ (value_index + 0x632be59bd9b4e019ULL));
    h = splitmix64(h ^ (trial_index + 0x8cb92ba72f3d8dd7ULL));
    return h;
}

/// Uniform double on [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(Rng& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace femtorelay
