// SPDX-License-Identifier: Apache-2.0
//
// mmwsim: multi-operator mmWave spectrum access simulator
// Copyright (C) 2026 The mmwsim authors
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
#include <initializer_list>
#include <random>

namespace mmwsim
{

// Random stream used by every sampling routine. Streams are never shared
// between iterations; each one is derived from a key so that results do not
// depend on execution order.
using RandomStream = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Hashes a key tuple (campaign seed, density index, iteration, stage, ...)
// into a 64-bit seed. Distinct keys give unrelated streams.
constexpr std::uint64_t derive_seed(std::initializer_list<std::uint64_t> key)
{
    std::uint64_t h = 0x6a09e667f3bcc908ULL;
    for (std::uint64_t k : key)
        h = mix64(h ^ mix64(k));
    return h;
}

inline RandomStream make_stream(std::initializer_list<std::uint64_t> key)
{
    return RandomStream(derive_seed(key));
}

// Uniform in [0, 1).
inline double uniform01(RandomStream &rng)
{
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Uniform in [lo, hi).
inline double uniform(RandomStream &rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double gaussian(RandomStream &rng, double mean, double stddev)
{
    if (stddev == 0.0)
        return mean;
    return std::normal_distribution<double>(mean, stddev)(rng);
}

// Poisson draw; a non-positive mean is the degenerate distribution at 0.
inline std::uint64_t poisson(RandomStream &rng, double mean)
{
    if (!(mean > 0.0))
        return 0;
    return std::poisson_distribution<std::uint64_t>(mean)(rng);
}

} // namespace mmwsim
