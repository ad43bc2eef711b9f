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

#include <vector>

namespace mmwsim
{

// Pointing direction in radians. Azimuth in [0, 2pi), elevation measured
// from the horizontal plane.
struct Direction
{
    double azimuth = 0.0;
    double elevation = 0.0;

    bool operator==(const Direction &) const = default;
};

// One ray of a scattering cluster.
struct SubPath
{
    double power_fraction = 0.0; // share of the link's channel energy
    double phase = 0.0;          // small-scale phase, radians
    Direction arrival;           // AoA at the UE
    Direction departure;         // AoD at the BS
};

struct Cluster
{
    std::vector<SubPath> subpaths;
};

// Power fractions over all sub-paths sum to one.
struct ClusterSet
{
    std::vector<Cluster> clusters;

    std::size_t num_subpaths() const
    {
        std::size_t n = 0;
        for (const auto &c : clusters)
            n += c.subpaths.size();
        return n;
    }
};

} // namespace mmwsim
