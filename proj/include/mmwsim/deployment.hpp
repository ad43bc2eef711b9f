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

#include "mmwsim/config.hpp"
#include "mmwsim/rng.hpp"

#include <cmath>
#include <filesystem>
#include <ostream>
#include <vector>

namespace mmwsim
{

struct Point
{
    double x = 0.0; // m
    double y = 0.0; // m

    bool operator==(const Point &) const = default;
};

inline double distance(const Point &a, const Point &b)
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

// Sites of one operator.
struct OperatorSites
{
    std::vector<Point> base_stations;
    std::vector<Point> users;

    bool operator==(const OperatorSites &) const = default;
};

// Network geometry of one iteration. The reference UE is placed at the
// center of the area on top of the sampled UEs and belongs to
// reference_operator.
struct Deployment
{
    double area_side = 0.0;
    std::vector<OperatorSites> operators;
    Point reference_ue;
    int reference_operator = 0;

    int num_operators() const { return static_cast<int>(operators.size()); }
    std::size_t total_base_stations() const;

    bool operator==(const Deployment &) const = default;
};

// Homogeneous PPP on [0, side]^2: Poisson(density * side^2 / 1e6) points,
// coordinates i.i.d. uniform. density is per km^2.
std::vector<Point> sample_ppp(double density, double area_side, RandomStream &rng);

// For each operator in order: BS pattern, then UE pattern.
Deployment build_deployment(const ScenarioConfig &config, RandomStream &rng);

// CSV "operator,role,x,y" with role in {bs, ue, reference}; operators are 1-based.
void write_deployment_csv(const Deployment &deployment, std::ostream &out);
void write_deployment_csv(const Deployment &deployment, const std::filesystem::path &path);

} // namespace mmwsim
