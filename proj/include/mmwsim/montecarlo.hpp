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

#include "mmwsim/association.hpp"
#include "mmwsim/config.hpp"
#include "mmwsim/deployment.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace mmwsim
{

// Everything random about one iteration. It depends on the config only
// through the geometry, densities, blockage, pathloss, cluster and angle
// parameters: antenna counts and the licensing regime are applied later, so
// one world serves every (regime, antenna case) pair.
struct World
{
    Deployment deployment;
    BackgroundLinks background;
    AssociationTable table;
    InterfererBeams beams;
    ReferenceLinks reference;

    ReferenceScene scene() const { return {deployment, table, reference, beams}; }
};

// Stages draw from independent streams keyed by
// (seed, density_index, iteration, stage).
World build_world(const ScenarioConfig &config, std::uint64_t seed, std::uint64_t density_index,
                  std::uint64_t iteration);

// Only the geometry stage of build_world, for debugging dumps.
Deployment world_deployment(const ScenarioConfig &config, std::uint64_t seed, std::uint64_t density_index,
                            std::uint64_t iteration);

struct IterationResult
{
    double rate = 0.0; // bit/s of the reference UE; 0 iff unassigned
    std::optional<Carrier> carrier;
    std::optional<int> bs;
    double sinr = 0.0; // linear
    double sinr_db = -std::numeric_limits<double>::infinity();
    int load = 0;      // UEs already on the chosen (BS, carrier)
    double bandwidth_hz = 0.0;
    Regime regime = Regime::Hybrid;
    double density = 0.0;
    std::uint64_t seed = 0;
    std::int64_t iteration = 0;

    bool operator==(const IterationResult &) const = default;
};

// Reference-UE selection in a prebuilt world; antenna counts from config.
IterationResult evaluate_world(const World &world, const ScenarioConfig &config, Regime regime);

// Full pipeline for one iteration at config.bs_density.
IterationResult run_iteration(const ScenarioConfig &config, Regime regime, std::int64_t iteration,
                              std::uint64_t density_index = 0);

// Linear interpolation between order statistics at position q (n - 1).
// Throws std::invalid_argument on empty input or q outside [0, 1].
double percentile(std::span<const double> samples, double q);

struct StatRow
{
    AntennaCase antenna_case = AntennaCase::I;
    Regime regime = Regime::Hybrid;
    double density = 0.0;
    std::size_t samples = 0;
    double p5 = 0.0;
    double p50 = 0.0;
    double mean = 0.0;
    std::uint64_t seed = 0;

    bool operator==(const StatRow &) const = default;
};

struct SampleRecord
{
    AntennaCase antenna_case = AntennaCase::I;
    std::size_t density_index = 0;
    IterationResult result;

    bool operator==(const SampleRecord &) const = default;
};

struct CampaignSpec
{
    std::vector<double> densities;
    std::vector<Regime> regimes;
    std::vector<AntennaCase> cases;
    int jobs = 1;
};

CampaignSpec campaign_spec(const ScenarioConfig &config);

struct CampaignStats
{
    std::vector<StatRow> rows;          // sorted by (case, regime, density)
    std::vector<SampleRecord> samples;  // sorted by (density, iteration, case, regime)

    // Rates of one cell, ordered by iteration.
    std::vector<double> rates(AntennaCase c, Regime r, double density) const;
    const StatRow &row(AntennaCase c, Regime r, double density) const;
};

// config.iterations iterations per (density, regime, case). Worlds are shared
// across regimes and cases (common random numbers). Work is split over
// spec.jobs threads; results do not depend on the job count.
CampaignStats run_campaign(const ScenarioConfig &config, const CampaignSpec &spec);

} // namespace mmwsim
