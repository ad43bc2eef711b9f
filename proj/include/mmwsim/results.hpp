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
#include "mmwsim/montecarlo.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace mmwsim
{

// One plotted point: a percentile of one (density, regime, case) cell.
struct OutputRow
{
    double density = 0.0;
    std::string regime;
    std::string antenna_case;
    std::string percentile; // "p5" or "p50"
    double throughput_bps = 0.0;
    std::size_t samples = 0;

    bool operator==(const OutputRow &) const = default;
};

inline constexpr const char *csv_header = "density,regime,case,percentile,throughput_bps,samples";

// Two rows per stats row, sorted by (case, regime, density, percentile).
std::vector<OutputRow> output_rows(const CampaignStats &stats);

// Header plus one line per row, '\n' line endings, shortest round-trip
// fixed-point numbers.
std::string format_csv(const std::vector<OutputRow> &rows);

// Array of objects with the CSV column names as keys.
std::string format_json(const std::vector<OutputRow> &rows);

// Throws std::invalid_argument for empty stats and std::runtime_error naming
// the path on I/O failure.
void write_results(const CampaignStats &stats, OutputFormat format, const std::filesystem::path &path);

// Per-iteration dump: case,regime,density,iteration,rate_bps,sinr_db,carrier,bs,load
std::string format_samples_csv(const CampaignStats &stats);
void write_samples(const CampaignStats &stats, const std::filesystem::path &path);

} // namespace mmwsim
