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

#include "mmwsim/results.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <tuple>

namespace mmwsim
{

namespace
{

std::string fixed(double v)
{
    if (!std::isfinite(v))
        return v > 0 ? "inf" : (v < 0 ? "-inf" : "nan");
    char buf[512];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
    return std::string(buf, ptr);
}

void write_file(const std::filesystem::path &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out)
        throw std::runtime_error("write to '" + path.string() + "' failed");
}

} // namespace

std::vector<OutputRow> output_rows(const CampaignStats &stats)
{
    std::vector<const StatRow *> sorted;
    for (const auto &r : stats.rows)
        sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(), [](const StatRow *a, const StatRow *b) {
        return std::tuple(a->antenna_case, a->regime, a->density) < std::tuple(b->antenna_case, b->regime, b->density);
    });

    std::vector<OutputRow> rows;
    for (const StatRow *r : sorted)
    {
        const std::string regime(regime_name(r->regime));
        const std::string ant(case_name(r->antenna_case));
        rows.push_back({r->density, regime, ant, "p5", r->p5, r->samples});
        rows.push_back({r->density, regime, ant, "p50", r->p50, r->samples});
    }
    return rows;
}

std::string format_csv(const std::vector<OutputRow> &rows)
{
    std::string out = csv_header;
    out += '\n';
    for (const auto &r : rows)
    {
        out += fixed(r.density);
        out += ',' + r.regime + ',' + r.antenna_case + ',' + r.percentile + ',';
        out += fixed(r.throughput_bps);
        out += ',' + std::to_string(r.samples) + '\n';
    }
    return out;
}

std::string format_json(const std::vector<OutputRow> &rows)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : rows)
        arr.push_back({{"density", r.density},
                       {"regime", r.regime},
                       {"case", r.antenna_case},
                       {"percentile", r.percentile},
                       {"throughput_bps", r.throughput_bps},
                       {"samples", r.samples}});
    return arr.dump(2) + "\n";
}

void write_results(const CampaignStats &stats, OutputFormat format, const std::filesystem::path &path)
{
    if (stats.rows.empty())
        throw std::invalid_argument("write_results: no statistics to write");
    const auto rows = output_rows(stats);
    write_file(path, format == OutputFormat::Csv ? format_csv(rows) : format_json(rows));
}

std::string format_samples_csv(const CampaignStats &stats)
{
    std::string out = "case,regime,density,iteration,rate_bps,sinr_db,carrier,bs,load\n";
    for (const auto &s : stats.samples)
    {
        const IterationResult &r = s.result;
        out += std::string(case_name(s.antenna_case)) + ',' + std::string(regime_name(r.regime)) + ',';
        out += fixed(r.density) + ',' + std::to_string(r.iteration) + ',' + fixed(r.rate) + ',';
        out += (r.carrier ? fixed(r.sinr_db) : std::string()) + ',';
        out += (r.carrier ? std::string(carrier_key(*r.carrier)) : std::string()) + ',';
        out += (r.bs ? std::to_string(*r.bs) : std::string()) + ',' + std::to_string(r.load) + '\n';
    }
    return out;
}

void write_samples(const CampaignStats &stats, const std::filesystem::path &path)
{
    write_file(path, format_samples_csv(stats));
}

} // namespace mmwsim
