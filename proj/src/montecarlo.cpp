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

#include "mmwsim/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <exception>
#include <thread>
#include <tuple>

namespace mmwsim
{

namespace
{

enum Stage : std::uint64_t
{
    StageDeployment = 1,
    StageBackgroundLinks = 2,
    StageBandAssignment = 3,
    StageInterfererBeams = 4,
    StageReferenceLinks = 5,
};

} // namespace

World build_world(const ScenarioConfig &config, std::uint64_t seed, std::uint64_t density_index,
                  std::uint64_t iteration)
{
    auto stream = [&](Stage s) { return make_stream({seed, density_index, iteration, s}); };
    World w;
    {
        auto rng = stream(StageDeployment);
        w.deployment = build_deployment(config, rng);
    }
    {
        auto rng = stream(StageBackgroundLinks);
        w.background = draw_background_links(w.deployment, config, rng);
    }
    {
        auto rng = stream(StageBandAssignment);
        w.table = random_band_assignment(min_pathloss_association(w.deployment, w.background, config.association_rule),
                                         config.p28, rng);
    }
    {
        auto rng = stream(StageInterfererBeams);
        w.beams = draw_interferer_beams(w.deployment, w.table, config, rng);
    }
    {
        auto rng = stream(StageReferenceLinks);
        w.reference = draw_reference_links(w.deployment, config, rng);
    }
    return w;
}

Deployment world_deployment(const ScenarioConfig &config, std::uint64_t seed, std::uint64_t density_index,
                            std::uint64_t iteration)
{
    auto rng = make_stream({seed, density_index, iteration, StageDeployment});
    return build_deployment(config, rng);
}

IterationResult evaluate_world(const World &world, const ScenarioConfig &config, Regime regime)
{
    const ReferenceEvaluator evaluator(world.scene(), config, make_regime(regime, config));
    const Selection s = evaluator.best();
    IterationResult r;
    r.rate = s.rate;
    r.carrier = s.carrier;
    r.bs = s.bs;
    r.sinr = s.sinr;
    r.sinr_db = s.assigned() ? 10.0 * std::log10(s.sinr) : -std::numeric_limits<double>::infinity();
    r.load = s.load;
    r.bandwidth_hz = s.bandwidth_hz;
    r.regime = regime;
    r.density = config.bs_density;
    r.seed = config.seed;
    return r;
}

IterationResult run_iteration(const ScenarioConfig &config, Regime regime, std::int64_t iteration,
                              std::uint64_t density_index)
{
    const World world = build_world(config, config.seed, density_index, static_cast<std::uint64_t>(iteration));
    IterationResult r = evaluate_world(world, config, regime);
    r.iteration = iteration;
    return r;
}

double percentile(std::span<const double> samples, double q)
{
    if (samples.empty())
        throw std::invalid_argument("percentile: empty sample set");
    if (!(q >= 0.0 && q <= 1.0))
        throw std::invalid_argument("percentile: q must be in [0, 1]");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

CampaignSpec campaign_spec(const ScenarioConfig &config)
{
    return {config.campaign.densities, config.campaign.regimes, config.campaign.cases, config.campaign.jobs};
}

std::vector<double> CampaignStats::rates(AntennaCase c, Regime r, double density) const
{
    std::vector<double> out;
    for (const auto &s : samples)
        if (s.antenna_case == c && s.result.regime == r && s.result.density == density)
            out.push_back(s.result.rate);
    return out;
}

const StatRow &CampaignStats::row(AntennaCase c, Regime r, double density) const
{
    for (const auto &row : rows)
        if (row.antenna_case == c && row.regime == r && row.density == density)
            return row;
    throw std::out_of_range("no statistics row for the requested cell");
}

CampaignStats run_campaign(const ScenarioConfig &config, const CampaignSpec &spec)
{
    if (spec.densities.empty() || spec.regimes.empty() || spec.cases.empty())
        throw std::invalid_argument("run_campaign: density, regime and case lists must be non-empty");
    validate(config);

    const std::size_t n_iter = static_cast<std::size_t>(config.iterations);
    const std::size_t n_cases = spec.cases.size();
    const std::size_t n_regimes = spec.regimes.size();
    const std::size_t per_world = n_cases * n_regimes;
    const std::size_t n_units = spec.densities.size() * n_iter;

    std::vector<ScenarioConfig> density_configs;
    for (double d : spec.densities)
    {
        ScenarioConfig c = config;
        c.bs_density = d;
        density_configs.push_back(c);
    }

    std::vector<SampleRecord> samples(n_units * per_world);
    auto work = [&](std::size_t unit) {
        const std::size_t di = unit / n_iter;
        const std::size_t it = unit % n_iter;
        const World world = build_world(density_configs[di], config.seed, di, it);
        for (std::size_t ci = 0; ci < n_cases; ++ci)
        {
            ScenarioConfig cfg = density_configs[di];
            apply_case(cfg, spec.cases[ci]);
            for (std::size_t ri = 0; ri < n_regimes; ++ri)
            {
                SampleRecord &rec = samples[unit * per_world + ci * n_regimes + ri];
                rec.antenna_case = spec.cases[ci];
                rec.density_index = di;
                rec.result = evaluate_world(world, cfg, spec.regimes[ri]);
                rec.result.iteration = static_cast<std::int64_t>(it);
            }
        }
    };

    const std::size_t jobs = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(spec.jobs, 1)), 1, n_units);
    if (jobs == 1)
    {
        for (std::size_t u = 0; u < n_units; ++u)
            work(u);
    }
    else
    {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::atomic<bool> failed{false};
        {
            std::vector<std::jthread> workers;
            for (std::size_t j = 0; j < jobs; ++j)
                workers.emplace_back([&] {
                    for (std::size_t u = next++; u < n_units && !failed; u = next++)
                    {
                        try
                        {
                            work(u);
                        }
                        catch (...)
                        {
                            if (!failed.exchange(true))
                                failure = std::current_exception();
                        }
                    }
                });
        }
        if (failure)
            std::rethrow_exception(failure);
    }

    CampaignStats stats;
    for (std::size_t di = 0; di < spec.densities.size(); ++di)
        for (std::size_t ci = 0; ci < n_cases; ++ci)
            for (std::size_t ri = 0; ri < n_regimes; ++ri)
            {
                std::vector<double> rates;
                rates.reserve(n_iter);
                for (std::size_t it = 0; it < n_iter; ++it)
                    rates.push_back(samples[(di * n_iter + it) * per_world + ci * n_regimes + ri].result.rate);
                StatRow row;
                row.antenna_case = spec.cases[ci];
                row.regime = spec.regimes[ri];
                row.density = spec.densities[di];
                row.samples = rates.size();
                row.p5 = percentile(rates, 0.05);
                row.p50 = percentile(rates, 0.50);
                row.mean = std::accumulate(rates.begin(), rates.end(), 0.0) / static_cast<double>(rates.size());
                row.seed = config.seed;
                stats.rows.push_back(row);
            }
    std::stable_sort(stats.rows.begin(), stats.rows.end(), [](const StatRow &a, const StatRow &b) {
        return std::tuple(a.antenna_case, a.regime, a.density) < std::tuple(b.antenna_case, b.regime, b.density);
    });
    stats.samples = std::move(samples);
    return stats;
}

} // namespace mmwsim
