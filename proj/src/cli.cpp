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

#include "mmwsim/cli.hpp"

#include "mmwsim/config.hpp"
#include "mmwsim/montecarlo.hpp"
#include "mmwsim/results.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace mmwsim
{

namespace
{

struct RunFlags
{
    std::string config;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> iterations;
    std::optional<std::string> densities;
    std::optional<std::string> regimes;
    std::optional<std::string> cases;
    std::optional<int> jobs;
    std::optional<std::string> dump_samples;
};

ScenarioConfig load_unchecked(const std::string &path)
{
    if (path.empty())
        return default_config();
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario_unchecked(ss.str());
}

void apply_env(ScenarioConfig &config)
{
    if (const char *env = std::getenv("MMWSIM_SEED"); env && *env)
    {
        try
        {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used != std::string(env).size())
                throw std::invalid_argument("trailing characters");
            config.seed = v;
        }
        catch (const std::exception &)
        {
            throw ConfigError(0, "MMWSIM_SEED", "MMWSIM_SEED must be an unsigned integer, got '" + std::string(env) + "'");
        }
    }
}

void apply_flags(ScenarioConfig &config, const RunFlags &f)
{
    auto wrap = [](const char *flag, auto &&fn) {
        try
        {
            fn();
        }
        catch (const std::invalid_argument &ex)
        {
            throw ConfigError(0, flag, std::string(flag) + ": " + ex.what());
        }
    };
    if (f.out)
        config.campaign.output_path = *f.out;
    if (f.format)
        wrap("--format", [&] {
            if (*f.format == "csv")
                config.campaign.output_format = OutputFormat::Csv;
            else if (*f.format == "json")
                config.campaign.output_format = OutputFormat::Json;
            else
                throw std::invalid_argument("expected csv or json, got '" + *f.format + "'");
        });
    if (f.seed)
        config.seed = *f.seed;
    if (f.iterations)
        config.iterations = *f.iterations;
    if (f.densities)
        wrap("--densities", [&] { config.campaign.densities = parse_density_list(*f.densities); });
    if (f.regimes)
        wrap("--regimes", [&] { config.campaign.regimes = parse_regime_list(*f.regimes); });
    if (f.cases)
        wrap("--case", [&] { config.campaign.cases = parse_case_list(*f.cases); });
    if (f.jobs)
        config.campaign.jobs = *f.jobs;
    if (f.dump_samples)
        config.campaign.dump_samples = *f.dump_samples;
}

int report_violations(const ScenarioConfig &config, std::ostream &err)
{
    const auto errs = validation_errors(config);
    for (const auto &e : errs)
        err << "error: " << e << '\n';
    return errs.empty() ? exit_ok : exit_invalid;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Monte Carlo simulator of hybrid, licensed and pooled spectrum access in multi-operator mmWave "
                 "downlinks"};
    app.name("mmwsim");
    app.require_subcommand(1);

    RunFlags run;
    CLI::App *run_cmd = app.add_subcommand("run", "Run a density x regime x antenna-case campaign");
    run_cmd->add_option("--config", run.config, "Scenario config file (key = value)");
    run_cmd->add_option("--out", run.out, "Output path");
    run_cmd->add_option("--format", run.format, "csv or json");
    run_cmd->add_option("--seed", run.seed, "Campaign seed");
    run_cmd->add_option("--iterations", run.iterations, "Iterations per cell");
    run_cmd->add_option("--densities", run.densities, "Comma list of BS densities per km^2 per operator");
    run_cmd->add_option("--regimes", run.regimes, "Comma list of hybrid|licensed|pooled");
    run_cmd->add_option("--case", run.cases, "Antenna case i|ii (comma list allowed)");
    run_cmd->add_option("--jobs", run.jobs, "Worker threads");
    run_cmd->add_option("--dump-samples", run.dump_samples, "Write per-iteration samples CSV to this path");

    std::string dump_config;
    std::string dump_out = "deployment.csv";
    std::optional<std::uint64_t> dump_seed;
    std::uint64_t dump_iteration = 0;
    std::optional<double> dump_density;
    CLI::App *dump_cmd = app.add_subcommand("dump-deployment", "Write one iteration's geometry as CSV");
    dump_cmd->add_option("--config", dump_config, "Scenario config file");
    dump_cmd->add_option("--out", dump_out, "Output CSV path");
    dump_cmd->add_option("--seed", dump_seed, "Campaign seed");
    dump_cmd->add_option("--iteration", dump_iteration, "Iteration index");
    dump_cmd->add_option("--density", dump_density, "BS density per km^2 per operator");

    std::string validate_config;
    CLI::App *validate_cmd = app.add_subcommand("validate", "Check a config file and list violations");
    validate_cmd->add_option("--config", validate_config, "Scenario config file")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try
    {
        if (*validate_cmd)
        {
            const ScenarioConfig config = load_unchecked(validate_config);
            const int code = report_violations(config, err);
            if (code == exit_ok)
                out << validate_config << ": ok\n";
            return code;
        }

        if (*dump_cmd)
        {
            ScenarioConfig config = load_unchecked(dump_config);
            apply_env(config);
            if (dump_seed)
                config.seed = *dump_seed;
            if (dump_density)
                config.bs_density = *dump_density;
            if (const int code = report_violations(config, err); code != exit_ok)
                return code;
            write_deployment_csv(world_deployment(config, config.seed, 0, dump_iteration), dump_out);
            out << "wrote " << dump_out << '\n';
            return exit_ok;
        }

        ScenarioConfig config = load_unchecked(run.config);
        apply_env(config);
        apply_flags(config, run);
        if (const int code = report_violations(config, err); code != exit_ok)
            return code;

        const CampaignStats stats = run_campaign(config, campaign_spec(config));
        write_results(stats, config.campaign.output_format, config.campaign.output_path);
        if (!config.campaign.dump_samples.empty())
            write_samples(stats, config.campaign.dump_samples);
        out << "wrote " << 2 * stats.rows.size() << " rows to " << config.campaign.output_path << '\n';
        return exit_ok;
    }
    catch (const ConfigError &e)
    {
        err << "config error: " << e.what() << '\n';
        return exit_invalid;
    }
    catch (const ValidationError &e)
    {
        err << e.what() << '\n';
        return exit_invalid;
    }
    catch (const std::exception &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_runtime_error;
    }
}

} // namespace mmwsim
