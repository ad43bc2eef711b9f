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

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mmwsim
{

enum class Licensing
{
    Exclusive, // each operator owns total_bandwidth / M
    Pooled     // all operators share total_bandwidth
};

// The two carriers of the scenario. The enumerator order is the carrier
// frequency order and is used as the tie-break order.
enum class Carrier : int
{
    Band28 = 0,
    Band73 = 1
};
inline constexpr std::array<Carrier, 2> all_carriers = {Carrier::Band28, Carrier::Band73};
inline constexpr std::size_t index_of(Carrier c) { return static_cast<std::size_t>(c); }

// Labels used in config keys and outputs ("28ghz", "73ghz").
std::string_view carrier_key(Carrier c);

// Pathloss model PL = alpha + beta * 10 log10(d) + xi, xi ~ N(0, sigma^2), per state.
struct PathlossParams
{
    double alpha_los = 0.0;
    double beta_los = 0.0;
    double sigma_los = 0.0;
    double alpha_nlos = 0.0;
    double beta_nlos = 0.0;
    double sigma_nlos = 0.0;

    bool operator==(const PathlossParams &) const = default;
};

struct BandConfig
{
    double carrier_frequency = 0.0; // Hz
    double total_bandwidth = 0.0;   // Hz, before any split among operators
    Licensing licensing = Licensing::Exclusive;
    int n_tx = 0;                   // BS array elements
    int n_rx = 0;                   // UE array elements
    double tx_power = 30.0;         // dBm per carrier
    PathlossParams pathloss;
    double cluster_mean = 1.0;      // mean of the Poisson cluster count
    double r_tau = 2.8;             // power-spread decay exponent
    double zeta = 4.0;              // dB, per-cluster shadowing std

    bool operator==(const BandConfig &) const = default;
};

struct BlockageParams
{
    double a_out = 0.0334; // 1/m
    double b_out = 5.2;
    double a_los = 0.0149; // 1/m

    bool operator==(const BlockageParams &) const = default;
};

// Which pathloss realization ranks candidate BSs during background association.
enum class AssociationRule
{
    Band28,
    Band73,
    MinOverBands
};

struct AngleParams
{
    double subpath_spread_deg = 10.0; // std of sub-path offsets around the cluster center
    double elevation_max_deg = 45.0;  // cluster central elevation ~ U[-max, max]
    bool geometric_anchor = false;    // first cluster centered on the BS-UE bearing

    bool operator==(const AngleParams &) const = default;
};

enum class Regime
{
    Hybrid,   // exclusive at 28 GHz, pooled at 73 GHz
    Licensed, // exclusive at both
    Pooled    // pooled at both
};
std::string_view regime_name(Regime r);
Regime parse_regime(std::string_view name);

enum class AntennaCase
{
    I, // 64/16 at both carriers
    II // 64/16 at 28 GHz, 256/64 at 73 GHz
};
std::string_view case_name(AntennaCase c);
AntennaCase parse_case(std::string_view name);

enum class OutputFormat
{
    Csv,
    Json
};

// Sweep settings. Every CLI flag has an equivalent key here.
struct CampaignSettings
{
    std::vector<double> densities = {30.0, 60.0, 120.0};
    std::vector<Regime> regimes = {Regime::Hybrid, Regime::Licensed, Regime::Pooled};
    std::vector<AntennaCase> cases = {AntennaCase::I, AntennaCase::II};
    int jobs = 1;
    std::string output_path = "results.csv";
    OutputFormat output_format = OutputFormat::Csv;
    std::string dump_samples; // empty: no per-iteration dump

    bool operator==(const CampaignSettings &) const = default;
};

struct ScenarioConfig
{
    int num_operators = 4;
    double bs_density = 30.0;  // BS per km^2 per operator
    double ue_density = 100.0; // UE per km^2 per operator
    double area_side = 1000.0; // m
    std::array<BandConfig, 2> bands;
    double p28 = 0.5;
    std::int64_t iterations = 10000;
    double noise_psd = -174.0; // dBm/Hz
    double noise_figure = 7.0; // dB
    std::uint64_t seed = 1;
    BlockageParams blockage;
    AssociationRule association_rule = AssociationRule::Band28;
    AngleParams angles;
    double element_spacing = 0.5; // wavelengths
    CampaignSettings campaign;

    const BandConfig &band(Carrier c) const { return bands[index_of(c)]; }
    BandConfig &band(Carrier c) { return bands[index_of(c)]; }

    bool operator==(const ScenarioConfig &) const = default;
};

// All defaults; see README for the key table and provenance of each value.
ScenarioConfig default_config();

// Sets the antenna counts of both bands to the named case.
void apply_case(ScenarioConfig &config, AntennaCase c);

// Thrown on malformed config text. line() is 1-based, 0 when not line-specific.
class ConfigError : public std::runtime_error
{
  public:
    ConfigError(std::size_t line, std::string key, const std::string &what);
    std::size_t line() const noexcept { return line_; }
    const std::string &key() const noexcept { return key_; }

  private:
    std::size_t line_;
    std::string key_;
};

// Thrown by validate(); carries every violated invariant.
class ValidationError : public std::runtime_error
{
  public:
    explicit ValidationError(std::vector<std::string> violations);
    const std::vector<std::string> &violations() const noexcept { return violations_; }

  private:
    std::vector<std::string> violations_;
};

// Parses the key = value format. Absent keys keep their defaults; unknown
// keys and unparsable values raise ConfigError. The result is validated.
ScenarioConfig parse_scenario(std::string_view text);
ScenarioConfig load_scenario(const std::filesystem::path &path);

// Like parse_scenario but without the final validation step.
ScenarioConfig parse_scenario_unchecked(std::string_view text);

// Writes every key; parse_scenario(serialize(c)) == c for valid configs.
std::string serialize(const ScenarioConfig &config);

// Empty when the config satisfies all invariants.
std::vector<std::string> validation_errors(const ScenarioConfig &config);

// Returns the config unchanged, or throws ValidationError.
const ScenarioConfig &validate(const ScenarioConfig &config);

// UPA element-count rule: n must be a power of two.
bool is_valid_array_size(int n);

// Helpers shared with the CLI for comma lists.
std::vector<double> parse_density_list(std::string_view text);
std::vector<Regime> parse_regime_list(std::string_view text);
std::vector<AntennaCase> parse_case_list(std::string_view text);

} // namespace mmwsim
