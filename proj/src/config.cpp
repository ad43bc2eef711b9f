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

#include "mmwsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace mmwsim
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view text)
{
    std::vector<std::string_view> out;
    while (true)
    {
        const auto pos = text.find(',');
        out.push_back(trim(text.substr(0, pos)));
        if (pos == std::string_view::npos)
            break;
        text.remove_prefix(pos + 1);
    }
    return out;
}

double to_double(std::string_view s)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("expected a number, got '" + std::string(s) + "'");
    return v;
}

template <typename Int>
Int to_integer(std::string_view s)
{
    s = trim(s);
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("expected an integer, got '" + std::string(s) + "'");
    return v;
}

std::string format_double(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

bool to_bool(std::string_view s)
{
    s = trim(s);
    if (s == "true")
        return true;
    if (s == "false")
        return false;
    throw std::invalid_argument("expected 'true' or 'false', got '" + std::string(s) + "'");
}

Licensing parse_licensing(std::string_view s)
{
    s = trim(s);
    if (s == "exclusive")
        return Licensing::Exclusive;
    if (s == "pooled")
        return Licensing::Pooled;
    throw std::invalid_argument("expected 'exclusive' or 'pooled', got '" + std::string(s) + "'");
}

std::string_view licensing_name(Licensing l)
{
    return l == Licensing::Exclusive ? "exclusive" : "pooled";
}

AssociationRule parse_rule(std::string_view s)
{
    s = trim(s);
    if (s == "band28")
        return AssociationRule::Band28;
    if (s == "band73")
        return AssociationRule::Band73;
    if (s == "min")
        return AssociationRule::MinOverBands;
    throw std::invalid_argument("expected 'band28', 'band73' or 'min', got '" + std::string(s) + "'");
}

std::string_view rule_name(AssociationRule r)
{
    switch (r)
    {
    case AssociationRule::Band28:
        return "band28";
    case AssociationRule::Band73:
        return "band73";
    case AssociationRule::MinOverBands:
        return "min";
    }
    return "band28";
}

OutputFormat parse_format(std::string_view s)
{
    s = trim(s);
    if (s == "csv")
        return OutputFormat::Csv;
    if (s == "json")
        return OutputFormat::Json;
    throw std::invalid_argument("expected 'csv' or 'json', got '" + std::string(s) + "'");
}

template <typename T, typename F>
std::string join(const std::vector<T> &items, F &&fmt)
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i)
    {
        if (i)
            out += ',';
        out += fmt(items[i]);
    }
    return out;
}

struct KeySpec
{
    std::string name;
    std::function<void(ScenarioConfig &, std::string_view)> set;
    std::function<std::string(const ScenarioConfig &)> get;
};

template <typename Member>
KeySpec double_key(std::string name, Member member)
{
    return {std::move(name),
            [member](ScenarioConfig &c, std::string_view v) { std::invoke(member, c) = to_double(v); },
            [member](const ScenarioConfig &c) { return format_double(std::invoke(member, c)); }};
}

std::vector<KeySpec> band_keys(Carrier carrier)
{
    const std::string p = "bands." + std::string(carrier_key(carrier)) + ".";
    const auto b = [carrier](auto &c) -> auto & { return c.band(carrier); };
    auto dbl = [&](const std::string &field, double BandConfig::*m) {
        return KeySpec{p + field,
                       [b, m](ScenarioConfig &c, std::string_view v) { b(c).*m = to_double(v); },
                       [b, m](const ScenarioConfig &c) { return format_double(b(c).*m); }};
    };
    auto pl = [&](const std::string &field, double PathlossParams::*m) {
        return KeySpec{p + field,
                       [b, m](ScenarioConfig &c, std::string_view v) { b(c).pathloss.*m = to_double(v); },
                       [b, m](const ScenarioConfig &c) { return format_double(b(c).pathloss.*m); }};
    };
    auto cnt = [&](const std::string &field, int BandConfig::*m) {
        return KeySpec{p + field,
                       [b, m](ScenarioConfig &c, std::string_view v) { b(c).*m = to_integer<int>(v); },
                       [b, m](const ScenarioConfig &c) { return std::to_string(b(c).*m); }};
    };
    return {
        dbl("carrier_frequency", &BandConfig::carrier_frequency),
        dbl("total_bandwidth", &BandConfig::total_bandwidth),
        KeySpec{p + "licensing",
                [b](ScenarioConfig &c, std::string_view v) { b(c).licensing = parse_licensing(v); },
                [b](const ScenarioConfig &c) { return std::string(licensing_name(b(c).licensing)); }},
        cnt("n_tx", &BandConfig::n_tx),
        cnt("n_rx", &BandConfig::n_rx),
        dbl("tx_power", &BandConfig::tx_power),
        pl("alpha_los", &PathlossParams::alpha_los),
        pl("beta_los", &PathlossParams::beta_los),
        pl("sigma_los", &PathlossParams::sigma_los),
        pl("alpha_nlos", &PathlossParams::alpha_nlos),
        pl("beta_nlos", &PathlossParams::beta_nlos),
        pl("sigma_nlos", &PathlossParams::sigma_nlos),
        dbl("cluster_mean", &BandConfig::cluster_mean),
        dbl("r_tau", &BandConfig::r_tau),
        dbl("zeta", &BandConfig::zeta),
    };
}

const std::vector<KeySpec> &key_table()
{
    static const std::vector<KeySpec> table = [] {
        std::vector<KeySpec> t = {
            KeySpec{"num_operators",
                    [](ScenarioConfig &c, std::string_view v) { c.num_operators = to_integer<int>(v); },
                    [](const ScenarioConfig &c) { return std::to_string(c.num_operators); }},
            double_key("bs_density", &ScenarioConfig::bs_density),
            double_key("ue_density", &ScenarioConfig::ue_density),
            double_key("area_side", &ScenarioConfig::area_side),
            double_key("p28", &ScenarioConfig::p28),
            KeySpec{"iterations",
                    [](ScenarioConfig &c, std::string_view v) { c.iterations = to_integer<std::int64_t>(v); },
                    [](const ScenarioConfig &c) { return std::to_string(c.iterations); }},
            double_key("noise_psd", &ScenarioConfig::noise_psd),
            double_key("noise_figure", &ScenarioConfig::noise_figure),
            KeySpec{"seed",
                    [](ScenarioConfig &c, std::string_view v) { c.seed = to_integer<std::uint64_t>(v); },
                    [](const ScenarioConfig &c) { return std::to_string(c.seed); }},
            KeySpec{"blockage.a_out", [](ScenarioConfig &c, std::string_view v) { c.blockage.a_out = to_double(v); },
                    [](const ScenarioConfig &c) { return format_double(c.blockage.a_out); }},
            KeySpec{"blockage.b_out", [](ScenarioConfig &c, std::string_view v) { c.blockage.b_out = to_double(v); },
                    [](const ScenarioConfig &c) { return format_double(c.blockage.b_out); }},
            KeySpec{"blockage.a_los", [](ScenarioConfig &c, std::string_view v) { c.blockage.a_los = to_double(v); },
                    [](const ScenarioConfig &c) { return format_double(c.blockage.a_los); }},
            KeySpec{"association.rule",
                    [](ScenarioConfig &c, std::string_view v) { c.association_rule = parse_rule(v); },
                    [](const ScenarioConfig &c) { return std::string(rule_name(c.association_rule)); }},
            KeySpec{"angles.subpath_spread_deg",
                    [](ScenarioConfig &c, std::string_view v) { c.angles.subpath_spread_deg = to_double(v); },
                    [](const ScenarioConfig &c) { return format_double(c.angles.subpath_spread_deg); }},
            KeySpec{"angles.elevation_max_deg",
                    [](ScenarioConfig &c, std::string_view v) { c.angles.elevation_max_deg = to_double(v); },
                    [](const ScenarioConfig &c) { return format_double(c.angles.elevation_max_deg); }},
            KeySpec{"angles.geometric_anchor",
                    [](ScenarioConfig &c, std::string_view v) { c.angles.geometric_anchor = to_bool(v); },
                    [](const ScenarioConfig &c) { return std::string(c.angles.geometric_anchor ? "true" : "false"); }},
            double_key("antenna.spacing", &ScenarioConfig::element_spacing),
        };
        for (Carrier carrier : all_carriers)
        {
            auto bk = band_keys(carrier);
            t.insert(t.end(), std::make_move_iterator(bk.begin()), std::make_move_iterator(bk.end()));
        }
        t.push_back({"campaign.densities",
                     [](ScenarioConfig &c, std::string_view v) { c.campaign.densities = parse_density_list(v); },
                     [](const ScenarioConfig &c) { return join(c.campaign.densities, format_double); }});
        t.push_back({"campaign.regimes",
                     [](ScenarioConfig &c, std::string_view v) { c.campaign.regimes = parse_regime_list(v); },
                     [](const ScenarioConfig &c) {
                         return join(c.campaign.regimes, [](Regime r) { return std::string(regime_name(r)); });
                     }});
        t.push_back({"campaign.cases",
                     [](ScenarioConfig &c, std::string_view v) { c.campaign.cases = parse_case_list(v); },
                     [](const ScenarioConfig &c) {
                         return join(c.campaign.cases, [](AntennaCase a) { return std::string(case_name(a)); });
                     }});
        t.push_back({"campaign.jobs",
                     [](ScenarioConfig &c, std::string_view v) { c.campaign.jobs = to_integer<int>(v); },
                     [](const ScenarioConfig &c) { return std::to_string(c.campaign.jobs); }});
        t.push_back({"output.path",
                     [](ScenarioConfig &c, std::string_view v) { c.campaign.output_path = std::string(trim(v)); },
                     [](const ScenarioConfig &c) { return c.campaign.output_path; }});
        t.push_back({"output.format",
                     [](ScenarioConfig &c, std::string_view v) { c.campaign.output_format = parse_format(v); },
                     [](const ScenarioConfig &c) {
                         return std::string(c.campaign.output_format == OutputFormat::Csv ? "csv" : "json");
                     }});
        t.push_back({"output.dump_samples",
                     [](ScenarioConfig &c, std::string_view v) { c.campaign.dump_samples = std::string(trim(v)); },
                     [](const ScenarioConfig &c) { return c.campaign.dump_samples; }});
        return t;
    }();
    return table;
}

const KeySpec *find_key(std::string_view name)
{
    for (const auto &k : key_table())
        if (k.name == name)
            return &k;
    return nullptr;
}

} // namespace

std::string_view carrier_key(Carrier c)
{
    return c == Carrier::Band28 ? "28ghz" : "73ghz";
}

std::string_view regime_name(Regime r)
{
    switch (r)
    {
    case Regime::Hybrid:
        return "hybrid";
    case Regime::Licensed:
        return "licensed";
    case Regime::Pooled:
        return "pooled";
    }
    return "hybrid";
}

Regime parse_regime(std::string_view name)
{
    name = trim(name);
    if (name == "hybrid")
        return Regime::Hybrid;
    if (name == "licensed")
        return Regime::Licensed;
    if (name == "pooled")
        return Regime::Pooled;
    throw std::invalid_argument("unknown regime '" + std::string(name) + "' (expected hybrid|licensed|pooled)");
}

std::string_view case_name(AntennaCase c)
{
    return c == AntennaCase::I ? "i" : "ii";
}

AntennaCase parse_case(std::string_view name)
{
    name = trim(name);
    if (name == "i" || name == "case-i")
        return AntennaCase::I;
    if (name == "ii" || name == "case-ii")
        return AntennaCase::II;
    throw std::invalid_argument("unknown antenna case '" + std::string(name) + "' (expected i|ii)");
}

std::vector<double> parse_density_list(std::string_view text)
{
    std::vector<double> out;
    for (auto item : split_commas(text))
        out.push_back(to_double(item));
    return out;
}

std::vector<Regime> parse_regime_list(std::string_view text)
{
    std::vector<Regime> out;
    for (auto item : split_commas(text))
        out.push_back(parse_regime(item));
    return out;
}

std::vector<AntennaCase> parse_case_list(std::string_view text)
{
    std::vector<AntennaCase> out;
    for (auto item : split_commas(text))
        out.push_back(parse_case(item));
    return out;
}

ScenarioConfig default_config()
{
    ScenarioConfig c;

    // Pathloss, cluster and power-spread defaults are external values from the
    // New York City 28/73 GHz measurement model (Akdeniz et al., IEEE JSAC 2014).
    // All of them are overridable.
    BandConfig &b28 = c.band(Carrier::Band28);
    b28.carrier_frequency = 28e9;
    b28.total_bandwidth = 1e9;
    b28.licensing = Licensing::Exclusive;
    b28.n_tx = 64;
    b28.n_rx = 16;
    b28.tx_power = 30.0;
    b28.pathloss = {61.4, 2.0, 5.8, 72.0, 2.92, 8.7};
    b28.cluster_mean = 1.8;
    b28.r_tau = 2.8;
    b28.zeta = 4.0;

    BandConfig &b73 = c.band(Carrier::Band73);
    b73.carrier_frequency = 73e9;
    b73.total_bandwidth = 1e9;
    b73.licensing = Licensing::Pooled;
    b73.n_tx = 64;
    b73.n_rx = 16;
    b73.tx_power = 30.0;
    b73.pathloss = {69.8, 2.0, 5.8, 86.6, 2.45, 8.0};
    b73.cluster_mean = 1.9;
    b73.r_tau = 3.0;
    b73.zeta = 4.0;
    return c;
}

void apply_case(ScenarioConfig &config, AntennaCase c)
{
    config.band(Carrier::Band28).n_tx = 64;
    config.band(Carrier::Band28).n_rx = 16;
    config.band(Carrier::Band73).n_tx = c == AntennaCase::I ? 64 : 256;
    config.band(Carrier::Band73).n_rx = c == AntennaCase::I ? 16 : 64;
}

ConfigError::ConfigError(std::size_t line, std::string key, const std::string &what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line), key_(std::move(key))
{
}

ValidationError::ValidationError(std::vector<std::string> violations)
    : std::runtime_error([&] {
          std::string msg = "invalid configuration:";
          for (const auto &v : violations)
              msg += "\n  " + v;
          return msg;
      }()),
      violations_(std::move(violations))
{
}

ScenarioConfig parse_scenario_unchecked(std::string_view text)
{
    struct Entry
    {
        std::size_t line;
        std::string key;
        std::string value;
    };
    std::vector<Entry> entries;
    std::map<std::string, std::size_t> seen;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size())
    {
        ++line_no;
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(line_no, std::string(line), "expected 'key = value', got '" + std::string(line) + "'");
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (key.empty())
            throw ConfigError(line_no, key, "empty key");
        if (key != "preset" && !find_key(key))
            throw ConfigError(line_no, key, "unknown key '" + key + "'");
        if (auto [it, inserted] = seen.emplace(key, line_no); !inserted)
            throw ConfigError(line_no, key,
                              "duplicate key '" + key + "' (first set on line " + std::to_string(it->second) + ")");
        entries.push_back({line_no, std::move(key), std::move(value)});
    }

    ScenarioConfig config = default_config();
    // A preset sets antenna counts first; explicit band keys then override it.
    for (const auto &e : entries)
    {
        if (e.key != "preset")
            continue;
        try
        {
            apply_case(config, parse_case(e.value));
        }
        catch (const std::invalid_argument &ex)
        {
            throw ConfigError(e.line, e.key, "preset: " + std::string(ex.what()));
        }
    }
    for (const auto &e : entries)
    {
        if (e.key == "preset")
            continue;
        try
        {
            find_key(e.key)->set(config, e.value);
        }
        catch (const std::invalid_argument &ex)
        {
            throw ConfigError(e.line, e.key, e.key + ": " + ex.what());
        }
        catch (const std::out_of_range &)
        {
            throw ConfigError(e.line, e.key, e.key + ": value out of range");
        }
    }
    return config;
}

ScenarioConfig parse_scenario(std::string_view text)
{
    ScenarioConfig config = parse_scenario_unchecked(text);
    validate(config);
    return config;
}

ScenarioConfig load_scenario(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read config file '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string serialize(const ScenarioConfig &config)
{
    std::string out;
    for (const auto &k : key_table())
        out += k.name + " = " + k.get(config) + "\n";
    return out;
}

bool is_valid_array_size(int n)
{
    return n >= 1 && (n & (n - 1)) == 0;
}

std::vector<std::string> validation_errors(const ScenarioConfig &c)
{
    std::vector<std::string> errs;
    auto require = [&](bool ok, std::string msg) {
        if (!ok)
            errs.push_back(std::move(msg));
    };
    auto finite = [](double v) { return std::isfinite(v); };

    require(c.num_operators >= 1, "num_operators must be >= 1");
    require(finite(c.bs_density) && c.bs_density > 0.0, "bs_density must be > 0");
    require(finite(c.ue_density) && c.ue_density > 0.0, "ue_density must be > 0");
    require(finite(c.area_side) && c.area_side > 0.0, "area_side must be > 0");
    require(c.p28 >= 0.0 && c.p28 <= 1.0, "p28 must be in [0, 1]");
    require(c.iterations >= 1, "iterations must be >= 1");
    require(finite(c.noise_psd), "noise_psd must be finite");
    require(finite(c.noise_figure), "noise_figure must be finite");
    require(finite(c.blockage.a_out) && c.blockage.a_out > 0.0, "blockage.a_out must be > 0");
    require(finite(c.blockage.b_out), "blockage.b_out must be finite");
    require(finite(c.blockage.a_los) && c.blockage.a_los >= 0.0, "blockage.a_los must be >= 0");
    require(finite(c.angles.subpath_spread_deg) && c.angles.subpath_spread_deg >= 0.0,
            "angles.subpath_spread_deg must be >= 0");
    require(c.angles.elevation_max_deg >= 0.0 && c.angles.elevation_max_deg <= 90.0,
            "angles.elevation_max_deg must be in [0, 90]");
    require(finite(c.element_spacing) && c.element_spacing > 0.0, "antenna.spacing must be > 0");

    for (Carrier carrier : all_carriers)
    {
        const BandConfig &b = c.band(carrier);
        const std::string p = "bands." + std::string(carrier_key(carrier)) + ".";
        require(finite(b.carrier_frequency) && b.carrier_frequency > 0.0, p + "carrier_frequency must be > 0");
        require(finite(b.total_bandwidth) && b.total_bandwidth > 0.0, p + "total_bandwidth must be > 0");
        require(is_valid_array_size(b.n_tx),
                p + "n_tx must be a power of two (square-ish UPA rows x cols), got " + std::to_string(b.n_tx));
        require(is_valid_array_size(b.n_rx),
                p + "n_rx must be a power of two (square-ish UPA rows x cols), got " + std::to_string(b.n_rx));
        require(finite(b.tx_power), p + "tx_power must be finite");
        require(finite(b.cluster_mean) && b.cluster_mean > 0.0, p + "cluster_mean must be > 0");
        require(finite(b.r_tau), p + "r_tau must be finite");
        require(finite(b.zeta) && b.zeta >= 0.0, p + "zeta must be >= 0");
        const PathlossParams &pl = b.pathloss;
        require(finite(pl.alpha_los) && finite(pl.beta_los), p + "alpha_los/beta_los must be finite");
        require(finite(pl.alpha_nlos) && finite(pl.beta_nlos), p + "alpha_nlos/beta_nlos must be finite");
        require(finite(pl.sigma_los) && pl.sigma_los >= 0.0, p + "sigma_los must be >= 0");
        require(finite(pl.sigma_nlos) && pl.sigma_nlos >= 0.0, p + "sigma_nlos must be >= 0");
    }
    require(c.band(Carrier::Band28).carrier_frequency < c.band(Carrier::Band73).carrier_frequency,
            "bands.28ghz.carrier_frequency must be below bands.73ghz.carrier_frequency");

    require(!c.campaign.densities.empty(), "campaign.densities must not be empty");
    for (double d : c.campaign.densities)
        require(finite(d) && d > 0.0, "campaign.densities entries must be > 0");
    require(!c.campaign.regimes.empty(), "campaign.regimes must not be empty");
    require(!c.campaign.cases.empty(), "campaign.cases must not be empty");
    require(c.campaign.jobs >= 1, "campaign.jobs must be >= 1");
    return errs;
}

const ScenarioConfig &validate(const ScenarioConfig &config)
{
    auto errs = validation_errors(config);
    if (!errs.empty())
        throw ValidationError(std::move(errs));
    return config;
}

} // namespace mmwsim
