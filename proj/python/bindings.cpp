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

#include "mmwsim/antenna.hpp"
#include "mmwsim/channel.hpp"
#include "mmwsim/config.hpp"
#include "mmwsim/montecarlo.hpp"
#include "mmwsim/results.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mmwsim;

namespace
{

py::dict result_dict(const IterationResult &r)
{
    py::dict d;
    d["rate"] = r.rate;
    d["carrier"] = r.carrier ? py::cast(std::string(carrier_key(*r.carrier))) : py::none();
    d["bs"] = r.bs ? py::cast(*r.bs) : py::none();
    d["sinr"] = r.sinr;
    d["sinr_db"] = r.sinr_db;
    d["load"] = r.load;
    d["bandwidth_hz"] = r.bandwidth_hz;
    d["regime"] = std::string(regime_name(r.regime));
    d["density"] = r.density;
    d["seed"] = r.seed;
    d["iteration"] = r.iteration;
    return d;
}

template <class T, class F>
std::vector<T> parse_each(const std::vector<std::string> &names, F parse)
{
    std::vector<T> out;
    for (const auto &n : names)
        out.push_back(parse(n));
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Monte Carlo simulator of multi-operator mmWave spectrum access";

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<ScenarioConfig>(m, "Config")
        .def(py::init(&default_config))
        .def_readwrite("num_operators", &ScenarioConfig::num_operators)
        .def_readwrite("bs_density", &ScenarioConfig::bs_density)
        .def_readwrite("ue_density", &ScenarioConfig::ue_density)
        .def_readwrite("area_side", &ScenarioConfig::area_side)
        .def_readwrite("p28", &ScenarioConfig::p28)
        .def_readwrite("iterations", &ScenarioConfig::iterations)
        .def_readwrite("seed", &ScenarioConfig::seed)
        .def_readwrite("noise_psd", &ScenarioConfig::noise_psd)
        .def_readwrite("noise_figure", &ScenarioConfig::noise_figure)
        .def("apply_case", [](ScenarioConfig &c, const std::string &name) { apply_case(c, parse_case(name)); })
        .def("errors", &validation_errors)
        .def("serialize", &serialize)
        .def("__eq__", [](const ScenarioConfig &a, const ScenarioConfig &b) { return a == b; })
        .def("__repr__", [](const ScenarioConfig &c) {
            return "<mmwsim.Config M=" + std::to_string(c.num_operators) + " bs_density=" + std::to_string(c.bs_density) +
                   " iterations=" + std::to_string(c.iterations) + ">";
        });

    m.def("parse_config", &parse_scenario, py::arg("text"));
    m.def("load_config", [](const std::string &path) { return load_scenario(path); }, py::arg("path"));

    m.def(
        "state_probabilities",
        [](double d) {
            const auto p = state_probabilities(d, BlockageParams{});
            return py::make_tuple(p.outage, p.los, p.nlos);
        },
        py::arg("distance"), "(p_out, p_los, p_nlos) at a link distance in meters");
    m.def("max_aligned_gain_db", &max_aligned_gain_db, py::arg("n_tx"), py::arg("n_rx"));
    m.def("throughput", &throughput, py::arg("bandwidth_hz"), py::arg("n_loaded"), py::arg("sinr"));
    m.def(
        "steering_vector",
        [](int n, double azimuth, double elevation, double spacing) {
            return steering_vector(UpaGeometry::from_count(n, spacing), {azimuth, elevation}).coefficients;
        },
        py::arg("n"), py::arg("azimuth"), py::arg("elevation"), py::arg("spacing") = 0.5);
    m.def(
        "beamforming_gain",
        [](const Eigen::MatrixXcd &H, const Eigen::VectorXcd &w_tx, const Eigen::VectorXcd &w_rx) {
            return beamforming_gain(H, BeamVector{w_tx}, BeamVector{w_rx});
        },
        py::arg("H"), py::arg("w_tx"), py::arg("w_rx"));
    m.def(
        "percentile", [](const std::vector<double> &v, double q) { return percentile(v, q); }, py::arg("samples"),
        py::arg("q"));

    m.def(
        "run_iteration",
        [](const ScenarioConfig &c, const std::string &regime, std::int64_t iteration) {
            return result_dict(run_iteration(validate(c), parse_regime(regime), iteration));
        },
        py::arg("config"), py::arg("regime"), py::arg("iteration"));

    m.def(
        "run_campaign",
        [](const ScenarioConfig &c, std::optional<std::vector<double>> densities,
           std::optional<std::vector<std::string>> regimes, std::optional<std::vector<std::string>> cases, int jobs) {
            validate(c);
            CampaignSpec spec = campaign_spec(c);
            if (densities)
                spec.densities = *densities;
            if (regimes)
                spec.regimes = parse_each<Regime>(*regimes, parse_regime);
            if (cases)
                spec.cases = parse_each<AntennaCase>(*cases, parse_case);
            spec.jobs = jobs;
            CampaignStats stats;
            {
                py::gil_scoped_release release;
                stats = run_campaign(c, spec);
            }
            py::list rows;
            for (const auto &r : output_rows(stats))
            {
                py::dict d;
                d["density"] = r.density;
                d["regime"] = r.regime;
                d["case"] = r.antenna_case;
                d["percentile"] = r.percentile;
                d["throughput_bps"] = r.throughput_bps;
                d["samples"] = r.samples;
                rows.append(d);
            }
            return rows;
        },
        py::arg("config"), py::arg("densities") = py::none(), py::arg("regimes") = py::none(),
        py::arg("cases") = py::none(), py::arg("jobs") = 1,
        "Rows of (density, regime, case, percentile, throughput_bps, samples)");
}
