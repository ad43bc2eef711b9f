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

#include "mmwsim/deployment.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>

namespace mmwsim
{

std::size_t Deployment::total_base_stations() const
{
    std::size_t n = 0;
    for (const auto &op : operators)
        n += op.base_stations.size();
    return n;
}

std::vector<Point> sample_ppp(double density, double area_side, RandomStream &rng)
{
    const double mean = density * area_side * area_side * 1e-6;
    const auto count = poisson(rng, mean);
    std::vector<Point> points(count);
    for (auto &p : points)
    {
        p.x = uniform(rng, 0.0, area_side);
        p.y = uniform(rng, 0.0, area_side);
    }
    return points;
}

Deployment build_deployment(const ScenarioConfig &config, RandomStream &rng)
{
    Deployment d;
    d.area_side = config.area_side;
    d.operators.resize(static_cast<std::size_t>(config.num_operators));
    for (auto &op : d.operators)
    {
        op.base_stations = sample_ppp(config.bs_density, config.area_side, rng);
        op.users = sample_ppp(config.ue_density, config.area_side, rng);
    }
    d.reference_ue = {config.area_side / 2.0, config.area_side / 2.0};
    d.reference_operator = 0;
    return d;
}

void write_deployment_csv(const Deployment &deployment, std::ostream &out)
{
    auto num = [](double v) {
        char buf[64];
        const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        return std::string(buf, ptr);
    };
    out << "operator,role,x,y\n";
    for (std::size_t m = 0; m < deployment.operators.size(); ++m)
    {
        for (const auto &p : deployment.operators[m].base_stations)
            out << m + 1 << ",bs," << num(p.x) << ',' << num(p.y) << '\n';
        for (const auto &p : deployment.operators[m].users)
            out << m + 1 << ",ue," << num(p.x) << ',' << num(p.y) << '\n';
    }
    out << deployment.reference_operator + 1 << ",reference," << num(deployment.reference_ue.x) << ','
        << num(deployment.reference_ue.y) << '\n';
}

void write_deployment_csv(const Deployment &deployment, const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    write_deployment_csv(deployment, out);
    if (!out)
        throw std::runtime_error("write to '" + path.string() + "' failed");
}

} // namespace mmwsim
