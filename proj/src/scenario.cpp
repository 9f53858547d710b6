// SPDX-License-Identifier: Apache-2.0
//
// uavchan - UAV air-to-ground channel simulation and estimation toolkit
// Copyright (C) 2026 uavchan contributors
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

#include "uavchan/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uavchan {

namespace {

// Measured urban SV parameter sets. Scenario 1 is a street between office
// buildings, scenario 2 an open grass lawn ringed by trees and buildings.
const ScenarioParams kOfficeBuildings{
    .name = "office-buildings",
    .k_f_db = 8.1,
    .gamma_f_ns = 240.0,
    .lambda_f_per_ns = 0.0092,
    .n_f_mean = 2.2,
    .k_b_db = 2.8,
    .gamma_b_ns = 448.0,
    .lambda_b_per_ns = 0.0073,
    .n_b_mean = 4.8,
    .offset_ns = 50.0,
};

const ScenarioParams kGrassLawn{
    .name = "grass-lawn",
    .k_f_db = 11.4,
    .gamma_f_ns = 316.0,
    .lambda_f_per_ns = 0.0075,
    .n_f_mean = 1.6,
    .k_b_db = 5.1,
    .gamma_b_ns = 662.0,
    .lambda_b_per_ns = 0.0057,
    .n_b_mean = 5.4,
    .offset_ns = 50.0,
};

std::string joined_names(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
        if (!out.empty()) out += ", ";
        out += n;
    }
    return out;
}

}  // namespace

void validate(const ScenarioParams& p) {
    if (p.name.empty())
        throw std::invalid_argument("scenario name must be nonempty");
    if (!(p.gamma_f_ns > 0.0) || !(p.gamma_b_ns > 0.0))
        throw std::invalid_argument("scenario '" + p.name +
                                    "': decay times must be > 0");
    if (!(p.lambda_f_per_ns > 0.0) || !(p.lambda_b_per_ns > 0.0))
        throw std::invalid_argument("scenario '" + p.name +
                                    "': arrival rates must be > 0");
    if (p.n_f_mean < 0.0 || p.n_b_mean < 0.0)
        throw std::invalid_argument("scenario '" + p.name +
                                    "': mean ray counts must be >= 0");
    if (!(p.offset_ns > 0.0))
        throw std::invalid_argument("scenario '" + p.name +
                                    "': offset_ns must be > 0");
    if (!std::isfinite(p.k_f_db) || !std::isfinite(p.k_b_db))
        throw std::invalid_argument("scenario '" + p.name +
                                    "': K-factors must be finite");
}

ScenarioRegistry::ScenarioRegistry() {
    entries_.push_back(kOfficeBuildings);
    entries_.push_back(kGrassLawn);
}

void ScenarioRegistry::add(ScenarioParams params) {
    validate(params);
    if (contains(params.name))
        throw std::invalid_argument("scenario '" + params.name +
                                    "' is already registered");
    entries_.push_back(std::move(params));
}

const ScenarioParams& ScenarioRegistry::get(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return e;
    throw std::invalid_argument("unknown scenario '" + name +
                                "'; available: " + joined_names(names()));
}

bool ScenarioRegistry::contains(const std::string& name) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const ScenarioParams& e) { return e.name == name; });
}

std::vector<std::string> ScenarioRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.name);
    std::sort(out.begin(), out.end());
    return out;
}

ScenarioParams scenario_params(const std::string& name) {
    static const ScenarioRegistry registry;
    return registry.get(name);
}

}  // namespace uavchan
