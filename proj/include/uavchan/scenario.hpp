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

#ifndef UAVCHAN_SCENARIO_HPP
#define UAVCHAN_SCENARIO_HPP

#include <string>
#include <vector>

namespace uavchan {

/// Parameter set of the simplified single-cluster SV model for one named
/// propagation scenario: pre-/post-cursor K-factors (dB), power decay times
/// (ns), Poisson arrival rates (1/ns), mean ray counts, and the minimum
/// |delay| of any cursor ray (ns).
struct ScenarioParams {
    std::string name;
    double k_f_db = 0.0;
    double gamma_f_ns = 0.0;
    double lambda_f_per_ns = 0.0;
    double n_f_mean = 0.0;
    double k_b_db = 0.0;
    double gamma_b_ns = 0.0;
    double lambda_b_per_ns = 0.0;
    double n_b_mean = 0.0;
    double offset_ns = 0.0;
};

/// Throws std::invalid_argument on nonpositive rates, decay times or offset,
/// negative mean counts, or non-finite K-factors. Mean counts of zero are
/// allowed (degenerate single-ray channels).
void validate(const ScenarioParams& p);

/// Named scenario lookup, preloaded with the built-in urban measurement
/// scenarios "office-buildings" and "grass-lawn". User scenarios can be
/// registered on top; lookups of unknown names fail listing what exists.
class ScenarioRegistry {
public:
    ScenarioRegistry();

    /// Registers a validated scenario; throws on duplicate names.
    void add(ScenarioParams params);

    const ScenarioParams& get(const std::string& name) const;
    bool contains(const std::string& name) const;
    std::vector<std::string> names() const;  // sorted

private:
    std::vector<ScenarioParams> entries_;
};

/// Built-in scenario lookup shortcut (pure: repeated calls return identical
/// values).
ScenarioParams scenario_params(const std::string& name);

}  // namespace uavchan

#endif
