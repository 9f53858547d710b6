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

#ifndef UAVCHAN_RUN_HPP
#define UAVCHAN_RUN_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "uavchan/dispersion.hpp"
#include "uavchan/pathloss.hpp"
#include "uavchan/scenario.hpp"
#include "uavchan/sv_generator.hpp"
#include "uavchan/trajectory.hpp"

namespace uavchan {

/// Fully resolved simulation run description. The seed is mandatory (no
/// wall-clock default): identical configs produce byte-identical outputs.
struct RunConfig {
    ScenarioParams scenario;
    PathLossParams pathloss;
    TrajectorySpec trajectory;
    std::uint64_t seed = 0;
    int snapshots_per_position = 50;
    CountModel count_model = CountModel::PoissonMean;
    double amplitude_jitter_db = 0.0;
    std::filesystem::path out_dir;
    unsigned threads = 1;  // snapshot generation workers; output invariant
};

/// Parsed config document plus the registry it referenced (built-ins and any
/// user scenarios the document registered).
struct LoadedConfig {
    RunConfig run;
    ScenarioRegistry registry;
};

/// Parses the JSON config document; validation failures carry field-level
/// messages. The seed and out_dir may still be overridden afterwards.
LoadedConfig parse_run_config(const std::string& json_text);
LoadedConfig load_run_config(const std::filesystem::path& file);

/// Hard-validates a run config; returns soft warnings (e.g. TX heights
/// outside the measured envelope).
std::vector<std::string> validate(const RunConfig& cfg);

struct SampleStats {
    std::size_t n = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
};

/// Metric roll-up for the summary: sample statistics over the finite values
/// plus the distribution fits (absent when infeasible, with the reason).
struct MetricReport {
    SampleStats stats;
    std::optional<DispersionStats> fits;
    std::string fit_failure;
};

struct RunResult {
    std::size_t position_count = 0;
    std::size_t snapshot_count = 0;
    std::size_t infinite_k_count = 0;
    MetricReport k_factor_db;
    MetricReport rms_delay_spread_ns;
    std::filesystem::path snapshot_file;
    std::filesystem::path pathloss_file;
    std::filesystem::path kfactor_cdf_file;
    std::filesystem::path rmsds_cdf_file;
    std::filesystem::path summary_file;
};

/// Executes a run: correlated shadowing along the track, per-position
/// snapshot ensembles (seed-split per snapshot index, so the output is
/// independent of the worker count), per-snapshot metrics, and the output
/// files (snapshot stream, per-position path loss, metric CDFs, summary).
RunResult run(const RunConfig& cfg);

SampleStats sample_stats(std::span<const double> values);

}  // namespace uavchan

#endif
