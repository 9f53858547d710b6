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

#ifndef UAVCHAN_ANALYZE_HPP
#define UAVCHAN_ANALYZE_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "uavchan/estimator.hpp"
#include "uavchan/pathloss.hpp"

namespace uavchan {

struct AnalyzeOptions {
    double offset_ns = 50.0;
    double d_ref_m = 1.0;
    std::size_t max_rays = 30;
    double stop_threshold_db = 25.0;
    /// When set, plot-ready CSVs (path-loss scatter, shadowing
    /// autocorrelation, SV amplitude scatter with fit lines, interarrival
    /// CDFs) are written into this directory.
    std::optional<std::filesystem::path> plots_dir;
};

struct AnalysisReport {
    std::string input_kind;  // "snapshots" or "cir"
    std::size_t snapshot_count = 0;
    double offset_ns = 0.0;
    SvFitReport sv;
    std::optional<PathLossFit> pathloss;
    std::string pathloss_failure;  // set when pathloss fit was not possible
    std::optional<DecorrelationFit> shadowing;
    std::string shadowing_failure;
};

/// Analyzes a snapshot stream or a sampled-CIR stream (MPCs are extracted
/// first in the latter case): SV parameter fit, path-loss regression when
/// distances are present, and shadowing autocorrelation fit when a track can
/// be reconstructed from the TX positions.
AnalysisReport analyze_file(const std::filesystem::path& input,
                            const AnalyzeOptions& options);

/// Serializes a report as a JSON document.
std::string report_to_json(const AnalysisReport& report);

}  // namespace uavchan

#endif
