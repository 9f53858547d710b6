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

#include "uavchan/trajectory.hpp"

#include <cmath>
#include <stdexcept>

namespace uavchan {

std::string to_string(LegKind k) {
    switch (k) {
        case LegKind::Vertical:
            return "vertical";
        case LegKind::Horizontal:
            return "horizontal";
        case LegKind::Custom:
            return "custom";
    }
    return "custom";
}

LegKind leg_kind_from_string(const std::string& s) {
    if (s == "vertical") return LegKind::Vertical;
    if (s == "horizontal") return LegKind::Horizontal;
    if (s == "custom") return LegKind::Custom;
    throw std::invalid_argument("unknown leg kind '" + s +
                                "' (expected vertical, horizontal or custom)");
}

std::vector<std::string> validate(const TrajectorySpec& spec) {
    if (spec.legs.empty())
        throw std::invalid_argument("trajectory: legs must be nonempty");

    std::vector<std::string> warnings;
    std::size_t idx = 0;
    for (const TrajectoryLeg& leg : spec.legs) {
        const std::string where = "trajectory leg " + std::to_string(idx);
        if (!(leg.step_m > 0.0))
            throw std::invalid_argument(where + ": step_m must be > 0");
        for (double h : {leg.start.z, leg.end.z}) {
            if (h < 1.0 || h > 500.0)
                throw std::invalid_argument(
                    where + ": TX height must lie within [1, 500] m");
            if (h < 5.0 || h > 80.0)
                warnings.push_back(where +
                                   ": TX height outside the measured 5-80 m "
                                   "envelope");
        }
        if (leg.kind == LegKind::Vertical &&
            (leg.start.x != leg.end.x || leg.start.y != leg.end.y))
            throw std::invalid_argument(
                where + ": vertical leg endpoints must share x and y");
        if (leg.kind == LegKind::Horizontal && leg.start.z != leg.end.z)
            throw std::invalid_argument(
                where + ": horizontal leg endpoints must share the height");
        ++idx;
    }
    return warnings;
}

std::vector<TrajectoryPoint> build_trajectory(const TrajectorySpec& spec) {
    validate(spec);

    std::vector<TrajectoryPoint> points;
    double track = 0.0;
    bool have_previous = false;
    Vec3 previous;

    const auto push = [&](const Vec3& p, double advance) {
        track += advance;
        // Contiguous legs repeat the junction point; keep the track strictly
        // increasing by dropping exact duplicates.
        if (have_previous && advance == 0.0 && previous == p) return;
        points.push_back({p, track});
        previous = p;
        have_previous = true;
    };

    for (const TrajectoryLeg& leg : spec.legs) {
        const Vec3 delta = leg.end - leg.start;
        const double length = norm(delta);

        const double gap = have_previous ? distance(previous, leg.start) : 0.0;
        push(leg.start, gap);

        if (length == 0.0) continue;  // single-point leg

        const auto full_steps =
            static_cast<std::size_t>(std::floor(length / leg.step_m + 1e-9));
        Vec3 direction = (1.0 / length) * delta;
        double walked = 0.0;
        for (std::size_t k = 1; k <= full_steps; ++k) {
            const double along = static_cast<double>(k) * leg.step_m;
            if (along > length) break;
            push(leg.start + along * direction, along - walked);
            walked = along;
        }
        if (walked < length) push(leg.end, length - walked);
    }
    return points;
}

}  // namespace uavchan
