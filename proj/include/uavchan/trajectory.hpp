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

#ifndef UAVCHAN_TRAJECTORY_HPP
#define UAVCHAN_TRAJECTORY_HPP

#include <string>
#include <vector>

#include "uavchan/types.hpp"

namespace uavchan {

enum class LegKind { Vertical, Horizontal, Custom };

std::string to_string(LegKind k);
LegKind leg_kind_from_string(const std::string& s);

struct TrajectoryLeg {
    LegKind kind = LegKind::Custom;
    Vec3 start;  // meters
    Vec3 end;    // meters
    double step_m = 0.0;
};

struct TrajectorySpec {
    Vec3 rx_position{0.0, 0.0, 1.0};
    std::vector<TrajectoryLeg> legs;
};

struct TrajectoryPoint {
    Vec3 position;
    double track_m = 0.0;  // cumulative along-track distance
};

/// Hard validation (nonempty legs, positive steps, TX heights within
/// [1, 500] m, vertical/horizontal legs geometrically consistent) throws;
/// the returned strings are soft warnings, e.g. heights outside the 5-80 m
/// measured envelope.
std::vector<std::string> validate(const TrajectorySpec& spec);

/// Samples every leg at step_m intervals, endpoints always included (the
/// final interval is shorter when the leg length is not a multiple of the
/// step). Track distance accumulates along legs and across inter-leg gaps;
/// consecutive duplicate points (contiguous legs) are dropped so the track
/// distances are strictly increasing.
std::vector<TrajectoryPoint> build_trajectory(const TrajectorySpec& spec);

}  // namespace uavchan

#endif
