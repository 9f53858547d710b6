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

#include <doctest.h>

#include <stdexcept>

#include "uavchan/trajectory.hpp"

using namespace uavchan;

TEST_CASE("vertical leg samples an arithmetic height progression") {
    TrajectorySpec spec;
    spec.legs.push_back(
        {LegKind::Vertical, {0, 0, 5}, {0, 0, 80}, 15.0});
    const auto points = build_trajectory(spec);
    REQUIRE(points.size() == 6);
    const double heights[] = {5, 20, 35, 50, 65, 80};
    for (std::size_t i = 0; i < points.size(); ++i) {
        CHECK(points[i].position.z == doctest::Approx(heights[i]));
        CHECK(points[i].track_m ==
              doctest::Approx(15.0 * static_cast<double>(i)));
    }
}

TEST_CASE("single-point leg yields one point at track zero") {
    TrajectorySpec spec;
    spec.legs.push_back({LegKind::Custom, {3, 4, 12}, {3, 4, 12}, 1.0});
    const auto points = build_trajectory(spec);
    REQUIRE(points.size() == 1);
    CHECK(points[0].track_m == 0.0);
    CHECK(points[0].position == Vec3{3, 4, 12});
}

TEST_CASE("contiguous legs accumulate track distance without duplicates") {
    TrajectorySpec spec;
    spec.legs.push_back(
        {LegKind::Horizontal, {0, 0, 10}, {100, 0, 10}, 10.0});
    spec.legs.push_back(
        {LegKind::Horizontal, {100, 0, 10}, {200, 0, 10}, 10.0});
    const auto points = build_trajectory(spec);
    CHECK(points.back().track_m == doctest::Approx(200.0));
    REQUIRE(points.size() == 21);  // junction point appears once
    for (std::size_t i = 1; i < points.size(); ++i)
        CHECK(points[i].track_m > points[i - 1].track_m);
}

TEST_CASE("disjoint legs count the gap in the track distance") {
    TrajectorySpec spec;
    spec.legs.push_back({LegKind::Vertical, {0, 0, 10}, {0, 0, 20}, 10.0});
    spec.legs.push_back({LegKind::Vertical, {30, 0, 20}, {30, 0, 30}, 10.0});
    const auto points = build_trajectory(spec);
    REQUIRE(points.size() == 4);
    CHECK(points[1].track_m == doctest::Approx(10.0));
    CHECK(points[2].track_m == doctest::Approx(40.0));  // 30 m hop
    CHECK(points[3].track_m == doctest::Approx(50.0));
}

TEST_CASE("non-multiple leg lengths still include the endpoint") {
    TrajectorySpec spec;
    spec.legs.push_back({LegKind::Vertical, {0, 0, 5}, {0, 0, 15}, 4.0});
    const auto points = build_trajectory(spec);
    REQUIRE(points.size() == 4);  // 5, 9, 13, 15
    CHECK(points.back().position.z == doctest::Approx(15.0));
    CHECK(points.back().track_m == doctest::Approx(10.0));
}

TEST_CASE("hard validation failures") {
    TrajectorySpec empty;
    CHECK_THROWS_AS(build_trajectory(empty), std::invalid_argument);

    TrajectorySpec bad_step;
    bad_step.legs.push_back({LegKind::Custom, {0, 0, 10}, {0, 0, 20}, 0.0});
    CHECK_THROWS_AS(build_trajectory(bad_step), std::invalid_argument);

    TrajectorySpec too_low;
    too_low.legs.push_back({LegKind::Vertical, {0, 0, 0.5}, {0, 0, 20}, 5.0});
    CHECK_THROWS_AS(build_trajectory(too_low), std::invalid_argument);

    TrajectorySpec too_high;
    too_high.legs.push_back(
        {LegKind::Vertical, {0, 0, 10}, {0, 0, 600}, 5.0});
    CHECK_THROWS_AS(build_trajectory(too_high), std::invalid_argument);

    TrajectorySpec skewed_vertical;
    skewed_vertical.legs.push_back(
        {LegKind::Vertical, {0, 0, 10}, {5, 0, 20}, 5.0});
    CHECK_THROWS_AS(build_trajectory(skewed_vertical), std::invalid_argument);

    TrajectorySpec tilted_horizontal;
    tilted_horizontal.legs.push_back(
        {LegKind::Horizontal, {0, 0, 10}, {50, 0, 12}, 5.0});
    CHECK_THROWS_AS(build_trajectory(tilted_horizontal),
                    std::invalid_argument);
}

TEST_CASE("heights outside the measured envelope only warn") {
    TrajectorySpec spec;
    spec.legs.push_back({LegKind::Vertical, {0, 0, 2}, {0, 0, 90}, 5.0});
    const auto warnings = validate(spec);
    CHECK(warnings.size() == 2);
    CHECK(build_trajectory(spec).size() > 0);

    TrajectorySpec nominal;
    nominal.legs.push_back({LegKind::Vertical, {0, 0, 5}, {0, 0, 80}, 5.0});
    CHECK(validate(nominal).empty());
}
