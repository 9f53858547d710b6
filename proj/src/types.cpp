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

#include "uavchan/types.hpp"

#include <cmath>
#include <stdexcept>

namespace uavchan {

Vec3 operator+(const Vec3& a, const Vec3& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}

Vec3 operator-(const Vec3& a, const Vec3& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}

Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }

bool operator==(const Vec3& a, const Vec3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
}

double norm(const Vec3& v) {
    return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

std::string to_string(RayKind kind) {
    switch (kind) {
        case RayKind::Central:
            return "central";
        case RayKind::PreCursor:
            return "pre";
        case RayKind::PostCursor:
            return "post";
    }
    return "central";
}

RayKind ray_kind_from_string(const std::string& s) {
    if (s == "central") return RayKind::Central;
    if (s == "pre") return RayKind::PreCursor;
    if (s == "post") return RayKind::PostCursor;
    throw std::invalid_argument("unknown ray kind '" + s +
                                "' (expected central, pre or post)");
}

void validate(const CirSnapshot& snapshot) {
    std::size_t central_count = 0;
    double prev_delay = 0.0;
    bool first = true;
    for (const Ray& ray : snapshot.rays) {
        if (!(ray.amplitude > 0.0))
            throw std::invalid_argument("ray amplitude must be > 0");
        switch (ray.kind) {
            case RayKind::Central:
                ++central_count;
                if (ray.delay_ns != 0.0)
                    throw std::invalid_argument(
                        "central ray must sit at delay 0");
                break;
            case RayKind::PreCursor:
                if (!(ray.delay_ns < 0.0))
                    throw std::invalid_argument(
                        "pre-cursor rays must have delay < 0");
                break;
            case RayKind::PostCursor:
                if (!(ray.delay_ns > 0.0))
                    throw std::invalid_argument(
                        "post-cursor rays must have delay > 0");
                break;
        }
        if (!first && !(ray.delay_ns > prev_delay))
            throw std::invalid_argument(
                "rays must be sorted strictly ascending by delay");
        prev_delay = ray.delay_ns;
        first = false;
    }
    if (!snapshot.rays.empty() && central_count != 1)
        throw std::invalid_argument(
            "snapshot must contain exactly one central ray");

    const double d = distance(snapshot.tx_position, snapshot.rx_position);
    const double scale = std::max(1.0, d);
    if (std::abs(snapshot.link_distance_m - d) > 1e-9 * scale)
        throw std::invalid_argument(
            "cached link distance disagrees with the TX/RX positions");

    if (!snapshot.samples.empty() && !(snapshot.sample_period_ns > 0.0))
        throw std::invalid_argument(
            "sample_period_ns must be > 0 when samples are present");
}

}  // namespace uavchan
