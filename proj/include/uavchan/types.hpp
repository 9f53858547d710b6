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

#ifndef UAVCHAN_TYPES_HPP
#define UAVCHAN_TYPES_HPP

#include <complex>
#include <string>
#include <vector>

namespace uavchan {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(double s, const Vec3& v);
bool operator==(const Vec3& a, const Vec3& b);
double norm(const Vec3& v);
double distance(const Vec3& a, const Vec3& b);

enum class RayKind { Central, PreCursor, PostCursor };

std::string to_string(RayKind kind);
RayKind ray_kind_from_string(const std::string& s);

/// One resolvable multipath component. Delays are relative to the snapshot's
/// strongest ray: exactly 0 for the central ray, negative for pre-cursor
/// rays, positive for post-cursor rays.
struct Ray {
    double delay_ns = 0.0;
    double amplitude = 0.0;  // linear voltage gain, > 0
    double phase_rad = 0.0;  // [0, 2*pi)
    RayKind kind = RayKind::Central;
};

/// One channel realization: link geometry plus the ray list, optionally with
/// a band-limited sample vector attached.
struct CirSnapshot {
    Vec3 tx_position;              // meters
    Vec3 rx_position;              // meters
    double link_distance_m = 0.0;  // cached 3D Euclidean TX-RX distance
    std::vector<Ray> rays;         // sorted ascending by delay
    std::vector<std::complex<double>> samples;  // empty unless discretized
    double sample_period_ns = 0.0;               // > 0 iff samples present
};

/// Throws std::invalid_argument when a snapshot violates its invariants:
/// exactly one central ray at delay 0, signed cursor delays, positive
/// amplitudes, strictly ascending unique delays, cached distance consistent
/// with the endpoints, positive sample period when samples are present.
void validate(const CirSnapshot& snapshot);

}  // namespace uavchan

#endif
