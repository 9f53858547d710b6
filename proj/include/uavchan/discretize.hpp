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

#ifndef UAVCHAN_DISCRETIZE_HPP
#define UAVCHAN_DISCRETIZE_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "uavchan/types.hpp"

namespace uavchan {

/// Normalized sinc: sin(pi x) / (pi x), with sinc(0) = 1.
double sinc(double x);

/// Band-limited sampling of a ray list onto the uniform grid
/// t_k = t0_ns + k * sample_period_ns (brick-wall pulse at the sample rate):
///
///   sample[k] = sum over rays of
///               amplitude * e^{j phase} * sinc((t_k - delay) / period)
///
/// Linear in the ray list. On-grid rays land exactly on their tap; for
/// windows covering every ray by >= 20 taps the total sample energy tracks
/// the summed ray power up to O(1/taps) tail truncation.
std::vector<std::complex<double>> discretize(std::span<const Ray> rays,
                                             double sample_period_ns,
                                             std::size_t n_samples,
                                             double t0_ns);

}  // namespace uavchan

#endif
