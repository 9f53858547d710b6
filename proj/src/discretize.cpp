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

#include "uavchan/discretize.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uavchan {

double sinc(double x) {
    const double px = std::numbers::pi * x;
    if (std::abs(px) < 1e-8) return 1.0 - px * px / 6.0;
    return std::sin(px) / px;
}

std::vector<std::complex<double>> discretize(std::span<const Ray> rays,
                                             double sample_period_ns,
                                             std::size_t n_samples,
                                             double t0_ns) {
    if (rays.empty())
        throw std::invalid_argument("discretize: ray list is empty");
    if (!(sample_period_ns > 0.0))
        throw std::invalid_argument("discretize: sample period must be > 0");
    if (n_samples < 1)
        throw std::invalid_argument("discretize: need at least one sample");

    std::vector<std::complex<double>> samples(n_samples);
    for (const Ray& ray : rays) {
        const std::complex<double> gain =
            std::polar(ray.amplitude, ray.phase_rad);
        for (std::size_t k = 0; k < n_samples; ++k) {
            const double t = t0_ns + static_cast<double>(k) * sample_period_ns;
            samples[k] += gain * sinc((t - ray.delay_ns) / sample_period_ns);
        }
    }
    return samples;
}

}  // namespace uavchan
