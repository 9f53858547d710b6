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

#ifndef UAVCHAN_SV_GENERATOR_HPP
#define UAVCHAN_SV_GENERATOR_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "uavchan/pathloss.hpp"
#include "uavchan/rng.hpp"
#include "uavchan/scenario.hpp"
#include "uavchan/types.hpp"

namespace uavchan {

/// How per-snapshot cursor ray counts follow the scenario's mean counts:
/// Poisson-distributed with that mean, or fixed at the rounded mean.
enum class CountModel { PoissonMean, Fixed };

std::string to_string(CountModel m);
CountModel count_model_from_string(const std::string& s);

struct GeneratorConfig {
    ScenarioParams scenario;
    PathLossParams pathloss;
    CountModel count_model = CountModel::PoissonMean;
    double amplitude_jitter_db = 0.0;  // per-ray lognormal jitter deviation
};

void validate(const GeneratorConfig& cfg);

/// Mean cursor-ray amplitude at signed delay tau: exponential decay from the
/// K-factor-coupled base,
///   a(tau) = a0 * 10^(-K/20) * exp(-|tau| / gamma),
/// using the pre-cursor parameters for tau < 0 and the post-cursor ones for
/// tau > 0. tau = 0 is the central ray and is rejected.
double mean_cursor_amplitude(double tau_ns, double a0,
                             const ScenarioParams& s);

/// n_rays Poisson arrival delays: offset plus cumulative Exp(rate)
/// increments. Strictly increasing, all > offset_ns.
std::vector<double> generate_arrivals(double rate_per_ns, std::size_t n_rays,
                                      double offset_ns, Rng& rng);

/// One SV snapshot with an externally supplied shadow value. The central ray
/// sits at delay 0 with amplitude 10^(-PL/20), PL = mean_path_loss(d) +
/// shadow_db; cursor counts follow the count model; cursor rays get offset
/// Poisson delays (pre-cursor delays negated), mean amplitudes from
/// mean_cursor_amplitude times optional lognormal jitter, and independent
/// phases on [0, 2*pi). A cursor amplitude that would reach the central
/// amplitude has its jitter redrawn (up to 100 times, then is clamped just
/// below), so the central ray is always the strongest.
///
/// Draw order is fixed for reproducibility: pre count, post count, pre
/// delays, post delays, central phase, then per cursor ray in |delay| order
/// (pre side first) jitter followed by phase.
CirSnapshot generate_snapshot(const Vec3& tx, const Vec3& rx,
                              const GeneratorConfig& cfg, double shadow_db,
                              Rng& rng);

/// Same, drawing the shadow value internally from N(0, sigma_db^2) as one
/// extra leading draw. Trajectory-correlated shadowing is composed by the
/// caller through the explicit-shadow overload.
CirSnapshot generate_snapshot(const Vec3& tx, const Vec3& rx,
                              const GeneratorConfig& cfg, Rng& rng);

}  // namespace uavchan

#endif
