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

#include "uavchan/sv_generator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uavchan {

std::string to_string(CountModel m) {
    return m == CountModel::PoissonMean ? "poisson-mean" : "fixed";
}

CountModel count_model_from_string(const std::string& s) {
    if (s == "poisson-mean") return CountModel::PoissonMean;
    if (s == "fixed") return CountModel::Fixed;
    throw std::invalid_argument("unknown count model '" + s +
                                "' (expected poisson-mean or fixed)");
}

void validate(const GeneratorConfig& cfg) {
    validate(cfg.scenario);
    validate(cfg.pathloss);
    if (cfg.amplitude_jitter_db < 0.0)
        throw std::invalid_argument(
            "generator: amplitude_jitter_db must be >= 0");
}

double mean_cursor_amplitude(double tau_ns, double a0,
                             const ScenarioParams& s) {
    if (tau_ns == 0.0)
        throw std::invalid_argument(
            "mean_cursor_amplitude: delay 0 is the central ray, not a cursor "
            "ray");
    if (!(a0 > 0.0))
        throw std::invalid_argument(
            "mean_cursor_amplitude: central amplitude must be > 0");
    const double k_db = tau_ns < 0.0 ? s.k_f_db : s.k_b_db;
    const double gamma_ns = tau_ns < 0.0 ? s.gamma_f_ns : s.gamma_b_ns;
    return a0 * std::pow(10.0, -k_db / 20.0) *
           std::exp(-std::abs(tau_ns) / gamma_ns);
}

std::vector<double> generate_arrivals(double rate_per_ns, std::size_t n_rays,
                                      double offset_ns, Rng& rng) {
    if (!(rate_per_ns > 0.0))
        throw std::invalid_argument("generate_arrivals: rate must be > 0");
    std::vector<double> delays;
    delays.reserve(n_rays);
    double t = offset_ns;
    for (std::size_t i = 0; i < n_rays; ++i) {
        t += rng.exponential(rate_per_ns);
        delays.push_back(t);
    }
    return delays;
}

namespace {

std::size_t draw_count(double mean, CountModel model, Rng& rng) {
    if (model == CountModel::Fixed)
        return static_cast<std::size_t>(std::llround(mean));
    return static_cast<std::size_t>(rng.poisson(mean));
}

// Mean amplitude times lognormal jitter, kept strictly below the central
// amplitude: the jitter is redrawn up to 100 times, then clamped just below.
double cursor_amplitude(double mean_amp, double a0, double jitter_db,
                        Rng& rng) {
    if (jitter_db == 0.0)
        return mean_amp < a0 ? mean_amp : a0 * (1.0 - 1e-6);
    for (int attempt = 0; attempt < 100; ++attempt) {
        const double amp =
            mean_amp * std::pow(10.0, jitter_db * rng.normal() / 20.0);
        if (amp < a0) return amp;
    }
    return a0 * (1.0 - 1e-6);
}

}  // namespace

CirSnapshot generate_snapshot(const Vec3& tx, const Vec3& rx,
                              const GeneratorConfig& cfg, double shadow_db,
                              Rng& rng) {
    validate(cfg);
    const double d = distance(tx, rx);
    if (!(d > 0.0))
        throw std::invalid_argument(
            "generate_snapshot: TX and RX positions coincide");

    const double pl_db = mean_path_loss(d, cfg.pathloss) + shadow_db;
    const double a0 = std::pow(10.0, -pl_db / 20.0);
    const ScenarioParams& s = cfg.scenario;

    const std::size_t n_pre = draw_count(s.n_f_mean, cfg.count_model, rng);
    const std::size_t n_post = draw_count(s.n_b_mean, cfg.count_model, rng);
    const std::vector<double> pre_arrivals =
        generate_arrivals(s.lambda_f_per_ns, n_pre, s.offset_ns, rng);
    const std::vector<double> post_arrivals =
        generate_arrivals(s.lambda_b_per_ns, n_post, s.offset_ns, rng);

    CirSnapshot snap;
    snap.tx_position = tx;
    snap.rx_position = rx;
    snap.link_distance_m = d;
    snap.rays.reserve(1 + n_pre + n_post);
    snap.rays.push_back(
        {0.0, a0, rng.phase(), RayKind::Central});

    for (double arrival : pre_arrivals) {
        const double tau = -arrival;
        const double amp = cursor_amplitude(mean_cursor_amplitude(tau, a0, s),
                                            a0, cfg.amplitude_jitter_db, rng);
        snap.rays.push_back({tau, amp, rng.phase(), RayKind::PreCursor});
    }
    for (double arrival : post_arrivals) {
        const double amp =
            cursor_amplitude(mean_cursor_amplitude(arrival, a0, s), a0,
                             cfg.amplitude_jitter_db, rng);
        snap.rays.push_back({arrival, amp, rng.phase(), RayKind::PostCursor});
    }

    std::sort(snap.rays.begin(), snap.rays.end(),
              [](const Ray& a, const Ray& b) { return a.delay_ns < b.delay_ns; });
    return snap;
}

CirSnapshot generate_snapshot(const Vec3& tx, const Vec3& rx,
                              const GeneratorConfig& cfg, Rng& rng) {
    const double shadow_db = cfg.pathloss.sigma_db * rng.normal();
    return generate_snapshot(tx, rx, cfg, shadow_db, rng);
}

}  // namespace uavchan
