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

#include "uavchan/dispersion.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "uavchan/errors.hpp"

namespace uavchan {

namespace {

const Ray& central_ray(const CirSnapshot& snapshot) {
    const Ray* central = nullptr;
    for (const Ray& ray : snapshot.rays) {
        if (ray.kind != RayKind::Central) continue;
        if (central)
            throw std::invalid_argument("snapshot has multiple central rays");
        central = &ray;
    }
    if (!central)
        throw std::invalid_argument("snapshot has no central ray");
    return *central;
}

}  // namespace

double k_factor(const CirSnapshot& snapshot) {
    const Ray& central = central_ray(snapshot);
    if (snapshot.rays.size() < 2) throw infinite_k_error{};
    double other_power = 0.0;
    for (const Ray& ray : snapshot.rays)
        if (&ray != &central) other_power += ray.amplitude * ray.amplitude;
    return 10.0 *
           std::log10(central.amplitude * central.amplitude / other_power);
}

double mean_delay(const CirSnapshot& snapshot) {
    if (snapshot.rays.empty())
        throw std::invalid_argument("mean_delay: snapshot has no rays");
    double power = 0.0, weighted = 0.0;
    for (const Ray& ray : snapshot.rays) {
        const double p = ray.amplitude * ray.amplitude;
        power += p;
        weighted += p * ray.delay_ns;
    }
    return weighted / power;
}

double rms_delay_spread(const CirSnapshot& snapshot) {
    const double mean = mean_delay(snapshot);
    double power = 0.0, weighted = 0.0;
    for (const Ray& ray : snapshot.rays) {
        const double p = ray.amplitude * ray.amplitude;
        const double dt = ray.delay_ns - mean;
        power += p;
        weighted += p * dt * dt;
    }
    return std::sqrt(weighted / power);
}

FitResult fit_normal(std::span<const double> samples) {
    const std::size_t n = samples.size();
    if (n < 2)
        throw fit_error("fit_normal: need at least two samples");
    double mean = 0.0;
    for (double x : samples) mean += x;
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    const double sigma = std::sqrt(ss / static_cast<double>(n));
    if (!(sigma > 0.0))
        throw fit_error("fit_normal: degenerate sample (zero variance)");
    const double nd = static_cast<double>(n);
    const double loglik = -0.5 * nd * std::log(2.0 * std::numbers::pi) -
                          nd * std::log(sigma) - 0.5 * nd;
    return {mean, sigma, loglik};
}

FitResult fit_lognormal(std::span<const double> samples) {
    if (samples.size() < 2)
        throw fit_error("fit_lognormal: need at least two samples");
    std::vector<double> logs;
    logs.reserve(samples.size());
    double log_sum = 0.0;
    for (double x : samples) {
        if (!(x > 0.0))
            throw fit_error("fit_lognormal: samples must be positive");
        logs.push_back(std::log(x));
        log_sum += logs.back();
    }
    FitResult log_fit = fit_normal(logs);
    // Change of variables back to the original domain.
    log_fit.loglik -= log_sum;
    return log_fit;
}

std::string to_string(Metric m) {
    return m == Metric::KFactorDb ? "k-factor-db" : "rms-ds-ns";
}

std::string to_string(FitFamily f) {
    return f == FitFamily::Normal ? "normal" : "lognormal";
}

DispersionStats compare_fits(std::span<const double> samples, Metric metric) {
    constexpr double kInf = std::numeric_limits<double>::infinity();

    std::optional<FitResult> normal, lognormal;
    std::string first_failure;
    try {
        normal = fit_normal(samples);
    } catch (const fit_error& e) {
        first_failure = e.what();
    }
    try {
        lognormal = fit_lognormal(samples);
    } catch (const fit_error& e) {
        if (first_failure.empty()) first_failure = e.what();
    }
    if (!normal && !lognormal)
        throw fit_error("compare_fits: both fits infeasible (" +
                        first_failure + ")");

    DispersionStats stats;
    stats.metric = metric;
    stats.sample_count = samples.size();
    stats.loglik_normal = normal ? normal->loglik : -kInf;
    stats.loglik_lognormal = lognormal ? lognormal->loglik : -kInf;
    stats.preferred = stats.loglik_lognormal > stats.loglik_normal
                          ? FitFamily::Lognormal
                          : FitFamily::Normal;
    const FitResult& chosen =
        stats.preferred == FitFamily::Normal ? *normal : *lognormal;
    stats.mu = chosen.mu;
    stats.sigma = chosen.sigma;
    return stats;
}

}  // namespace uavchan
