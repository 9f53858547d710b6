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

#include "uavchan/pathloss.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uavchan/detail/linreg.hpp"
#include "uavchan/errors.hpp"

namespace uavchan {

void validate(const PathLossParams& p) {
    if (!(p.ple > 0.0))
        throw std::invalid_argument("pathloss: ple must be > 0");
    if (p.sigma_db < 0.0)
        throw std::invalid_argument("pathloss: sigma_db must be >= 0");
    if (!(p.d_ref_m > 0.0))
        throw std::invalid_argument("pathloss: d_ref_m must be > 0");
    if (!(p.d_corr_m > 0.0))
        throw std::invalid_argument("pathloss: d_corr_m must be > 0");
}

double mean_path_loss(double distance_m, const PathLossParams& p) {
    if (!(distance_m > 0.0))
        throw std::invalid_argument("mean_path_loss: distance must be > 0");
    return p.pl0_db + 10.0 * p.ple * std::log10(distance_m / p.d_ref_m);
}

ShadowSeries shadowing_sequence(std::span<const double> distances_m,
                                double sigma_db, double d_corr_m, Rng& rng) {
    if (sigma_db < 0.0)
        throw std::invalid_argument("shadowing_sequence: sigma_db must be >= 0");
    if (!(d_corr_m > 0.0))
        throw std::invalid_argument("shadowing_sequence: d_corr_m must be > 0");
    for (std::size_t i = 1; i < distances_m.size(); ++i)
        if (!(distances_m[i] > distances_m[i - 1]))
            throw std::invalid_argument(
                "shadowing_sequence: distances must be strictly increasing");

    ShadowSeries series;
    series.distances_m.assign(distances_m.begin(), distances_m.end());
    series.values_db.resize(distances_m.size());
    if (distances_m.empty()) return series;

    // First-order Gauss-Markov recursion: every element is marginally
    // N(0, sigma^2) and the pairwise covariance follows the exponential
    // model because the rho factors multiply across steps.
    series.values_db[0] = sigma_db * rng.normal();
    for (std::size_t i = 1; i < distances_m.size(); ++i) {
        const double dd = distances_m[i] - distances_m[i - 1];
        const double rho = std::exp(-std::numbers::ln2 * dd / d_corr_m);
        series.values_db[i] = rho * series.values_db[i - 1] +
                              std::sqrt(1.0 - rho * rho) * sigma_db *
                                  rng.normal();
    }
    return series;
}

std::vector<LagEstimate> autocorrelation(const ShadowSeries& series,
                                         std::span<const double> lags_m) {
    const std::size_t n = series.distances_m.size();
    if (n < 2)
        throw std::invalid_argument(
            "autocorrelation: series needs at least two points");
    if (series.values_db.size() != n)
        throw std::invalid_argument(
            "autocorrelation: distances/values length mismatch");
    for (double lag : lags_m)
        if (!(lag > 0.0))
            throw std::invalid_argument(
                "autocorrelation: lag bins must be positive");

    // Bin half-width: half the median sample spacing.
    std::vector<double> spacings(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
        spacings[i] = series.distances_m[i + 1] - series.distances_m[i];
    std::sort(spacings.begin(), spacings.end());
    const double median_spacing =
        (n - 1) % 2 ? spacings[(n - 1) / 2]
                    : 0.5 * (spacings[(n - 1) / 2 - 1] + spacings[(n - 1) / 2]);
    const double half_width = 0.5 * median_spacing;

    const auto& d = series.distances_m;
    const auto& s = series.values_db;

    std::vector<LagEstimate> out;
    out.reserve(lags_m.size());
    for (double lag : lags_m) {
        const double lo = lag - half_width;
        const double hi = lag + half_width;
        double sum = 0.0;
        std::size_t count = 0;
        // Both window edges only move forward as i grows.
        std::size_t jlo = 0, jhi = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (jlo < i + 1) jlo = i + 1;
            while (jlo < n && d[jlo] - d[i] < lo) ++jlo;
            if (jhi < jlo) jhi = jlo;
            while (jhi < n && d[jhi] - d[i] <= hi) ++jhi;
            for (std::size_t j = jlo; j < jhi; ++j) {
                sum += s[i] * s[j];
                ++count;
            }
        }
        LagEstimate est;
        est.lag_m = lag;
        est.pair_count = count;
        if (count > 0) est.value_db2 = sum / static_cast<double>(count);
        out.push_back(est);
    }
    return out;
}

DecorrelationFit fit_decorrelation(std::span<const LagEstimate> estimates) {
    std::vector<double> lags, logs;
    std::size_t present = 0;
    for (const auto& e : estimates) {
        if (!e.value_db2) continue;
        ++present;
        if (*e.value_db2 > 0.0) {
            lags.push_back(e.lag_m);
            logs.push_back(std::log(*e.value_db2));
        }
    }
    if (present > 0 && lags.empty())
        throw fit_error(
            "fit_decorrelation: all estimates are nonpositive, log-domain fit "
            "undefined");
    if (lags.size() < 3)
        throw fit_error(
            "fit_decorrelation: need at least three positive lag estimates");
    const auto [min_it, max_it] = std::minmax_element(lags.begin(), lags.end());
    if (!(*max_it >= 2.0 * *min_it))
        throw fit_error(
            "fit_decorrelation: lag estimates must span at least one octave");

    const auto fit = detail::ols(lags, logs);
    if (!(fit.slope < 0.0))
        throw fit_error(
            "fit_decorrelation: estimates do not decay with lag");
    return {std::exp(fit.intercept), -std::numbers::ln2 / fit.slope};
}

}  // namespace uavchan
