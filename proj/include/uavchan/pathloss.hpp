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

#ifndef UAVCHAN_PATHLOSS_HPP
#define UAVCHAN_PATHLOSS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "uavchan/rng.hpp"

namespace uavchan {

/// Log-distance path loss with lognormal shadowing:
///   PL(d) = pl0_db + 10 * ple * log10(d / d_ref_m) + S
/// where S ~ N(0, sigma_db^2) in dB, spatially correlated with covariance
/// sigma^2 * exp(-ln2 * dd / d_corr_m) at track separation dd.
struct PathLossParams {
    double ple = 0.0;       // path loss exponent
    double pl0_db = 0.0;    // reference path loss at d_ref_m
    double d_ref_m = 1.0;   // reference distance
    double sigma_db = 0.0;  // shadow fading standard deviation
    double d_corr_m = 1.0;  // de-correlation distance
};

void validate(const PathLossParams& p);

/// Mean (shadowing-free) path loss in dB at distance d > 0.
double mean_path_loss(double distance_m, const PathLossParams& p);

/// Shadow fading values along a track, one per position.
struct ShadowSeries {
    std::vector<double> distances_m;  // strictly increasing
    std::vector<double> values_db;
};

/// Correlated shadowing along a track via the first-order Gauss-Markov
/// recursion
///   S_{k+1} = rho_k S_k + sqrt(1 - rho_k^2) * sigma * w_k,
///   rho_k   = exp(-ln2 * dd_k / d_corr_m),
/// which reproduces the exponential covariance exactly on arbitrary
/// (non-uniform) spacings. Marginal variance is sigma^2 at every point.
ShadowSeries shadowing_sequence(std::span<const double> distances_m,
                                double sigma_db, double d_corr_m, Rng& rng);

/// One empirical autocorrelation estimate: the average of S(d) S(d + dd)
/// over every position pair whose separation falls in the bin. Bins that
/// catch no pair carry no value (never a silent zero).
struct LagEstimate {
    double lag_m = 0.0;
    std::optional<double> value_db2;
    std::size_t pair_count = 0;
};

/// Product-moment autocorrelation of a shadow series at the requested lags.
/// Bin half-width is half the median sample spacing.
std::vector<LagEstimate> autocorrelation(const ShadowSeries& series,
                                         std::span<const double> lags_m);

struct DecorrelationFit {
    double sigma_sq_db2 = 0.0;
    double d_corr_m = 0.0;
};

/// Least-squares fit of log r(dd) = log sigma^2 - (ln2 / d_corr) * dd over
/// the positive estimates. Needs at least three positive estimates spanning
/// an octave of lag, and a decaying trend.
DecorrelationFit fit_decorrelation(std::span<const LagEstimate> estimates);

}  // namespace uavchan

#endif
