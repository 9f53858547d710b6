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

#ifndef UAVCHAN_ESTIMATOR_HPP
#define UAVCHAN_ESTIMATOR_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "uavchan/types.hpp"

namespace uavchan {

/// One (distance, path loss) observation for the log-distance regression.
struct PathLossSample {
    double distance_m = 0.0;
    double path_loss_db = 0.0;
};

struct PathLossFit {
    double ple = 0.0;
    double pl0_db = 0.0;
    double sigma_db = 0.0;  // RMS regression residual
};

/// Ordinary least squares of path loss on 10 * log10(d / d_ref_m).
PathLossFit fit_pathloss(std::span<const PathLossSample> samples,
                         double d_ref_m);

/// Serial-cancellation extraction of discrete MPCs from a band-limited
/// sampled CIR. Each iteration takes the strongest residual peak, refines
/// the delay to sub-sample precision by maximizing the sinc interpolant
/// around that peak, reads the complex amplitude off the interpolant at the
/// refined delay, and subtracts the ray's sinc-shaped contribution; the ray
/// set is back-fitted after every extraction so stop decisions see a clean
/// residual. Stops at max_rays or once the residual peak falls
/// stop_threshold_db below the first peak. Components closer than half a
/// sample period merge coherently (the resolution limit). Returned delays
/// are re-referenced to the strongest ray (delay 0) and sorted ascending.
std::vector<Ray> extract_mpcs(std::span<const std::complex<double>> samples,
                              double sample_period_ns, std::size_t max_rays,
                              double stop_threshold_db = 25.0);

/// One side (pre- or post-cursor) of a fitted SV parameter set.
struct SvSideFit {
    bool fitted = false;
    std::string unfit_reason;  // set when fitted == false
    double k_db = 0.0;
    double gamma_ns = 0.0;
    double lambda_per_ns = 0.0;
    double n_mean = 0.0;
    double amplitude_rms_residual_db = 0.0;  // log-amplitude fit residual
    double interarrival_ks = 0.0;  // KS vs Exp(lambda), CDF-fit diagnostic
    std::size_t ray_count = 0;
};

struct SvFitReport {
    SvSideFit pre;
    SvSideFit post;
    std::optional<double> min_abs_delay_ns;  // offset sanity diagnostic
    std::size_t snapshot_count = 0;
};

/// Fits the eight SV parameters back from a snapshot ensemble. Amplitudes
/// are normalized per snapshot by the central amplitude and pooled per side;
/// gamma and the amplitude base come from least squares of log amplitude vs
/// |tau| (K follows from the base); lambda is the exponential interarrival
/// MLE over per-snapshot ordered delays with offset_ns subtracted from the
/// first; the mean count is the ensemble average. offset_ns is treated as
/// known, not re-estimated. A side with fewer than 10 pooled rays is
/// flagged unfit instead of fitted.
SvFitReport fit_sv_params(std::span<const CirSnapshot> snapshots,
                          double offset_ns);

/// One-sample Kolmogorov-Smirnov statistic of samples against Exp(rate).
double ks_exponential(std::span<const double> samples, double rate);

}  // namespace uavchan

#endif
