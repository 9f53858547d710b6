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

#ifndef UAVCHAN_DISPERSION_HPP
#define UAVCHAN_DISPERSION_HPP

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>

#include "uavchan/types.hpp"

namespace uavchan {

/// Raised by k_factor for snapshots with no cursor rays (the power ratio is
/// infinite). Aggregators catch this, skip the snapshot, and report the
/// count separately so ensemble statistics are not biased.
struct infinite_k_error : std::domain_error {
    infinite_k_error()
        : std::domain_error(
              "K-factor is infinite: snapshot has no cursor rays") {}
};

/// Central-ray power over the summed power of all other rays, in dB.
double k_factor(const CirSnapshot& snapshot);

/// Power-weighted mean of the (signed) ray delays, ns.
double mean_delay(const CirSnapshot& snapshot);

/// Power-weighted standard deviation of ray delays about mean_delay, ns.
double rms_delay_spread(const CirSnapshot& snapshot);

struct FitResult {
    double mu = 0.0;
    double sigma = 0.0;
    double loglik = 0.0;
};

/// Gaussian maximum-likelihood fit (sigma with divisor n, so the
/// log-likelihood is evaluated at the true MLE).
FitResult fit_normal(std::span<const double> samples);

/// Gaussian MLE on log(samples); the log-likelihood is evaluated in the
/// original domain (it includes the -sum(log x) Jacobian term), so it is
/// directly comparable with fit_normal on the same samples.
FitResult fit_lognormal(std::span<const double> samples);

enum class Metric { KFactorDb, RmsDsNs };
enum class FitFamily { Normal, Lognormal };

std::string to_string(Metric m);
std::string to_string(FitFamily f);

/// Fitted distribution summary for one dispersion metric. mu/sigma are the
/// preferred family's parameters (log-domain when lognormal is preferred).
struct DispersionStats {
    Metric metric = Metric::KFactorDb;
    double mu = 0.0;
    double sigma = 0.0;
    double loglik_normal = 0.0;     // -inf when the fit is infeasible
    double loglik_lognormal = 0.0;  // -inf when the fit is infeasible
    FitFamily preferred = FitFamily::Normal;
    std::size_t sample_count = 0;
};

/// Runs both fits and prefers the larger log-likelihood (ties go to normal).
/// An infeasible family is flagged with a -inf log-likelihood and the other
/// wins by default; throws fit_error only when both families fail.
DispersionStats compare_fits(std::span<const double> samples, Metric metric);

}  // namespace uavchan

#endif
