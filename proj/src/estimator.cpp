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

#include "uavchan/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "uavchan/detail/linreg.hpp"
#include "uavchan/discretize.hpp"
#include "uavchan/errors.hpp"

namespace uavchan {

PathLossFit fit_pathloss(std::span<const PathLossSample> samples,
                         double d_ref_m) {
    if (!(d_ref_m > 0.0))
        throw std::invalid_argument("fit_pathloss: d_ref_m must be > 0");
    if (samples.size() < 2)
        throw fit_error("fit_pathloss: need at least two samples");

    std::vector<double> x, y;
    x.reserve(samples.size());
    y.reserve(samples.size());
    for (const auto& s : samples) {
        if (!(s.distance_m > 0.0))
            throw std::invalid_argument(
                "fit_pathloss: sample distances must be > 0");
        x.push_back(10.0 * std::log10(s.distance_m / d_ref_m));
        y.push_back(s.path_loss_db);
    }
    const auto [min_it, max_it] = std::minmax_element(x.begin(), x.end());
    if (!(*max_it > *min_it))
        throw fit_error(
            "fit_pathloss: all samples at one distance, slope undefined");

    const auto fit = detail::ols(x, y);
    return {fit.slope, fit.intercept, fit.rms_residual};
}

namespace {

// Band-limited interpolation of the residual at a fractional tap.
std::complex<double> interpolate(std::span<const std::complex<double>> res,
                                 double tap) {
    std::complex<double> value{0.0, 0.0};
    for (std::size_t k = 0; k < res.size(); ++k)
        value += res[k] * sinc(tap - static_cast<double>(k));
    return value;
}

// Sub-sample peak position: maximize |interpolant|^2 within one tap of the
// peak sample by ternary search. A three-point parabola through |.|^2 is
// badly biased on a sinc-shaped pulse (flat top, deep skirts) and would
// split one physical ray into several.
double refine_peak(std::span<const std::complex<double>> res, std::size_t m) {
    double lo = std::max(0.0, static_cast<double>(m) - 1.0);
    double hi = std::min(static_cast<double>(res.size() - 1),
                         static_cast<double>(m) + 1.0);
    for (int iter = 0; iter < 40; ++iter) {
        const double third = (hi - lo) / 3.0;
        const double a = lo + third;
        const double b = hi - third;
        if (std::norm(interpolate(res, a)) < std::norm(interpolate(res, b)))
            lo = a;
        else
            hi = b;
    }
    double tap = 0.5 * (lo + hi);
    // Snap to the grid when the refinement lands next to a tap, so on-grid
    // rays cancel exactly.
    const double nearest = std::round(tap);
    if (std::abs(tap - nearest) < 1e-3) tap = nearest;
    return tap;
}

}  // namespace

std::vector<Ray> extract_mpcs(std::span<const std::complex<double>> samples,
                              double sample_period_ns, std::size_t max_rays,
                              double stop_threshold_db) {
    if (samples.empty())
        throw std::invalid_argument("extract_mpcs: empty sample vector");
    if (!(sample_period_ns > 0.0))
        throw std::invalid_argument("extract_mpcs: sample period must be > 0");
    if (max_rays < 1)
        throw std::invalid_argument("extract_mpcs: max_rays must be >= 1");
    if (!(stop_threshold_db > 0.0))
        throw std::invalid_argument(
            "extract_mpcs: stop threshold must be > 0 dB");

    const std::size_t n = samples.size();
    std::vector<std::complex<double>> residual(samples.begin(), samples.end());
    std::vector<double> power(n);

    struct Extracted {
        double tap;
        std::complex<double> gain;
    };
    std::vector<Extracted> found;

    const auto subtract = [&](double tap, std::complex<double> gain) {
        for (std::size_t k = 0; k < n; ++k)
            residual[k] -= gain * sinc(static_cast<double>(k) - tap);
    };

    // Back-fit cycle: re-estimate every ray against the residual with only
    // that ray added back. A single greedy pass estimates each ray under the
    // interference of the others; cycling the re-estimates removes that bias
    // (exactly, for on-grid rays) so later stop-threshold decisions see a
    // clean residual instead of leftover estimation bumps.
    const auto backfit = [&](int cycles) {
        for (int cycle = 0; cycle < cycles; ++cycle) {
            double worst_shift = 0.0;
            for (auto& ray : found) {
                subtract(ray.tap, -ray.gain);  // add the ray back
                const auto center = static_cast<std::size_t>(std::clamp(
                    std::round(ray.tap), 0.0, static_cast<double>(n - 1)));
                const double tap = refine_peak(residual, center);
                const std::complex<double> gain = interpolate(residual, tap);
                subtract(tap, gain);
                worst_shift = std::max(
                    worst_shift, std::max(std::abs(tap - ray.tap),
                                          std::abs(gain - ray.gain)));
                ray.tap = tap;
                ray.gain = gain;
            }
            if (worst_shift < 1e-9) break;
        }
    };

    double first_peak = 0.0;
    for (std::size_t iter = 0; iter < max_rays; ++iter) {
        for (std::size_t k = 0; k < n; ++k) power[k] = std::norm(residual[k]);
        const std::size_t m = static_cast<std::size_t>(
            std::max_element(power.begin(), power.end()) - power.begin());
        const double peak = std::sqrt(power[m]);
        if (iter == 0) {
            if (peak == 0.0)
                throw std::invalid_argument("extract_mpcs: all-zero input");
            first_peak = peak;
        } else if (peak == 0.0 ||
                   20.0 * std::log10(peak / first_peak) < -stop_threshold_db) {
            break;
        }

        // Complex amplitude off the sinc interpolant at the refined delay,
        // then cancel the ray's full contribution.
        const double tap = refine_peak(residual, m);
        const std::complex<double> gain = interpolate(residual, tap);
        if (std::abs(gain) == 0.0) break;
        subtract(tap, gain);
        found.push_back({tap, gain});

        backfit(2);
    }
    backfit(8);
    std::erase_if(found,
                  [](const Extracted& e) { return std::abs(e.gain) == 0.0; });
    if (found.empty()) return {};

    // Components closer than half a sample period are below the resolution
    // limit: coalesce them coherently (gain sum at the power centroid), the
    // way a band-limited sounder reports nearby paths as one.
    std::sort(found.begin(), found.end(),
              [](const Extracted& a, const Extracted& b) {
                  return a.tap < b.tap;
              });
    std::vector<Extracted> resolved;
    std::size_t i = 0;
    while (i < found.size()) {
        std::size_t j = i + 1;
        std::complex<double> gain_sum = found[i].gain;
        double centroid = found[i].tap * std::norm(found[i].gain);
        double power_sum = std::norm(found[i].gain);
        while (j < found.size() && found[j].tap - found[j - 1].tap < 0.5) {
            gain_sum += found[j].gain;
            centroid += found[j].tap * std::norm(found[j].gain);
            power_sum += std::norm(found[j].gain);
            ++j;
        }
        resolved.push_back({centroid / power_sum, gain_sum});
        i = j;
    }
    found = std::move(resolved);

    // Re-reference delays to the strongest extracted ray.
    const auto strongest = std::max_element(
        found.begin(), found.end(), [](const Extracted& a, const Extracted& b) {
            return std::abs(a.gain) < std::abs(b.gain);
        });
    const double reference_tap = strongest->tap;
    const std::size_t strongest_idx =
        static_cast<std::size_t>(strongest - found.begin());

    std::vector<Ray> rays;
    rays.reserve(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        const double delay = (found[i].tap - reference_tap) * sample_period_ns;
        double phase = std::arg(found[i].gain);
        if (phase < 0.0) phase += 2.0 * std::numbers::pi;
        RayKind kind = RayKind::Central;
        if (i != strongest_idx)
            kind = delay < 0.0 ? RayKind::PreCursor : RayKind::PostCursor;
        rays.push_back({delay, std::abs(found[i].gain), phase, kind});
    }
    std::sort(rays.begin(), rays.end(),
              [](const Ray& a, const Ray& b) { return a.delay_ns < b.delay_ns; });
    return rays;
}

SvFitReport fit_sv_params(std::span<const CirSnapshot> snapshots,
                          double offset_ns) {
    if (!(offset_ns > 0.0))
        throw std::invalid_argument("fit_sv_params: offset_ns must be > 0");
    if (snapshots.empty())
        throw std::invalid_argument("fit_sv_params: no snapshots");

    struct SidePool {
        std::vector<double> abs_delays;
        std::vector<double> log_amps;     // log of normalized amplitude
        std::vector<double> interarrivals;
        std::size_t ray_count = 0;
    };
    SidePool pre, post;
    std::optional<double> min_abs_delay;

    for (const CirSnapshot& snap : snapshots) {
        const Ray* central = nullptr;
        for (const Ray& ray : snap.rays)
            if (ray.kind == RayKind::Central) central = &ray;
        if (!central)
            throw std::invalid_argument(
                "fit_sv_params: snapshot without a central ray");
        const double a0 = central->amplitude;

        std::vector<double> pre_abs, post_abs;
        for (const Ray& ray : snap.rays) {
            if (ray.kind == RayKind::Central) continue;
            const double abs_delay = std::abs(ray.delay_ns);
            if (!min_abs_delay || abs_delay < *min_abs_delay)
                min_abs_delay = abs_delay;
            SidePool& side = ray.delay_ns < 0.0 ? pre : post;
            side.abs_delays.push_back(abs_delay);
            side.log_amps.push_back(std::log(ray.amplitude / a0));
            ++side.ray_count;
            (ray.delay_ns < 0.0 ? pre_abs : post_abs).push_back(abs_delay);
        }

        // Per-snapshot ordered delays give the interarrival samples; the
        // known offset is subtracted from the first arrival.
        for (auto* abs_list : {&pre_abs, &post_abs}) {
            std::sort(abs_list->begin(), abs_list->end());
            SidePool& side = abs_list == &pre_abs ? pre : post;
            double previous = offset_ns;
            for (double t : *abs_list) {
                side.interarrivals.push_back(std::max(0.0, t - previous));
                previous = t;
            }
        }
    }

    const auto fit_side = [&](const SidePool& side) {
        SvSideFit fit;
        fit.ray_count = side.ray_count;
        fit.n_mean = static_cast<double>(side.ray_count) /
                     static_cast<double>(snapshots.size());
        if (side.ray_count < 10) {
            fit.unfit_reason = "fewer than 10 pooled rays";
            return fit;
        }

        const auto [min_it, max_it] =
            std::minmax_element(side.abs_delays.begin(), side.abs_delays.end());
        if (!(*max_it > *min_it)) {
            fit.unfit_reason = "no delay spread in pooled rays";
            return fit;
        }
        const auto amp_fit = detail::ols(side.abs_delays, side.log_amps);
        if (!(amp_fit.slope < 0.0)) {
            fit.unfit_reason = "pooled amplitudes do not decay with delay";
            return fit;
        }
        fit.gamma_ns = -1.0 / amp_fit.slope;
        // Base amplitude exp(intercept) = 10^(-K/20).
        fit.k_db = -20.0 * amp_fit.intercept / std::numbers::ln10;
        fit.amplitude_rms_residual_db =
            20.0 * amp_fit.rms_residual / std::numbers::ln10;

        double total = 0.0;
        for (double ia : side.interarrivals) total += ia;
        if (!(total > 0.0)) {
            fit.unfit_reason = "zero interarrival mass";
            return fit;
        }
        fit.lambda_per_ns =
            static_cast<double>(side.interarrivals.size()) / total;
        fit.interarrival_ks =
            ks_exponential(side.interarrivals, fit.lambda_per_ns);

        fit.fitted = true;
        return fit;
    };

    SvFitReport report;
    report.pre = fit_side(pre);
    report.post = fit_side(post);
    report.min_abs_delay_ns = min_abs_delay;
    report.snapshot_count = snapshots.size();
    return report;
}

double ks_exponential(std::span<const double> samples, double rate) {
    if (samples.empty())
        throw std::invalid_argument("ks_exponential: no samples");
    if (!(rate > 0.0))
        throw std::invalid_argument("ks_exponential: rate must be > 0");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double cdf = 1.0 - std::exp(-rate * sorted[i]);
        d = std::max(d, std::abs(cdf - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - cdf));
    }
    return d;
}

}  // namespace uavchan
