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

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "uavchan/dispersion.hpp"
#include "uavchan/errors.hpp"
#include "uavchan/rng.hpp"
#include "uavchan/sv_generator.hpp"

using namespace uavchan;

namespace {

CirSnapshot snapshot_with(std::vector<Ray> rays) {
    CirSnapshot snap;
    snap.tx_position = {0, 0, 10};
    snap.rx_position = {0, 0, 1};
    snap.link_distance_m = 9.0;
    snap.rays = std::move(rays);
    return snap;
}

// Log-density sums evaluated directly, independent of the fit internals.
double normal_loglik(std::span<const double> xs, double mu, double sigma) {
    double ll = 0.0;
    for (double x : xs)
        ll += -0.5 * std::log(2.0 * std::numbers::pi) - std::log(sigma) -
              0.5 * (x - mu) * (x - mu) / (sigma * sigma);
    return ll;
}

double lognormal_loglik(std::span<const double> xs, double mu, double sigma) {
    double ll = 0.0;
    for (double x : xs) {
        const double lx = std::log(x);
        ll += -0.5 * std::log(2.0 * std::numbers::pi) - std::log(sigma) -
              std::log(x) - 0.5 * (lx - mu) * (lx - mu) / (sigma * sigma);
    }
    return ll;
}

}  // namespace

TEST_CASE("k-factor hand ratios") {
    const CirSnapshot two = snapshot_with(
        {{0.0, std::sqrt(2.0), 0.0, RayKind::Central},
         {100.0, 1.0, 0.0, RayKind::PostCursor}});
    CHECK(k_factor(two) == doctest::Approx(10.0 * std::log10(2.0)).epsilon(1e-12));
    CHECK(k_factor(two) == doctest::Approx(3.0103).epsilon(1e-4));

    // Central power equal to the summed cursor power gives 0 dB.
    const CirSnapshot balanced = snapshot_with(
        {{-80.0, 1.0, 0.0, RayKind::PreCursor},
         {0.0, std::sqrt(2.0), 0.0, RayKind::Central},
         {100.0, 1.0, 0.0, RayKind::PostCursor}});
    CHECK(k_factor(balanced) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("single-ray snapshots raise the infinite-K signal") {
    const CirSnapshot lone =
        snapshot_with({{0.0, 0.5, 0.0, RayKind::Central}});
    CHECK_THROWS_AS(k_factor(lone), infinite_k_error);
}

TEST_CASE("k-factor is antitone in any cursor amplitude") {
    double previous = std::numeric_limits<double>::infinity();
    for (double amp : {0.1, 0.3, 0.5, 0.9}) {
        const CirSnapshot snap = snapshot_with(
            {{0.0, 1.0, 0.0, RayKind::Central},
             {60.0, amp, 0.0, RayKind::PostCursor},
             {200.0, 0.05, 0.0, RayKind::PostCursor}});
        const double k = k_factor(snap);
        CHECK(k < previous);
        previous = k;
    }
}

TEST_CASE("mean delay hand cases") {
    CHECK(mean_delay(snapshot_with({{0.0, 1.0, 0.0, RayKind::Central}})) ==
          0.0);

    const CirSnapshot equal = snapshot_with(
        {{0.0, 1.0, 0.0, RayKind::Central},
         {100.0, 1.0, 0.0, RayKind::PostCursor}});
    CHECK(mean_delay(equal) == doctest::Approx(50.0).epsilon(1e-12));

    // Powers 3:1 at 0 and 100 ns.
    const CirSnapshot skewed = snapshot_with(
        {{0.0, std::sqrt(3.0), 0.0, RayKind::Central},
         {100.0, 1.0, 0.0, RayKind::PostCursor}});
    CHECK(mean_delay(skewed) == doctest::Approx(25.0).epsilon(1e-12));

    CHECK_THROWS_AS(mean_delay(snapshot_with({})), std::invalid_argument);
}

TEST_CASE("rms delay spread hand cases") {
    CHECK(rms_delay_spread(
              snapshot_with({{0.0, 1.0, 0.0, RayKind::Central}})) == 0.0);

    const CirSnapshot equal = snapshot_with(
        {{0.0, 1.0, 0.0, RayKind::Central},
         {100.0, 1.0, 0.0, RayKind::PostCursor}});
    CHECK(rms_delay_spread(equal) == doctest::Approx(50.0).epsilon(1e-12));

    const CirSnapshot skewed = snapshot_with(
        {{0.0, std::sqrt(3.0), 0.0, RayKind::Central},
         {100.0, 1.0, 0.0, RayKind::PostCursor}});
    CHECK(rms_delay_spread(skewed) ==
          doctest::Approx(std::sqrt(1875.0)).epsilon(1e-12));
    CHECK(rms_delay_spread(skewed) == doctest::Approx(43.301).epsilon(1e-4));
}

TEST_CASE("metrics are scale covariant and delay-shift covariant") {
    Rng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Ray> rays{{0.0, 1.0, 0.0, RayKind::Central}};
        const int extra = 2 + static_cast<int>(rng.uniform01() * 5);
        for (int i = 0; i < extra; ++i)
            rays.push_back({60.0 + 400.0 * rng.uniform01(),
                            0.05 + 0.8 * rng.uniform01(), rng.phase(),
                            RayKind::PostCursor});
        const CirSnapshot base = snapshot_with(rays);

        const double c = 0.1 + 5.0 * rng.uniform01();
        std::vector<Ray> scaled = rays;
        for (Ray& ray : scaled) ray.amplitude *= c;
        const CirSnapshot scaled_snap = snapshot_with(scaled);
        CHECK(k_factor(scaled_snap) ==
              doctest::Approx(k_factor(base)).epsilon(1e-12));
        CHECK(mean_delay(scaled_snap) ==
              doctest::Approx(mean_delay(base)).epsilon(1e-12));
        CHECK(rms_delay_spread(scaled_snap) ==
              doctest::Approx(rms_delay_spread(base)).epsilon(1e-12));

        const double shift = -200.0 + 400.0 * rng.uniform01();
        std::vector<Ray> shifted = rays;
        for (Ray& ray : shifted) ray.delay_ns += shift;
        const CirSnapshot shifted_snap = snapshot_with(shifted);
        CHECK(mean_delay(shifted_snap) ==
              doctest::Approx(mean_delay(base) + shift).epsilon(1e-9));
        CHECK(rms_delay_spread(shifted_snap) ==
              doctest::Approx(rms_delay_spread(base)).epsilon(1e-9));
        CHECK(rms_delay_spread(base) >= 0.0);
    }
}

TEST_CASE("two-point normal MLE") {
    const std::vector<double> samples{-1.0, 1.0};
    const FitResult fit = fit_normal(samples);
    CHECK(fit.mu == 0.0);
    CHECK(fit.sigma == 1.0);  // divisor n
    CHECK(fit.loglik ==
          doctest::Approx(normal_loglik(samples, 0.0, 1.0)).epsilon(1e-12));
}

TEST_CASE("normal fit recovers generating parameters") {
    Rng rng(140);
    const int n = 1000000;
    std::vector<double> samples(n);
    for (auto& s : samples) s = 6.15 + 4.36 * rng.normal();
    const FitResult fit = fit_normal(samples);
    CHECK(std::abs(fit.mu - 6.15) < 0.02);
    CHECK(std::abs(fit.sigma - 4.36) < 0.02);
    CHECK(fit.loglik == doctest::Approx(normal_loglik(samples, fit.mu,
                                                      fit.sigma))
                            .epsilon(1e-9));
}

TEST_CASE("degenerate samples are rejected") {
    const std::vector<double> constant{2.0, 2.0, 2.0};
    CHECK_THROWS_AS(fit_normal(constant), fit_error);
    CHECK_THROWS_AS(fit_normal(std::vector<double>{1.0}), fit_error);
    CHECK_THROWS_AS(fit_lognormal(constant), fit_error);
}

TEST_CASE("two-point lognormal MLE in the log domain") {
    const std::vector<double> samples{std::exp(-1.0), std::exp(1.0)};
    const FitResult fit = fit_lognormal(samples);
    CHECK(fit.mu == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fit.sigma == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(fit.loglik ==
          doctest::Approx(lognormal_loglik(samples, 0.0, 1.0)).epsilon(1e-12));
}

TEST_CASE("lognormal fit recovers generating parameters") {
    Rng rng(141);
    const int n = 1000000;
    std::vector<double> samples(n);
    for (auto& s : samples) s = std::exp(5.0 + 0.3 * rng.normal());
    const FitResult fit = fit_lognormal(samples);
    CHECK(fit.mu == doctest::Approx(5.0).epsilon(0.01));
    CHECK(fit.sigma == doctest::Approx(0.3).epsilon(0.01));
    CHECK(fit.loglik ==
          doctest::Approx(lognormal_loglik(samples, fit.mu, fit.sigma))
              .epsilon(1e-9));
}

TEST_CASE("nonpositive samples break the lognormal fit") {
    CHECK_THROWS_AS(fit_lognormal(std::vector<double>{1.0, 0.0, 2.0}),
                    fit_error);
    CHECK_THROWS_AS(fit_lognormal(std::vector<double>{1.0, -3.0}), fit_error);
}

TEST_CASE("model comparison prefers the generating family") {
    Rng rng(7);
    const int n = 100000;

    std::vector<double> gaussian(n);
    for (auto& s : gaussian) s = 100.0 + 5.0 * rng.normal();  // mean >> 5 sigma
    const DispersionStats g = compare_fits(gaussian, Metric::RmsDsNs);
    CHECK(g.preferred == FitFamily::Normal);
    CHECK(g.loglik_normal > g.loglik_lognormal);

    std::vector<double> skewed(n);
    for (auto& s : skewed) s = std::exp(1.0 + 1.2 * rng.normal());
    const DispersionStats l = compare_fits(skewed, Metric::RmsDsNs);
    CHECK(l.preferred == FitFamily::Lognormal);
    CHECK(l.loglik_lognormal > l.loglik_normal);
}

TEST_CASE("comparison carries both likelihoods and a consistent preference") {
    const std::vector<double> samples{1.0, 2.0};
    const DispersionStats stats = compare_fits(samples, Metric::KFactorDb);
    CHECK(std::isfinite(stats.loglik_normal));
    CHECK(std::isfinite(stats.loglik_lognormal));
    if (stats.preferred == FitFamily::Normal)
        CHECK(stats.loglik_normal >= stats.loglik_lognormal);
    else
        CHECK(stats.loglik_lognormal > stats.loglik_normal);
    CHECK(stats.sample_count == 2);
}

TEST_CASE("infeasible lognormal falls back to normal, flagged") {
    const std::vector<double> with_negatives{-1.0, 0.5, 2.0, 3.0};
    const DispersionStats stats =
        compare_fits(with_negatives, Metric::KFactorDb);
    CHECK(stats.preferred == FitFamily::Normal);
    CHECK(stats.loglik_lognormal ==
          -std::numeric_limits<double>::infinity());
    CHECK(std::isfinite(stats.loglik_normal));

    CHECK_THROWS_AS(compare_fits(std::vector<double>{3.0, 3.0, 3.0},
                                 Metric::KFactorDb),
                    fit_error);
}

TEST_CASE("grass lawn ensembles carry larger K than office buildings") {
    const auto ensemble_mean_k = [](const std::string& name) {
        GeneratorConfig cfg;
        cfg.scenario = scenario_params(name);
        cfg.pathloss = {.ple = 1.75,
                        .pl0_db = 40.0,
                        .d_ref_m = 1.0,
                        .sigma_db = 3.0,
                        .d_corr_m = 4.5};
        double sum = 0.0;
        std::size_t count = 0;
        for (std::uint64_t i = 0; i < 10000; ++i) {
            Rng rng(derive_seed(1234, i));
            const CirSnapshot snap =
                generate_snapshot({0, 0, 35}, {0, 0, 1}, cfg, rng);
            try {
                sum += k_factor(snap);
                ++count;
            } catch (const infinite_k_error&) {
            }
        }
        return sum / static_cast<double>(count);
    };
    CHECK(ensemble_mean_k("grass-lawn") >
          ensemble_mean_k("office-buildings"));
}
