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

#include "uavchan/analyze.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "uavchan/errors.hpp"
#include "uavchan/io.hpp"

namespace uavchan {

namespace {

using nlohmann::ordered_json;

std::string csv_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    out << body;
    if (!out) throw io_error("write failed for " + path.string());
}

// Analysis working set shared between the fits and the plot exports.
struct Pooled {
    std::vector<CirSnapshot> snapshots;
    std::vector<PathLossSample> pathloss;
    // One entry per distinct consecutive TX position (snapshot input only).
    std::vector<double> track_m;
    std::vector<double> shadow_db;
};

Pooled pool_from_snapshots(const std::vector<SnapshotRecord>& records) {
    Pooled pooled;
    pooled.snapshots.reserve(records.size());
    bool have_position = false;
    Vec3 position;
    double track = 0.0;
    for (const SnapshotRecord& rec : records) {
        pooled.snapshots.push_back(rec.snapshot);
        for (const Ray& ray : rec.snapshot.rays) {
            if (ray.kind != RayKind::Central) continue;
            pooled.pathloss.push_back({rec.snapshot.link_distance_m,
                                       -20.0 * std::log10(ray.amplitude)});
        }
        if (!have_position || !(rec.snapshot.tx_position == position)) {
            if (have_position)
                track += distance(position, rec.snapshot.tx_position);
            position = rec.snapshot.tx_position;
            have_position = true;
            pooled.track_m.push_back(track);
            pooled.shadow_db.push_back(rec.shadow_db);
        }
    }
    return pooled;
}

Pooled pool_from_cirs(const std::vector<CirRecord>& records,
                      const AnalyzeOptions& options) {
    Pooled pooled;
    pooled.snapshots.reserve(records.size());
    for (const CirRecord& rec : records) {
        CirSnapshot snap;
        snap.rays = extract_mpcs(rec.samples, rec.sample_period_ns,
                                 options.max_rays, options.stop_threshold_db);
        if (snap.rays.empty()) continue;
        // Geometry is unknown for sampled input; carry the recorded link
        // distance on a synthetic axis so snapshot validation still holds.
        const double d = rec.link_distance_m.value_or(0.0);
        snap.tx_position = {d, 0.0, 0.0};
        snap.rx_position = {0.0, 0.0, 0.0};
        snap.link_distance_m = d;
        pooled.snapshots.push_back(std::move(snap));
        if (rec.link_distance_m) {
            const Ray* central = nullptr;
            for (const Ray& ray : pooled.snapshots.back().rays)
                if (ray.kind == RayKind::Central) central = &ray;
            if (central)
                pooled.pathloss.push_back(
                    {*rec.link_distance_m,
                     -20.0 * std::log10(central->amplitude)});
        }
    }
    return pooled;
}

struct SidePlotData {
    std::vector<double> abs_delay_ns;
    std::vector<double> amp_db;  // normalized, 20 log10(a / a0)
    std::vector<double> interarrivals;
};

SidePlotData side_plot_data(std::span<const CirSnapshot> snapshots,
                            bool pre_side, double offset_ns) {
    SidePlotData data;
    for (const CirSnapshot& snap : snapshots) {
        const Ray* central = nullptr;
        for (const Ray& ray : snap.rays)
            if (ray.kind == RayKind::Central) central = &ray;
        if (!central) continue;
        std::vector<double> abs_delays;
        for (const Ray& ray : snap.rays) {
            if (ray.kind == RayKind::Central) continue;
            if ((ray.delay_ns < 0.0) != pre_side) continue;
            data.abs_delay_ns.push_back(std::abs(ray.delay_ns));
            data.amp_db.push_back(
                20.0 * std::log10(ray.amplitude / central->amplitude));
            abs_delays.push_back(std::abs(ray.delay_ns));
        }
        std::sort(abs_delays.begin(), abs_delays.end());
        double previous = offset_ns;
        for (double t : abs_delays) {
            data.interarrivals.push_back(std::max(0.0, t - previous));
            previous = t;
        }
    }
    return data;
}

void write_side_plots(const std::filesystem::path& dir, const char* side,
                      const SidePlotData& data, const SvSideFit& fit) {
    std::string scatter = "# uavchan-sv-amplitude v1\n";
    scatter += "abs_delay_ns,normalized_amplitude_db,fit_db\n";
    for (std::size_t i = 0; i < data.abs_delay_ns.size(); ++i) {
        scatter += csv_number(data.abs_delay_ns[i]) + "," +
                   csv_number(data.amp_db[i]) + ",";
        if (fit.fitted) {
            const double fit_db =
                -fit.k_db -
                20.0 * data.abs_delay_ns[i] /
                    (fit.gamma_ns * std::numbers::ln10);
            scatter += csv_number(fit_db);
        }
        scatter += "\n";
    }
    write_file(dir / ("sv_amplitude_" + std::string(side) + ".csv"), scatter);

    std::vector<double> sorted = data.interarrivals;
    std::sort(sorted.begin(), sorted.end());
    std::string cdf = "# uavchan-cdf v1\n";
    cdf += "interarrival_ns,empirical_cdf,exponential_cdf\n";
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        cdf += csv_number(sorted[i]) + "," +
               csv_number(static_cast<double>(i + 1) / n) + ",";
        if (fit.fitted)
            cdf += csv_number(1.0 -
                              std::exp(-fit.lambda_per_ns * sorted[i]));
        cdf += "\n";
    }
    write_file(dir / ("interarrival_cdf_" + std::string(side) + ".csv"), cdf);
}

ordered_json side_json(const SvSideFit& fit) {
    ordered_json j;
    j["fitted"] = fit.fitted;
    j["ray_count"] = fit.ray_count;
    j["n_mean"] = fit.n_mean;
    if (fit.fitted) {
        j["k_db"] = fit.k_db;
        j["gamma_ns"] = fit.gamma_ns;
        j["lambda_per_ns"] = fit.lambda_per_ns;
        j["amplitude_rms_residual_db"] = fit.amplitude_rms_residual_db;
        j["interarrival_ks"] = fit.interarrival_ks;
    } else {
        j["unfit_reason"] = fit.unfit_reason;
    }
    return j;
}

}  // namespace

AnalysisReport analyze_file(const std::filesystem::path& input,
                            const AnalyzeOptions& options) {
    std::ifstream in(input, std::ios::binary);
    if (!in) throw io_error("cannot open " + input.string());

    const StreamKind kind = sniff_stream(in);
    Pooled pooled;
    AnalysisReport report;
    if (kind == StreamKind::Snapshots) {
        report.input_kind = "snapshots";
        pooled = pool_from_snapshots(read_snapshots(in));
    } else {
        report.input_kind = "cir";
        pooled = pool_from_cirs(read_cirs(in), options);
    }
    if (pooled.snapshots.empty())
        throw std::invalid_argument("input holds no records");

    report.snapshot_count = pooled.snapshots.size();
    report.offset_ns = options.offset_ns;
    report.sv = fit_sv_params(pooled.snapshots, options.offset_ns);

    try {
        report.pathloss = fit_pathloss(pooled.pathloss, options.d_ref_m);
    } catch (const std::exception& e) {
        report.pathloss_failure = e.what();
    }

    std::vector<LagEstimate> shadow_lags;
    if (kind == StreamKind::Snapshots && pooled.track_m.size() >= 2) {
        try {
            ShadowSeries series{pooled.track_m, pooled.shadow_db};
            std::vector<double> spacings(series.distances_m.size() - 1);
            for (std::size_t i = 0; i + 1 < series.distances_m.size(); ++i)
                spacings[i] =
                    series.distances_m[i + 1] - series.distances_m[i];
            std::sort(spacings.begin(), spacings.end());
            const double median = spacings[spacings.size() / 2];
            std::vector<double> lags;
            for (int k = 1; k <= 15; ++k)
                lags.push_back(median * static_cast<double>(k));
            shadow_lags = autocorrelation(series, lags);
            report.shadowing = fit_decorrelation(shadow_lags);
        } catch (const std::exception& e) {
            report.shadowing_failure = e.what();
        }
    } else {
        report.shadowing_failure =
            kind == StreamKind::Cirs
                ? "shadow values are not part of sampled-CIR input"
                : "track too short to estimate shadowing correlation";
    }

    if (options.plots_dir) {
        const auto& dir = *options.plots_dir;
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            throw io_error("cannot create plot directory " + dir.string() +
                           ": " + ec.message());

        if (!pooled.pathloss.empty()) {
            std::string scatter = "# uavchan-pathloss-scatter v1\n";
            scatter += "distance_m,path_loss_db,fit_db\n";
            for (const PathLossSample& s : pooled.pathloss) {
                scatter +=
                    csv_number(s.distance_m) + "," + csv_number(s.path_loss_db);
                scatter += ",";
                if (report.pathloss)
                    scatter += csv_number(
                        report.pathloss->pl0_db +
                        10.0 * report.pathloss->ple *
                            std::log10(s.distance_m / options.d_ref_m));
                scatter += "\n";
            }
            write_file(dir / "pathloss_scatter.csv", scatter);
        }

        if (!shadow_lags.empty()) {
            std::string body = "# uavchan-shadow-autocorrelation v1\n";
            body += "lag_m,estimate_db2,pair_count,fit_db2\n";
            for (const LagEstimate& e : shadow_lags) {
                body += csv_number(e.lag_m) + ",";
                if (e.value_db2) body += csv_number(*e.value_db2);
                body += "," + std::to_string(e.pair_count) + ",";
                if (report.shadowing)
                    body += csv_number(report.shadowing->sigma_sq_db2 *
                                       std::exp(-std::numbers::ln2 * e.lag_m /
                                                report.shadowing->d_corr_m));
                body += "\n";
            }
            write_file(dir / "shadow_autocorrelation.csv", body);
        }

        write_side_plots(
            dir, "pre",
            side_plot_data(pooled.snapshots, true, options.offset_ns),
            report.sv.pre);
        write_side_plots(
            dir, "post",
            side_plot_data(pooled.snapshots, false, options.offset_ns),
            report.sv.post);
    }
    return report;
}

std::string report_to_json(const AnalysisReport& report) {
    ordered_json j;
    j["format"] = "uavchan-analysis";
    j["version"] = 1;
    j["input_kind"] = report.input_kind;
    j["snapshots"] = report.snapshot_count;
    j["offset_ns"] = report.offset_ns;

    ordered_json sv;
    sv["pre"] = side_json(report.sv.pre);
    sv["post"] = side_json(report.sv.post);
    if (report.sv.min_abs_delay_ns)
        sv["min_abs_delay_ns"] = *report.sv.min_abs_delay_ns;
    else
        sv["min_abs_delay_ns"] = nullptr;
    j["sv_fit"] = sv;

    if (report.pathloss) {
        ordered_json pl;
        pl["ple"] = report.pathloss->ple;
        pl["pl0_db"] = report.pathloss->pl0_db;
        pl["sigma_db"] = report.pathloss->sigma_db;
        j["pathloss_fit"] = pl;
    } else {
        j["pathloss_fit"] = nullptr;
        j["pathloss_failure"] = report.pathloss_failure;
    }

    if (report.shadowing) {
        ordered_json sh;
        sh["sigma_sq_db2"] = report.shadowing->sigma_sq_db2;
        sh["d_corr_m"] = report.shadowing->d_corr_m;
        j["shadowing_fit"] = sh;
    } else {
        j["shadowing_fit"] = nullptr;
        j["shadowing_failure"] = report.shadowing_failure;
    }
    return j.dump(2) + "\n";
}

}  // namespace uavchan
