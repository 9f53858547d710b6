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

#include "uavchan/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <thread>

#include <json.hpp>

#include "uavchan/errors.hpp"
#include "uavchan/io.hpp"

namespace uavchan {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void config_fail(const std::string& field,
                              const std::string& what) {
    throw std::invalid_argument("config: " + field + ": " + what);
}

const ordered_json& require(const ordered_json& j, const char* key,
                            const std::string& path) {
    if (!j.contains(key)) config_fail(path + key, "missing field");
    return j.at(key);
}

double require_number(const ordered_json& j, const char* key,
                      const std::string& path) {
    const auto& v = require(j, key, path);
    if (!v.is_number()) config_fail(path + key, "expected a number");
    return v.get<double>();
}

Vec3 parse_vec3(const ordered_json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 3 || !v[0].is_number() ||
        !v[1].is_number() || !v[2].is_number())
        config_fail(path, "expected [x, y, z] numbers");
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

ScenarioParams parse_scenario_object(const ordered_json& j,
                                     const std::string& path) {
    const auto& name = require(j, "name", path);
    if (!name.is_string()) config_fail(path + "name", "expected a string");
    ScenarioParams p;
    p.name = name.get<std::string>();
    p.k_f_db = require_number(j, "k_f_db", path);
    p.gamma_f_ns = require_number(j, "gamma_f_ns", path);
    p.lambda_f_per_ns = require_number(j, "lambda_f_per_ns", path);
    p.n_f_mean = require_number(j, "n_f_mean", path);
    p.k_b_db = require_number(j, "k_b_db", path);
    p.gamma_b_ns = require_number(j, "gamma_b_ns", path);
    p.lambda_b_per_ns = require_number(j, "lambda_b_per_ns", path);
    p.n_b_mean = require_number(j, "n_b_mean", path);
    p.offset_ns = j.value("offset_ns", 50.0);
    try {
        validate(p);
    } catch (const std::invalid_argument& e) {
        config_fail(path, e.what());
    }
    return p;
}

PathLossParams parse_pathloss(const ordered_json& j, const std::string& path) {
    PathLossParams p;
    p.ple = require_number(j, "ple", path);
    p.pl0_db = require_number(j, "pl0_db", path);
    p.d_ref_m = j.value("d_ref_m", 1.0);
    p.sigma_db = require_number(j, "sigma_db", path);
    p.d_corr_m = require_number(j, "d_corr_m", path);
    try {
        validate(p);
    } catch (const std::invalid_argument& e) {
        config_fail(path, e.what());
    }
    return p;
}

TrajectorySpec parse_trajectory(const ordered_json& j,
                                const std::string& path) {
    TrajectorySpec spec;
    if (j.contains("rx_position"))
        spec.rx_position =
            parse_vec3(j.at("rx_position"), path + "rx_position");
    const auto& legs = require(j, "legs", path);
    if (!legs.is_array() || legs.empty())
        config_fail(path + "legs", "expected a nonempty array");
    std::size_t idx = 0;
    for (const auto& leg_json : legs) {
        const std::string leg_path =
            path + "legs[" + std::to_string(idx) + "].";
        TrajectoryLeg leg;
        if (leg_json.contains("kind")) {
            const auto& kind = leg_json.at("kind");
            if (!kind.is_string()) config_fail(leg_path + "kind", "expected a string");
            try {
                leg.kind = leg_kind_from_string(kind.get<std::string>());
            } catch (const std::invalid_argument& e) {
                config_fail(leg_path + "kind", e.what());
            }
        }
        leg.start = parse_vec3(require(leg_json, "start", leg_path),
                               leg_path + "start");
        leg.end =
            parse_vec3(require(leg_json, "end", leg_path), leg_path + "end");
        leg.step_m = require_number(leg_json, "step_m", leg_path);
        spec.legs.push_back(leg);
        ++idx;
    }
    return spec;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    out << body;
    if (!out) throw io_error("write failed for " + path.string());
}

std::string csv_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string cdf_csv(const std::string& column, std::vector<double> values) {
    std::sort(values.begin(), values.end());
    std::string body = "# uavchan-cdf v1\n" + column + ",cdf\n";
    const double n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        body += csv_number(values[i]) + "," +
                csv_number(static_cast<double>(i + 1) / n) + "\n";
    return body;
}

ordered_json metric_json(const MetricReport& report) {
    ordered_json j;
    j["n"] = report.stats.n;
    j["mean"] = report.stats.mean;
    j["stddev"] = report.stats.stddev;
    j["min"] = report.stats.min;
    j["max"] = report.stats.max;
    if (report.fits) {
        ordered_json f;
        f["metric"] = to_string(report.fits->metric);
        f["mu"] = report.fits->mu;
        f["sigma"] = report.fits->sigma;
        f["loglik_normal"] = report.fits->loglik_normal;
        f["loglik_lognormal"] = report.fits->loglik_lognormal;
        f["preferred"] = to_string(report.fits->preferred);
        j["fit"] = f;
    } else {
        j["fit"] = nullptr;
        j["fit_failure"] = report.fit_failure;
    }
    return j;
}

MetricReport make_metric_report(const std::vector<double>& values,
                                Metric metric) {
    MetricReport report;
    report.stats = sample_stats(values);
    if (values.size() < 2) {
        report.fit_failure = "need at least two finite samples";
        return report;
    }
    try {
        report.fits = compare_fits(values, metric);
    } catch (const fit_error& e) {
        report.fit_failure = e.what();
    }
    return report;
}

}  // namespace

LoadedConfig parse_run_config(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") +
                                    e.what());
    }
    if (!doc.is_object()) config_fail("", "top level must be an object");

    LoadedConfig loaded;
    if (doc.contains("scenarios")) {
        const auto& extra = doc.at("scenarios");
        if (!extra.is_array()) config_fail("scenarios", "expected an array");
        std::size_t idx = 0;
        for (const auto& s : extra) {
            const std::string path =
                "scenarios[" + std::to_string(idx) + "].";
            try {
                loaded.registry.add(parse_scenario_object(s, path));
            } catch (const std::invalid_argument& e) {
                config_fail(path, e.what());
            }
            ++idx;
        }
    }

    const auto& scenario = require(doc, "scenario", "");
    if (scenario.is_string()) {
        try {
            loaded.run.scenario =
                loaded.registry.get(scenario.get<std::string>());
        } catch (const std::invalid_argument& e) {
            config_fail("scenario", e.what());
        }
    } else if (scenario.is_object()) {
        loaded.run.scenario = parse_scenario_object(scenario, "scenario.");
    } else {
        config_fail("scenario", "expected a name or a parameter object");
    }

    loaded.run.pathloss =
        parse_pathloss(require(doc, "pathloss", ""), "pathloss.");
    loaded.run.trajectory =
        parse_trajectory(require(doc, "trajectory", ""), "trajectory.");

    const auto& seed = require(doc, "seed", "");
    if (!seed.is_number_unsigned())
        config_fail("seed",
                    "a nonnegative integer seed is mandatory (runs never "
                    "default to wall-clock seeds)");
    loaded.run.seed = seed.get<std::uint64_t>();

    if (doc.contains("snapshots_per_position")) {
        const auto& spp = doc.at("snapshots_per_position");
        if (!spp.is_number_integer())
            config_fail("snapshots_per_position", "expected an integer");
        loaded.run.snapshots_per_position = spp.get<int>();
    }
    if (doc.contains("count_model")) {
        const auto& cm = doc.at("count_model");
        if (!cm.is_string()) config_fail("count_model", "expected a string");
        try {
            loaded.run.count_model =
                count_model_from_string(cm.get<std::string>());
        } catch (const std::invalid_argument& e) {
            config_fail("count_model", e.what());
        }
    }
    loaded.run.amplitude_jitter_db = doc.value("amplitude_jitter_db", 0.0);
    if (doc.contains("out_dir")) {
        const auto& od = doc.at("out_dir");
        if (!od.is_string()) config_fail("out_dir", "expected a string");
        loaded.run.out_dir = od.get<std::string>();
    }
    if (doc.contains("threads")) {
        const auto& th = doc.at("threads");
        if (!th.is_number_unsigned())
            config_fail("threads", "expected a nonnegative integer");
        loaded.run.threads = th.get<unsigned>();
    }
    return loaded;
}

LoadedConfig load_run_config(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw io_error("cannot open config file " + file.string());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_run_config(text);
}

std::vector<std::string> validate(const RunConfig& cfg) {
    validate(cfg.scenario);
    validate(cfg.pathloss);
    if (cfg.snapshots_per_position < 1)
        throw std::invalid_argument(
            "config: snapshots_per_position: must be >= 1");
    if (cfg.amplitude_jitter_db < 0.0)
        throw std::invalid_argument(
            "config: amplitude_jitter_db: must be >= 0");
    if (cfg.out_dir.empty())
        throw std::invalid_argument("config: out_dir: missing output path");
    return validate(cfg.trajectory);
}

SampleStats sample_stats(std::span<const double> values) {
    SampleStats stats;
    stats.n = values.size();
    if (values.empty()) return stats;
    double sum = 0.0;
    stats.min = values.front();
    stats.max = values.front();
    for (double v : values) {
        sum += v;
        stats.min = std::min(stats.min, v);
        stats.max = std::max(stats.max, v);
    }
    stats.mean = sum / static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - stats.mean) * (v - stats.mean);
    stats.stddev = std::sqrt(ss / static_cast<double>(values.size()));
    return stats;
}

RunResult run(const RunConfig& cfg) {
    validate(cfg);

    const auto points = build_trajectory(cfg.trajectory);
    const std::size_t n_positions = points.size();
    const std::size_t spp = static_cast<std::size_t>(cfg.snapshots_per_position);
    const std::size_t n_total = n_positions * spp;

    // Stream 0 drives the correlated shadowing along the track; stream 1+i
    // drives snapshot i. Generation order therefore cannot affect output.
    std::vector<double> track(n_positions);
    for (std::size_t i = 0; i < n_positions; ++i) track[i] = points[i].track_m;
    Rng shadow_rng(derive_seed(cfg.seed, 0));
    const ShadowSeries shadow = shadowing_sequence(
        track, cfg.pathloss.sigma_db, cfg.pathloss.d_corr_m, shadow_rng);

    GeneratorConfig gen;
    gen.scenario = cfg.scenario;
    gen.pathloss = cfg.pathloss;
    gen.count_model = cfg.count_model;
    gen.amplitude_jitter_db = cfg.amplitude_jitter_db;

    std::vector<SnapshotRecord> records(n_total);
    const auto generate_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const std::size_t pos = i / spp;
            Rng rng(derive_seed(cfg.seed, 1 + i));
            records[i].index = i;
            records[i].shadow_db = shadow.values_db[pos];
            records[i].snapshot =
                generate_snapshot(points[pos].position,
                                  cfg.trajectory.rx_position, gen,
                                  shadow.values_db[pos], rng);
        }
    };

    unsigned workers = cfg.threads;
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(
        std::min<std::size_t>(workers, std::max<std::size_t>(1, n_total)));
    if (workers <= 1) {
        generate_range(0, n_total);
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (n_total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::size_t begin = static_cast<std::size_t>(w) * chunk;
            const std::size_t end = std::min(n_total, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(generate_range, begin, end);
        }
        for (auto& t : pool) t.join();
    }

    RunResult result;
    result.position_count = n_positions;
    result.snapshot_count = n_total;

    std::vector<double> k_values, rms_values;
    k_values.reserve(n_total);
    rms_values.reserve(n_total);
    for (const SnapshotRecord& rec : records) {
        try {
            k_values.push_back(k_factor(rec.snapshot));
        } catch (const infinite_k_error&) {
            ++result.infinite_k_count;
        }
        rms_values.push_back(rms_delay_spread(rec.snapshot));
    }
    result.k_factor_db = make_metric_report(k_values, Metric::KFactorDb);
    result.rms_delay_spread_ns =
        make_metric_report(rms_values, Metric::RmsDsNs);

    std::error_code ec;
    std::filesystem::create_directories(cfg.out_dir, ec);
    if (ec)
        throw io_error("cannot create output directory " +
                       cfg.out_dir.string() + ": " + ec.message());

    result.snapshot_file = cfg.out_dir / "snapshots.txt";
    {
        std::ofstream out(result.snapshot_file, std::ios::binary);
        if (!out)
            throw io_error("cannot open " + result.snapshot_file.string() +
                           " for writing");
        write_snapshots(out, records);
        if (!out)
            throw io_error("write failed for " + result.snapshot_file.string());
    }

    // Per-position path loss: the mean model, the shadow draw, and their sum
    // (which equals -20 log10 of the central-ray amplitude).
    std::string pathloss_body =
        "# uavchan-pathloss v1\n"
        "position,track_m,link_distance_m,mean_path_loss_db,shadow_db,"
        "path_loss_db\n";
    for (std::size_t pos = 0; pos < n_positions; ++pos) {
        const double d =
            distance(points[pos].position, cfg.trajectory.rx_position);
        const double mean_pl = mean_path_loss(d, cfg.pathloss);
        pathloss_body += std::to_string(pos) + "," +
                         csv_number(points[pos].track_m) + "," +
                         csv_number(d) + "," + csv_number(mean_pl) + "," +
                         csv_number(shadow.values_db[pos]) + "," +
                         csv_number(mean_pl + shadow.values_db[pos]) + "\n";
    }
    result.pathloss_file = cfg.out_dir / "pathloss.csv";
    write_file(result.pathloss_file, pathloss_body);

    result.kfactor_cdf_file = cfg.out_dir / "kfactor_cdf.csv";
    write_file(result.kfactor_cdf_file, cdf_csv("k_factor_db", k_values));
    result.rmsds_cdf_file = cfg.out_dir / "rmsds_cdf.csv";
    write_file(result.rmsds_cdf_file,
               cdf_csv("rms_delay_spread_ns", rms_values));

    ordered_json summary;
    summary["format"] = "uavchan-summary";
    summary["version"] = 1;
    summary["scenario"] = cfg.scenario.name;
    summary["seed"] = cfg.seed;
    summary["positions"] = n_positions;
    summary["snapshots_per_position"] = cfg.snapshots_per_position;
    summary["snapshots"] = n_total;
    summary["infinite_k_count"] = result.infinite_k_count;
    summary["k_factor_db"] = metric_json(result.k_factor_db);
    summary["rms_delay_spread_ns"] = metric_json(result.rms_delay_spread_ns);
    result.summary_file = cfg.out_dir / "summary.json";
    write_file(result.summary_file, summary.dump(2) + "\n");

    return result;
}

}  // namespace uavchan
