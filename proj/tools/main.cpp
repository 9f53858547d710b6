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

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "uavchan/analyze.hpp"
#include "uavchan/discretize.hpp"
#include "uavchan/errors.hpp"
#include "uavchan/io.hpp"
#include "uavchan/run.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitFit = 3;

void print_scenario(const uavchan::ScenarioParams& p) {
    std::cout << p.name << ":\n"
              << "  k_f_db=" << p.k_f_db << " gamma_f_ns=" << p.gamma_f_ns
              << " lambda_f_per_ns=" << p.lambda_f_per_ns
              << " n_f_mean=" << p.n_f_mean << "\n"
              << "  k_b_db=" << p.k_b_db << " gamma_b_ns=" << p.gamma_b_ns
              << " lambda_b_per_ns=" << p.lambda_b_per_ns
              << " n_b_mean=" << p.n_b_mean << "\n"
              << "  offset_ns=" << p.offset_ns << "\n";
}

int cmd_scenarios(const std::string& config_path) {
    uavchan::ScenarioRegistry registry;
    if (!config_path.empty())
        registry = uavchan::load_run_config(config_path).registry;
    for (const auto& name : registry.names())
        print_scenario(registry.get(name));
    return kExitOk;
}

struct RunArgs {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    std::string scenario;
    std::optional<unsigned> threads;
};

int cmd_run(const RunArgs& args) {
    uavchan::LoadedConfig loaded = uavchan::load_run_config(args.config_path);
    if (!args.scenario.empty())
        loaded.run.scenario = loaded.registry.get(args.scenario);
    if (args.seed) loaded.run.seed = *args.seed;
    if (!args.out_dir.empty()) loaded.run.out_dir = args.out_dir;
    if (args.threads) loaded.run.threads = *args.threads;

    for (const auto& warning : uavchan::validate(loaded.run))
        std::cerr << "warning: " << warning << "\n";

    const uavchan::RunResult result = uavchan::run(loaded.run);
    std::cout << "scenario " << loaded.run.scenario.name << ": "
              << result.snapshot_count << " snapshots over "
              << result.position_count << " positions ("
              << result.infinite_k_count << " with infinite K)\n";
    std::cout << "wrote " << result.snapshot_file.string() << "\n"
              << "wrote " << result.pathloss_file.string() << "\n"
              << "wrote " << result.kfactor_cdf_file.string() << "\n"
              << "wrote " << result.rmsds_cdf_file.string() << "\n"
              << "wrote " << result.summary_file.string() << "\n";
    return kExitOk;
}

struct AnalyzeArgs {
    std::string input;
    std::string out_path;
    uavchan::AnalyzeOptions options;
    std::string plots_dir;
};

int cmd_analyze(AnalyzeArgs args) {
    if (!args.plots_dir.empty()) args.options.plots_dir = args.plots_dir;
    const uavchan::AnalysisReport report =
        uavchan::analyze_file(args.input, args.options);
    const std::string json = uavchan::report_to_json(report);
    if (args.out_path.empty()) {
        std::cout << json;
    } else {
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out)
            throw uavchan::io_error("cannot open " + args.out_path +
                                    " for writing");
        out << json;
        if (!out) throw uavchan::io_error("write failed for " + args.out_path);
        std::cout << "wrote " << args.out_path << "\n";
    }
    return kExitOk;
}

struct DiscretizeArgs {
    std::string input;
    std::string out_path;
    double period_ns = 50.0;  // 20 MHz measurement bandwidth
    std::optional<std::size_t> n_samples;
    std::optional<double> t0_ns;
};

int cmd_discretize(const DiscretizeArgs& args) {
    std::ifstream in(args.input, std::ios::binary);
    if (!in) throw uavchan::io_error("cannot open " + args.input);
    const auto records = uavchan::read_snapshots(in);
    if (records.empty())
        throw std::invalid_argument("input holds no snapshot records");

    std::vector<uavchan::CirRecord> cirs;
    cirs.reserve(records.size());
    for (const auto& rec : records) {
        double min_delay = 0.0, max_delay = 0.0;
        for (const auto& ray : rec.snapshot.rays) {
            min_delay = std::min(min_delay, ray.delay_ns);
            max_delay = std::max(max_delay, ray.delay_ns);
        }
        // Default window: 20 guard taps on each side of the ray span.
        const double t0 =
            args.t0_ns ? *args.t0_ns : min_delay - 20.0 * args.period_ns;
        const std::size_t n =
            args.n_samples
                ? *args.n_samples
                : static_cast<std::size_t>(
                      std::ceil((max_delay - t0) / args.period_ns)) +
                      21;

        uavchan::CirRecord cir;
        cir.index = rec.index;
        cir.sample_period_ns = args.period_ns;
        cir.t0_ns = t0;
        cir.link_distance_m = rec.snapshot.link_distance_m;
        cir.samples =
            uavchan::discretize(rec.snapshot.rays, args.period_ns, n, t0);
        cirs.push_back(std::move(cir));
    }

    if (args.out_path.empty()) {
        uavchan::write_cirs(std::cout, cirs);
    } else {
        std::ofstream out(args.out_path, std::ios::binary);
        if (!out)
            throw uavchan::io_error("cannot open " + args.out_path +
                                    " for writing");
        uavchan::write_cirs(out, cirs);
        if (!out) throw uavchan::io_error("write failed for " + args.out_path);
        std::cout << "wrote " << args.out_path << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "uavchan: low-altitude UAV-to-ground channel simulator and "
        "parameter estimator"};
    app.require_subcommand(1);

    auto* scenarios_cmd =
        app.add_subcommand("scenarios", "List the known scenario parameter sets");
    std::string scenarios_config;
    scenarios_cmd->add_option("--config", scenarios_config,
                              "Config document with extra scenarios");

    RunArgs run_args;
    auto* run_cmd = app.add_subcommand(
        "run", "Generate snapshots and statistics along a trajectory");
    run_cmd->add_option("--config", run_args.config_path, "Run config document")
        ->required();
    std::uint64_t seed_value = 0;
    auto* seed_opt =
        run_cmd->add_option("--seed", seed_value, "Override the config seed");
    run_cmd->add_option("--out", run_args.out_dir,
                        "Override the config output directory");
    run_cmd->add_option("--scenario", run_args.scenario,
                        "Override the config scenario by name");
    unsigned threads_value = 0;
    auto* threads_opt = run_cmd->add_option(
        "--threads", threads_value, "Generation workers (0 = hardware)");

    AnalyzeArgs analyze_args;
    auto* analyze_cmd = app.add_subcommand(
        "analyze", "Fit model parameters back from a snapshot or CIR stream");
    analyze_cmd
        ->add_option("input", analyze_args.input,
                     "Snapshot stream or sampled-CIR stream")
        ->required();
    analyze_cmd->add_option("--out", analyze_args.out_path,
                            "Report path (default: stdout)");
    analyze_cmd->add_option("--offset-ns", analyze_args.options.offset_ns,
                            "Known cursor delay offset");
    analyze_cmd->add_option("--d-ref-m", analyze_args.options.d_ref_m,
                            "Path-loss reference distance");
    analyze_cmd->add_option("--max-rays", analyze_args.options.max_rays,
                            "Extraction cap per CIR record");
    analyze_cmd->add_option("--threshold-db",
                            analyze_args.options.stop_threshold_db,
                            "Extraction stop threshold below the first peak");
    analyze_cmd->add_option("--plots", analyze_args.plots_dir,
                            "Directory for plot-ready CSV exports");

    DiscretizeArgs discretize_args;
    auto* discretize_cmd = app.add_subcommand(
        "discretize", "Band-limit a snapshot stream into sampled CIRs");
    discretize_cmd
        ->add_option("input", discretize_args.input, "Snapshot stream")
        ->required();
    discretize_cmd->add_option("--out", discretize_args.out_path,
                               "CIR stream path (default: stdout)");
    discretize_cmd->add_option("--period-ns", discretize_args.period_ns,
                               "Sample period in ns");
    std::size_t n_samples_value = 0;
    auto* n_samples_opt = discretize_cmd->add_option(
        "--n-samples", n_samples_value, "Window length in samples");
    double t0_value = 0.0;
    auto* t0_opt = discretize_cmd->add_option("--t0-ns", t0_value,
                                              "Window start time in ns");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*scenarios_cmd) return cmd_scenarios(scenarios_config);
        if (*run_cmd) {
            if (*seed_opt) run_args.seed = seed_value;
            if (*threads_opt) run_args.threads = threads_value;
            return cmd_run(run_args);
        }
        if (*analyze_cmd) return cmd_analyze(analyze_args);
        if (*discretize_cmd) {
            if (*n_samples_opt) discretize_args.n_samples = n_samples_value;
            if (*t0_opt) discretize_args.t0_ns = t0_value;
            return cmd_discretize(discretize_args);
        }
    } catch (const uavchan::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const uavchan::fit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFit;
    }
    return kExitOk;
}
