// SPDX-License-Identifier: Apache-2.0
//
// eelm: link-level simulator and ELM-based channel estimator for RIS-assisted OFDM
// Copyright (C) 2026 the eelm authors
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

#include "eelm/cli.hpp"
#include "eelm/sweep.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace eelm {

namespace fs = std::filesystem;

namespace {

struct CliOptions
{
    std::string config_path;
    std::string out_dir = ".";
    std::string model_dir;   // defaults to out_dir
    std::string dataset_path;
    std::string report_in;
    bool dump_trials = false;

    std::optional<uint64_t> seed;
    std::optional<std::string> estimators;
    std::optional<std::string> snr;
    std::optional<double> evm;
    std::optional<int> paths, cp, trials, train_samples, hidden, threads;
};

SweepConfig build_config(const CliOptions &o)
{
    SweepConfig cfg;
    if (!o.config_path.empty())
        cfg = parse_config_file(o.config_path);
    if (o.seed)
        cfg.seed = *o.seed;
    if (o.estimators)
        cfg.estimators = parse_estimator_list(*o.estimators);
    if (o.snr)
        cfg.snr_grid_db = parse_double_list(*o.snr);
    if (o.evm)
        cfg.evm_target = *o.evm;
    if (o.paths)
        cfg.n_paths = *o.paths;
    if (o.cp)
        cfg.cp_len = *o.cp;
    if (o.trials)
        cfg.n_trials = *o.trials;
    if (o.train_samples)
        cfg.n_train = *o.train_samples;
    if (o.hidden)
        cfg.hidden_size = *o.hidden;
    if (o.threads)
        cfg.threads = *o.threads;
    cfg.validate();
    return cfg;
}

bool is_refining(Estimator e) { return e != Estimator::LsOnly; }

TrainingSet obtain_training_set(const SweepConfig &cfg, const CliOptions &o)
{
    if (!o.dataset_path.empty() && fs::exists(o.dataset_path))
    {
        std::fprintf(stderr, "eelm: loading training set from %s\n", o.dataset_path.c_str());
        TrainingSet data = TrainingSet::load(o.dataset_path);
        if (data.n_links() != cfg.n_subsurfaces + 1 ||
            (data.n_samples() > 0 && data.samples[0].rows() != cfg.n_subcarriers))
            throw std::invalid_argument("dataset dimensions do not match the configuration");
        return data;
    }
    std::fprintf(stderr, "eelm: generating %d training samples\n", cfg.n_train);
    TrainingSet data = generate_training_set(cfg);
    if (!o.dataset_path.empty())
    {
        data.save(o.dataset_path);
        std::fprintf(stderr, "eelm: wrote dataset to %s\n", o.dataset_path.c_str());
    }
    return data;
}

int cmd_train(const CliOptions &o)
{
    SweepConfig cfg = build_config(o);
    bool any = false;
    for (Estimator e : cfg.estimators)
        any |= is_refining(e);
    if (!any)
    {
        std::fprintf(stderr, "eelm: no refining estimator selected, nothing to train\n");
        return 0;
    }

    fs::create_directories(o.out_dir);
    TrainingSet data = obtain_training_set(cfg, o);
    ModelSet models = train_models(cfg, data);
    for (const auto &[e, net] : models.models)
    {
        std::string path = (fs::path(o.out_dir) / model_filename(e)).string();
        net.save(path);
        std::printf("trained %s (hidden=%d, samples=%lld) -> %s\n", to_string(e).c_str(),
                    cfg.hidden_size, (long long)data.n_samples(), path.c_str());
    }
    return 0;
}

ModelSet load_or_train_models(const SweepConfig &cfg, const CliOptions &o)
{
    ModelSet set;
    std::string dir = o.model_dir.empty() ? o.out_dir : o.model_dir;
    std::optional<TrainingSet> data;

    for (Estimator e : cfg.estimators)
    {
        if (!is_refining(e) || set.models.count(e))
            continue;
        std::string path = (fs::path(dir) / model_filename(e)).string();
        if (fs::exists(path))
        {
            ElmNetwork net = ElmNetwork::load(path);
            if (net.n_subcarriers() != cfg.n_subcarriers ||
                net.n_links() != cfg.n_subsurfaces + 1)
                throw std::invalid_argument("model " + path +
                                            " does not match the configuration dimensions");
            std::fprintf(stderr, "eelm: loaded %s\n", path.c_str());
            set.models.emplace(e, std::move(net));
            continue;
        }
        std::fprintf(stderr, "eelm: no model for %s, training now\n", to_string(e).c_str());
        if (!data)
            data = obtain_training_set(cfg, o);
        ElmNetwork net(cfg.n_subcarriers, cfg.n_subsurfaces + 1, cfg.elm_options(e), cfg.seed);
        net.train(*data, cfg.threads);
        fs::create_directories(o.out_dir);
        std::string out_path = (fs::path(o.out_dir) / model_filename(e)).string();
        net.save(out_path);
        std::fprintf(stderr, "eelm: wrote %s\n", out_path.c_str());
        set.models.emplace(e, std::move(net));
    }
    return set;
}

void print_summary(const SweepResult &result)
{
    std::printf("%8s  %-11s  %6s  %13s  %9s  %12s  %7s\n", "snr_db", "estimator", "evm", "mean_nmse",
                "nmse_db", "stderr", "trials");
    double evm = result.cfg.hpa_enabled ? result.cfg.evm_target : 0.0;
    for (const auto &c : result.cells)
        std::printf("%8.6g  %-11s  %6.4g  %13.6e  %9.3f  %12.3e  %7d\n", c.snr_db,
                    to_string(c.estimator).c_str(), evm, c.mean_nmse,
                    10.0 * std::log10(c.mean_nmse), c.stderr_nmse, c.n_trials);
}

int cmd_sweep(const CliOptions &o)
{
    SweepConfig cfg = build_config(o);
    ModelSet models = load_or_train_models(cfg, o);

    SweepResult result = run_sweep(cfg, models);

    fs::create_directories(o.out_dir);
    std::string csv = (fs::path(o.out_dir) / "results.csv").string();
    std::string json = (fs::path(o.out_dir) / "results.json").string();
    write_results_csv(result, csv);
    write_results_sidecar(result, json);
    if (o.dump_trials)
        write_per_trial_csv(result, (fs::path(o.out_dir) / "per_trial.csv").string());

    print_summary(result);
    std::fprintf(stderr, "eelm: wrote %s (%.1f s)\n", csv.c_str(), result.wall_time_s);
    return 0;
}

int cmd_calibrate(const CliOptions &o)
{
    SweepConfig cfg = build_config(o);
    if (!cfg.hpa_enabled)
        throw std::invalid_argument("calibrate: the HPA is disabled in this configuration");
    TrialSetup setup = make_trial_setup(cfg);
    std::printf("target_evm = %.6g %%\n", cfg.evm_target);
    std::printf("drive_scale = %.12g\n", setup.hpa.drive_scale);
    std::printf("achieved_evm = %.6g %%\n", setup.achieved_evm);
    return 0;
}

int cmd_report(const CliOptions &o)
{
    std::ifstream f(o.report_in);
    if (!f)
        throw std::runtime_error("cannot open results file: " + o.report_in);

    std::string line;
    if (!std::getline(f, line))
        throw std::runtime_error("empty results file: " + o.report_in);
    if (line.rfind("snr_db,estimator,", 0) != 0)
        throw std::invalid_argument("not a results CSV: " + o.report_in);

    std::printf("%8s  %-11s  %6s  %4s  %5s  %13s  %9s  %12s  %7s\n", "snr_db", "estimator", "evm",
                "L", "L_CP", "mean_nmse", "nmse_db", "stderr", "trials");
    int lineno = 1;
    while (std::getline(f, line))
    {
        lineno++;
        if (line.empty())
            continue;
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ','))
            fields.push_back(field);
        if (fields.size() != 8)
            throw std::invalid_argument(o.report_in + ":" + std::to_string(lineno) +
                                        ": malformed row");
        double snr = std::stod(fields[0]);
        double evm = std::stod(fields[2]);
        double mean = std::stod(fields[5]);
        double se = std::stod(fields[6]);
        std::printf("%8.6g  %-11s  %6.4g  %4s  %5s  %13.6e  %9.3f  %12.3e  %7s\n", snr,
                    fields[1].c_str(), evm, fields[3].c_str(), fields[4].c_str(), mean,
                    10.0 * std::log10(mean), se, fields[7].c_str());
    }
    return 0;
}

} // namespace

int cli_main(int argc, const char *const *argv)
{
    CliOptions o;
    CLI::App app{"RIS-assisted OFDM link simulator and ELM channel estimator"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App *cmd) {
        cmd->add_option("--config", o.config_path, "key = value configuration file");
        cmd->add_option("--seed", o.seed, "master seed (overrides config)");
        cmd->add_option("--out", o.out_dir, "output directory");
        cmd->add_option("--estimators", o.estimators, "comma list: ls_only,eelm,elm_no_std");
        cmd->add_option("--snr", o.snr, "comma list of SNR points in dB");
        cmd->add_option("--evm", o.evm, "target EVM in percent");
        cmd->add_option("--paths", o.paths, "channel length L");
        cmd->add_option("--cp", o.cp, "cyclic prefix length L_CP");
        cmd->add_option("--trials", o.trials, "Monte Carlo trials per SNR point");
        cmd->add_option("--train-samples", o.train_samples, "training set size N_d");
        cmd->add_option("--hidden", o.hidden, "hidden layer width");
        cmd->add_option("--threads", o.threads, "worker threads (0 = auto)");
    };

    CLI::App *train = app.add_subcommand("train", "offline training of the refiner networks");
    add_common(train);
    train->add_option("--dataset", o.dataset_path, "persist/reuse the training set at this path");

    CLI::App *sweep = app.add_subcommand("sweep", "NMSE-vs-SNR Monte Carlo sweep");
    add_common(sweep);
    sweep->add_option("--model", o.model_dir, "directory to load trained models from");
    sweep->add_option("--dataset", o.dataset_path, "persist/reuse the training set at this path");
    sweep->add_flag("--dump-trials", o.dump_trials, "also write per-trial NMSE records");

    CLI::App *calibrate = app.add_subcommand("calibrate", "EVM drive-level search");
    add_common(calibrate);

    CLI::App *report = app.add_subcommand("report", "summarize a results CSV");
    report->add_option("--in", o.report_in, "results.csv to summarize")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp &e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError &e)
    {
        app.exit(e);
        return 2;
    }

    try
    {
        if (train->parsed())
            return cmd_train(o);
        if (sweep->parsed())
            return cmd_sweep(o);
        if (calibrate->parsed())
            return cmd_calibrate(o);
        if (report->parsed())
            return cmd_report(o);
    }
    catch (const std::invalid_argument &e)
    {
        std::fprintf(stderr, "eelm: %s\n", e.what());
        return 2;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "eelm: %s\n", e.what());
        return 1;
    }
    return 0;
}

} // namespace eelm
