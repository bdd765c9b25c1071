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

#include "eelm/sweep.hpp"
#include "eelm/parallel.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace eelm {

static constexpr const char *kCodeVersion = "1.0.0";

const ElmNetwork *ModelSet::find(Estimator e) const
{
    auto it = models.find(e);
    return it == models.end() ? nullptr : &it->second;
}

ModelSet train_models(const SweepConfig &cfg, const TrainingSet &data)
{
    ModelSet set;
    for (Estimator e : cfg.estimators)
    {
        if (e == Estimator::LsOnly || set.models.count(e))
            continue;
        ElmNetwork net(cfg.n_subcarriers, cfg.n_subsurfaces + 1, cfg.elm_options(e), cfg.seed);
        net.train(data, cfg.threads);
        set.models.emplace(e, std::move(net));
    }
    return set;
}

TrialRecord run_trial(const TrialSetup &setup, const ModelSet &models, double snr_db,
                      int snr_index, uint64_t trial_index)
{
    try
    {
        SeededRng rng =
            SeededRng::derive(setup.cfg.seed, streams::kTrial, uint64_t(snr_index), trial_index);
        SimulatedObservation obs = simulate_observation(setup, snr_db, rng);

        TrialRecord rec;
        rec.nmse.reserve(setup.cfg.estimators.size());
        for (Estimator e : setup.cfg.estimators)
        {
            double v;
            if (e == Estimator::LsOnly)
                v = nmse(obs.separated.stacked(), obs.truth);
            else
            {
                const ElmNetwork *net = models.find(e);
                if (!net)
                    throw std::runtime_error("no trained model for estimator " + to_string(e));
                v = nmse(net->infer(obs.separated), obs.truth);
            }
            rec.nmse.emplace_back(e, v);
        }
        return rec;
    }
    catch (const std::exception &ex)
    {
        throw std::runtime_error("trial " + std::to_string(trial_index) + " at " +
                                 std::to_string(snr_db) + " dB: " + ex.what());
    }
}

const SweepCell *SweepResult::find(double snr_db, Estimator e) const
{
    for (const auto &c : cells)
        if (c.snr_db == snr_db && c.estimator == e)
            return &c;
    return nullptr;
}

SweepResult run_sweep(const SweepConfig &cfg, const ModelSet &models)
{
    auto t0 = std::chrono::steady_clock::now();
    TrialSetup setup = make_trial_setup(cfg);

    const int n_snr = int(cfg.snr_grid_db.size());
    const int n_trials = cfg.n_trials;

    std::vector<std::vector<TrialRecord>> records(n_snr);
    for (auto &r : records)
        r.resize(n_trials);

    parallel_for(int64_t(n_snr) * n_trials, cfg.threads, [&](int64_t i) {
        int s = int(i / n_trials);
        int t = int(i % n_trials);
        records[s][t] = run_trial(setup, models, cfg.snr_grid_db[s], s, uint64_t(t));
    });

    SweepResult result;
    result.cfg = cfg;
    result.achieved_evm = setup.achieved_evm;
    for (int s = 0; s < n_snr && n_trials > 0; s++)
    {
        for (size_t e = 0; e < cfg.estimators.size(); e++)
        {
            SweepCell cell;
            cell.snr_db = cfg.snr_grid_db[s];
            cell.estimator = cfg.estimators[e];
            cell.n_trials = n_trials;
            cell.per_trial.resize(n_trials);
            for (int t = 0; t < n_trials; t++)
                cell.per_trial[t] = records[s][t].nmse[e].second;

            double mean = 0.0;
            for (double v : cell.per_trial)
                mean += v;
            mean /= double(n_trials);
            double var = 0.0;
            for (double v : cell.per_trial)
                var += (v - mean) * (v - mean);
            cell.mean_nmse = mean;
            cell.stderr_nmse =
                n_trials > 1 ? std::sqrt(var / double(n_trials - 1) / double(n_trials)) : 0.0;
            result.cells.push_back(std::move(cell));
        }
    }

    result.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

static std::string fmt_double(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_results_csv(const SweepResult &result, const std::string &path)
{
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open results file for writing: " + path);
    f << "snr_db,estimator,evm,L,L_CP,mean_nmse,stderr,n_trials\n";
    double evm = result.cfg.hpa_enabled ? result.cfg.evm_target : 0.0;
    for (const auto &c : result.cells)
        f << fmt_double(c.snr_db) << ',' << to_string(c.estimator) << ',' << fmt_double(evm) << ','
          << result.cfg.n_paths << ',' << result.cfg.cp_len << ',' << fmt_double(c.mean_nmse)
          << ',' << fmt_double(c.stderr_nmse) << ',' << c.n_trials << '\n';
    if (!f)
        throw std::runtime_error("write failed for results file: " + path);
}

void write_per_trial_csv(const SweepResult &result, const std::string &path)
{
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open per-trial file for writing: " + path);
    f << "snr_db,estimator,trial,nmse\n";
    for (const auto &c : result.cells)
        for (size_t t = 0; t < c.per_trial.size(); t++)
            f << fmt_double(c.snr_db) << ',' << to_string(c.estimator) << ',' << t << ','
              << fmt_double(c.per_trial[t]) << '\n';
    if (!f)
        throw std::runtime_error("write failed for per-trial file: " + path);
}

void write_results_sidecar(const SweepResult &result, const std::string &path)
{
    nlohmann::json j;
    j["format"] = "eelm-results";
    j["version"] = 1;
    j["code_version"] = kCodeVersion;
    j["achieved_evm_percent"] = result.achieved_evm;
    j["wall_time_s"] = result.wall_time_s;

    const SweepConfig &cfg = result.cfg;
    nlohmann::json c;
    c["n"] = cfg.n_subcarriers;
    c["paths"] = cfg.n_paths;
    c["cp"] = cfg.cp_len;
    c["subsurfaces"] = cfg.n_subsurfaces;
    c["snr"] = cfg.snr_grid_db;
    c["evm"] = cfg.evm_target;
    c["hpa"] = cfg.hpa_enabled;
    c["noiseless"] = cfg.noiseless;
    c["trials"] = cfg.n_trials;
    c["train_samples"] = cfg.n_train;
    c["seed"] = cfg.seed;
    std::vector<std::string> est;
    for (Estimator e : cfg.estimators)
        est.push_back(to_string(e));
    c["estimators"] = est;
    c["k_factor"] = cfg.k_factor;
    c["pdp_decay"] = cfg.pdp_decay;
    c["zc_root"] = cfg.zc_root;
    c["hidden"] = cfg.hidden_size;
    c["activation"] = to_string(cfg.activation);
    c["std_scope"] = to_string(cfg.std_scope);
    c["output_scale"] = to_string(cfg.output_scale);
    c["ridge"] = cfg.ridge;
    c["train_snr_min"] = cfg.train_snr_min_db;
    c["train_snr_max"] = cfg.train_snr_max_db;
    j["config"] = c;

    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open sidecar file for writing: " + path);
    f << j.dump(2) << "\n";
    if (!f)
        throw std::runtime_error("write failed for sidecar file: " + path);
}

std::string model_filename(Estimator e)
{
    return "model_" + to_string(e) + ".bin";
}

} // namespace eelm
