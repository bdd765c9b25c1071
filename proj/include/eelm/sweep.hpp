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

#ifndef EELM_SWEEP_HPP
#define EELM_SWEEP_HPP

#include "eelm/pipeline.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eelm {

/// Trained refiner networks keyed by estimator; LsOnly needs none.
struct ModelSet
{
    std::map<Estimator, ElmNetwork> models;

    const ElmNetwork *find(Estimator e) const;
};

// Trains one network per requested refining estimator from the training set
// (shared W and b via the common seed; the ablation differs only in options).
ModelSet train_models(const SweepConfig &cfg, const TrainingSet &data);

/// Per-estimator NMSE of a single trial.
struct TrialRecord
{
    std::vector<std::pair<Estimator, double>> nmse;
};

// One Monte-Carlo trial at a given SNR. The trial rng is
// derive(seed, kTrial, snr_index, trial_index), so cells never share streams.
TrialRecord run_trial(const TrialSetup &setup, const ModelSet &models, double snr_db,
                      int snr_index, uint64_t trial_index);

/// Aggregated cell of a sweep.
struct SweepCell
{
    double snr_db;
    Estimator estimator;
    double mean_nmse;
    double stderr_nmse; // standard error of the mean
    int n_trials;
    std::vector<double> per_trial; // trial-ordered NMSE values
};

struct SweepResult
{
    SweepConfig cfg;
    double achieved_evm = 0.0;
    double wall_time_s = 0.0;
    std::vector<SweepCell> cells; // ordered (snr grid order, estimator order)

    const SweepCell *find(double snr_db, Estimator e) const;
};

// Full sweep over cfg.snr_grid_db x cfg.estimators, n_trials per cell,
// distributed over a worker pool. Cell aggregation order is deterministic.
SweepResult run_sweep(const SweepConfig &cfg, const ModelSet &models);

// results CSV: snr_db,estimator,evm,L,L_CP,mean_nmse,stderr,n_trials
void write_results_csv(const SweepResult &result, const std::string &path);

// JSON sidecar: config echo, code version, achieved EVM, wall time.
void write_results_sidecar(const SweepResult &result, const std::string &path);

// Optional per-trial dump: snr_db,estimator,trial,nmse
void write_per_trial_csv(const SweepResult &result, const std::string &path);

// Canonical model filename for an estimator inside an output directory.
std::string model_filename(Estimator e);

} // namespace eelm

#endif
