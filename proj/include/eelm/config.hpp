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

#ifndef EELM_CONFIG_HPP
#define EELM_CONFIG_HPP

#include "eelm/estimator.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eelm {

enum class Estimator
{
    LsOnly,   // pilot division + link separation, no refinement
    Eelm,     // ELM refiner with pre-activation standardization
    ElmNoStd  // ablation: same refiner without the standardization step
};

std::string to_string(Estimator e);
Estimator estimator_from_string(const std::string &s);

/// Every experiment knob. Defaults reproduce the baseline operating point
/// (N = 64, L = 12, L_CP = 8, M = 8, EVM = 55 %).
struct SweepConfig
{
    int n_subcarriers = 64; // N
    int n_paths = 12;       // L
    int cp_len = 8;         // L_CP (deliberately < L in the default regime)
    int n_subsurfaces = 8;  // M

    std::vector<double> snr_grid_db = {0, 5, 10, 15, 20, 25, 30};
    double evm_target = 55.0; // percent
    bool hpa_enabled = true;
    bool noiseless = false; // forces noise variance 0 (oracle runs)

    int n_trials = 1000;
    int n_train = 10000; // N_d
    uint64_t seed = 1;
    std::vector<Estimator> estimators = {Estimator::LsOnly, Estimator::Eelm};

    double k_factor = 2.0;  // Rician K (linear) on tap 0
    double pdp_decay = 0.2; // exponential power-delay decay per tap
    int zc_root = 1;

    int hidden_size = 256; // N_h
    Activation activation = Activation::Tanh;
    StdScope std_scope = StdScope::Scalar;
    OutputScale output_scale = OutputScale::InputNorm;
    double ridge = 0.0;
    double train_snr_min_db = 0.0;
    double train_snr_max_db = 30.0;

    int threads = 0; // 0 = auto (EELM_THREADS env var, then hardware)

    void validate() const; // throws std::invalid_argument on bad combinations

    ElmOptions elm_options(Estimator which) const;
};

// Flat `key = value` config file, '#' comments, lists comma-separated.
// Unknown keys are an error. Missing file throws with the path in the message.
SweepConfig parse_config_file(const std::string &path);

// Applies one `key=value` assignment (same keys as the file) to cfg.
void apply_config_entry(SweepConfig &cfg, const std::string &key, const std::string &value);

// The config rendered back in file syntax, one key per line, fixed order.
std::string config_to_string(const SweepConfig &cfg);

std::vector<double> parse_double_list(const std::string &s);
std::vector<Estimator> parse_estimator_list(const std::string &s);

} // namespace eelm

#endif
