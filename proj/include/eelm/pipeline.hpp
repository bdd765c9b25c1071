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

#ifndef EELM_PIPELINE_HPP
#define EELM_PIPELINE_HPP

#include "eelm/config.hpp"
#include "eelm/impairments.hpp"
#include "eelm/waveform.hpp"

namespace eelm {

// RNG stream tags; trials, training samples and the calibration probe must
// never share a stream.
namespace streams
{
constexpr uint64_t kTrial = 0x545249414C000001ull;
constexpr uint64_t kTrain = 0x545241494E000002ull;
constexpr uint64_t kProbe = 0x50524F4245000003ull;
} // namespace streams

/// Everything that is fixed across the Monte-Carlo trials of one experiment:
/// pilot, reflection matrix, calibrated amplifier.
struct TrialSetup
{
    SweepConfig cfg;
    PilotTone pilot;
    OfdmBlock pilot_block;
    RisReflectionMatrix ris;
    HpaModel hpa;           // drive_scale calibrated to cfg.evm_target when enabled
    double achieved_evm = 0.0;
};

// Builds the setup: ZC pilot, DFT reflection matrix, and (when the HPA is
// enabled) the drive level calibrated on a 10-block seeded OFDM probe.
TrialSetup make_trial_setup(const SweepConfig &cfg);

// The deterministic 10-block QPSK-OFDM probe used for EVM calibration.
CVec calibration_probe(const SweepConfig &cfg);

/// Noisy separated estimate plus ground truth for one coherence interval.
struct SimulatedObservation
{
    SeparatedCfrs separated; // LS + theta-inversion output
    CMat truth;              // true per-link CFRs, N x (M+1)
};

// One full link simulation: channel draw, M+1 slots of pilot + QPSK data,
// amplifier distortion, slot-switched convolution, receiver-referenced AWGN,
// CP removal, LS estimation and link separation. Consumes the caller's rng.
SimulatedObservation simulate_observation(const TrialSetup &setup, double snr_db, SeededRng &rng);

// N_d independent pipeline runs at training SNRs drawn uniformly from
// [train_snr_min_db, train_snr_max_db]. Sample t uses the rng stream
// derive(seed, kTrain, t), so regeneration is byte-identical.
TrainingSet generate_training_set(const SweepConfig &cfg);

} // namespace eelm

#endif
