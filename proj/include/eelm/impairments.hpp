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

#ifndef EELM_IMPAIRMENTS_HPP
#define EELM_IMPAIRMENTS_HPP

#include "eelm/channel.hpp"
#include "eelm/numerics.hpp"

#include <vector>

namespace eelm {

/// Saleh-style amplifier model. The AM/AM and AM/PM curves act on the scaled
/// envelope r = drive_scale * |x|; drive_scale is the input back-off control
/// used to dial in a target EVM.
struct HpaModel
{
    double alpha_a = 1.96;
    double beta_a = 0.99;
    double alpha_phi = 2.53;
    double beta_phi = 2.82;
    double drive_scale = 1.0; // g > 0

    double am_am(double r) const { return alpha_a * r / (1.0 + beta_a * r * r); }
    double am_pm(double r) const { return alpha_phi * r * r / (1.0 + beta_phi * r * r); }
};

/// Receiver noise operating point: variance = mean rx power / 10^(snr_db/10).
struct LinkNoise
{
    double snr_db;
    double variance;
};

LinkNoise make_link_noise(double snr_db, double mean_rx_power);

// Per-sample envelope nonlinearity: x -> A(g|x|) * exp(j(arg(x) + Phi(g|x|))).
CVec hpa_distort(const CVec &samples, const HpaModel &model);

// Output of the same amplifier operating in its linear region: alpha_a * g * x
// (small-signal gain, zero phase distortion). The EVM reference.
CVec hpa_linear_reference(const CVec &samples, const HpaModel &model);

// Error vector magnitude in percent:
// 100 * sqrt( sum |d_n - r_n|^2 / sum |r_n|^2 ).
double evm_percent(const CVec &distorted, const CVec &linear_ref);

// EVM of the model evaluated on a probe signal at its current drive_scale.
double evm_on_probe(const CVec &probe, const HpaModel &model);

// Finds drive_scale g in [1e-3, 1e3] such that the EVM on the probe hits
// target_evm_percent, by bisection (EVM is monotone non-decreasing in g).
// Throws if the target lies outside the achievable range on this probe.
double calibrate_drive(const HpaModel &model, double target_evm_percent, const CVec &probe);

// Linear convolution of the stream with the CIR plus CSCG noise of the given
// variance. Output length = stream length + L - 1. When the stream is a
// concatenation of consecutive blocks, each block's tail smears into the next
// (the insufficient-CP mechanism).
CVec transmit_through_channel(const CVec &stream, const Cir &h, const LinkNoise &noise,
                              SeededRng &rng);

// Noiseless time-varying variant for slot-switched RIS phases: output sample t
// is convolved with slot_cirs[t / slot_len] (clamped to the last slot for the
// trailing L-1 samples). The tap set in force at the receive instant applies,
// so ISI crossing a slot boundary is reflected under the new phase pattern.
CVec transmit_slotwise(const CVec &stream, const std::vector<Cir> &slot_cirs, int slot_len);

} // namespace eelm

#endif
