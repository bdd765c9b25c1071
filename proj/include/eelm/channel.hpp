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

#ifndef EELM_CHANNEL_HPP
#define EELM_CHANNEL_HPP

#include "eelm/numerics.hpp"

#include <vector>

namespace eelm {

/// Channel impulse response, tap-delay-line form.
struct Cir
{
    CVec taps; // length L >= 1

    Eigen::Index length() const { return taps.size(); }
};

/// All per-link CIRs for one coherence interval (held constant over the M+1
/// pilot slots of an estimation round). Every CIR shares the same length L.
struct ChannelRealization
{
    Cir direct;               // transmitter-receiver
    std::vector<Cir> tx_ris;  // transmitter-RIS, one per sub-surface
    std::vector<Cir> ris_rx;  // RIS-receiver, one per sub-surface

    int subsurfaces() const { return int(tx_ris.size()); }
};

/// Per-slot pilot-phase configuration. theta is (M+1) x (M+1) with an all-ones
/// first row and unit-modulus entries; column i holds [1; phi^(i)] where
/// phi^(i) are the RIS phases during slot i. Full rank by construction.
struct RisReflectionMatrix
{
    CMat theta;
    std::vector<CVec> phase_vectors; // M+1 vectors of length M, columns of theta rows 1..M

    int subsurfaces() const { return int(theta.rows()) - 1; }
};

// One frequency-selective Rician CIR of length l. Tap 0 carries a
// deterministic unit-phase LOS component weighted by k_factor; all taps carry
// CSCG scatter with an exponential power-delay profile exp(-pdp_decay * i),
// normalized so the mean total power is 1.
Cir gen_rician_cir(SeededRng &rng, int l, double k_factor, double pdp_decay);

// Draws direct + M transmitter-RIS + M RIS-receiver CIRs, all i.i.d. with
// common length l. Draw order is fixed (direct, tx_ris[0..M), ris_rx[0..M)).
ChannelRealization gen_channel(SeededRng &rng, int l, int m, double k_factor, double pdp_decay);

// Hadamard (elementwise) product of the two tap vectors; the cascaded
// per-sub-surface reflecting-link CIR.
Cir cascade(const Cir &tx_ris, const Cir &ris_rx);

// Composite CIR under the given phase configuration:
//   h = h_direct + sum_m phases[m] * (tx_ris[m] (.) ris_rx[m])
// Every phase must be unit modulus (within 1e-9).
Cir composite_cir(const ChannelRealization &real, const CVec &phases);

// DFT-column reflection matrix for M sub-surfaces:
// theta(r, c) = exp(-j 2 pi r c / (M+1)), the unnormalized (M+1)-point DFT
// matrix, giving condition number 1 after 1/sqrt(M+1) scaling.
RisReflectionMatrix build_theta(int m);

// Subcarrier frequency response of a CIR over n bins:
// cfr[k] = sum_l taps[l] * exp(-j 2 pi k l / n). This is the quantity the
// per-subcarrier LS estimator recovers under sufficient CP.
CVec cir_to_cfr(const Cir &cir, int n);

// N x (M+1) matrix [direct | cascaded_1 .. cascaded_M] of true per-link CFRs;
// the ground-truth labels for the estimation chain.
CMat true_cfrs(const ChannelRealization &real, int n);

} // namespace eelm

#endif
