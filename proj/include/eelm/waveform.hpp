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

#ifndef EELM_WAVEFORM_HPP
#define EELM_WAVEFORM_HPP

#include "eelm/numerics.hpp"

namespace eelm {

/// Frequency-domain pilot sequence, constant modulus by construction.
struct PilotTone
{
    CVec symbols; // length n, |symbols[k]| = 1
    int root;     // Zadoff-Chu root, coprime to n
};

/// One OFDM block: N frequency symbols and their cyclic-prefixed time signal.
/// The first cp_len time samples are a bit-for-bit copy of the last cp_len.
struct OfdmBlock
{
    CVec freq_symbols;  // length n
    CVec time_samples;  // length n + cp_len
    int cp_len;

    Eigen::Index n() const { return freq_symbols.size(); }
};

/// A transmission slot: pilot block first, data block second.
struct SlotFrame
{
    OfdmBlock pilot;
    OfdmBlock data;
    int slot_index; // 1 .. M+1
};

// Zadoff-Chu sequence of length n with the given root, gcd(root, n) = 1.
// Even n: c_k = exp(-j pi root k^2 / n); odd n uses the k(k+1) form.
PilotTone zadoff_chu(int n, int root);

// IFFT (F_n^H) plus cyclic prefix. 0 <= cp_len < n.
OfdmBlock ofdm_modulate(const CVec &freq_symbols, int cp_len);

// Drops the first cp_len samples and applies F_n to the next n. rx_samples
// may be longer than cp_len + n; the excess is ignored.
CVec remove_cp_and_demodulate(const Eigen::Ref<const CVec> &rx_samples, int n, int cp_len);

// n unit-power Gray-mapped QPSK symbols, (+-1 +- j)/sqrt(2).
CVec random_qpsk(SeededRng &rng, Eigen::Index n);

} // namespace eelm

#endif
