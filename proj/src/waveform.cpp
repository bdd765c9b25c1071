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

#include "eelm/waveform.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace eelm {

static constexpr double kPi = 3.1415926535897932384626433832795;

PilotTone zadoff_chu(int n, int root)
{
    if (n < 2)
        throw std::invalid_argument("zadoff_chu: n must be >= 2");
    if (root < 1 || root >= n)
        throw std::invalid_argument("zadoff_chu: root must lie in [1, n)");
    if (std::gcd(root, n) != 1)
        throw std::invalid_argument("zadoff_chu: root must be coprime to n");

    PilotTone p;
    p.root = root;
    p.symbols.resize(n);
    for (int k = 0; k < n; k++)
    {
        // keep the quadratic exponent reduced mod 2n so the phase stays small
        long long q = (n % 2 == 0) ? (long long)k * k : (long long)k * (k + 1);
        long long e = ((long long)root * (q % (2LL * n))) % (2LL * n);
        p.symbols[k] = std::polar(1.0, -kPi * double(e) / double(n));
    }
    return p;
}

OfdmBlock ofdm_modulate(const CVec &freq_symbols, int cp_len)
{
    const Eigen::Index n = freq_symbols.size();
    if (n < 1)
        throw std::invalid_argument("ofdm_modulate: empty symbol vector");
    if (cp_len < 0 || cp_len >= n)
        throw std::invalid_argument("ofdm_modulate: cp_len must satisfy 0 <= cp_len < n");

    CVec body = idft(freq_symbols);

    OfdmBlock b;
    b.freq_symbols = freq_symbols;
    b.cp_len = cp_len;
    b.time_samples.resize(n + cp_len);
    b.time_samples.head(cp_len) = body.tail(cp_len); // CP is a copy, not recomputed
    b.time_samples.tail(n) = body;
    return b;
}

CVec remove_cp_and_demodulate(const Eigen::Ref<const CVec> &rx_samples, int n, int cp_len)
{
    if (n < 1 || cp_len < 0)
        throw std::invalid_argument("remove_cp_and_demodulate: bad dimensions");
    if (rx_samples.size() < Eigen::Index(cp_len) + n)
        throw std::invalid_argument("remove_cp_and_demodulate: input shorter than cp_len + n");
    return dft(rx_samples.segment(cp_len, n));
}

CVec random_qpsk(SeededRng &rng, Eigen::Index n)
{
    const double a = 1.0 / std::sqrt(2.0);
    CVec v(n);
    for (Eigen::Index i = 0; i < n; i++)
    {
        double re = rng.uniform01() < 0.5 ? a : -a;
        double im = rng.uniform01() < 0.5 ? a : -a;
        v[i] = cxd(re, im);
    }
    return v;
}

} // namespace eelm
