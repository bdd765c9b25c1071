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

#include "eelm/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace eelm {

static constexpr double kTwoPi = 6.283185307179586476925286766559;

Cir gen_rician_cir(SeededRng &rng, int l, double k_factor, double pdp_decay)
{
    if (l < 1)
        throw std::invalid_argument("gen_rician_cir: l must be >= 1");
    if (k_factor < 0.0 || pdp_decay < 0.0)
        throw std::invalid_argument("gen_rician_cir: k_factor and pdp_decay must be non-negative");

    // Exponential PDP, normalized to unit total mean power
    RVec pdp(l);
    for (int i = 0; i < l; i++)
        pdp[i] = std::exp(-pdp_decay * double(i));
    pdp /= pdp.sum();

    Cir cir;
    cir.taps.resize(l);
    // tap 0: deterministic LOS phasor + CSCG scatter, Rician split by k_factor
    double los = std::sqrt(k_factor / (k_factor + 1.0) * pdp[0]);
    cir.taps[0] = cxd(los, 0.0) + rng.cgaussian(pdp[0] / (k_factor + 1.0));
    for (int i = 1; i < l; i++)
        cir.taps[i] = rng.cgaussian(pdp[i]);
    return cir;
}

ChannelRealization gen_channel(SeededRng &rng, int l, int m, double k_factor, double pdp_decay)
{
    if (m < 1)
        throw std::invalid_argument("gen_channel: m must be >= 1");
    ChannelRealization real;
    real.direct = gen_rician_cir(rng, l, k_factor, pdp_decay);
    real.tx_ris.reserve(m);
    real.ris_rx.reserve(m);
    for (int i = 0; i < m; i++)
        real.tx_ris.push_back(gen_rician_cir(rng, l, k_factor, pdp_decay));
    for (int i = 0; i < m; i++)
        real.ris_rx.push_back(gen_rician_cir(rng, l, k_factor, pdp_decay));
    return real;
}

Cir cascade(const Cir &tx_ris, const Cir &ris_rx)
{
    if (tx_ris.length() != ris_rx.length())
        throw std::invalid_argument("cascade: CIR lengths differ");
    return {tx_ris.taps.cwiseProduct(ris_rx.taps)};
}

Cir composite_cir(const ChannelRealization &real, const CVec &phases)
{
    const int m = real.subsurfaces();
    if (phases.size() != m)
        throw std::invalid_argument("composite_cir: phase vector length must equal M");
    for (Eigen::Index i = 0; i < phases.size(); i++)
        if (std::abs(std::abs(phases[i]) - 1.0) > 1e-9)
            throw std::invalid_argument("composite_cir: phases must be unit modulus");

    Cir h;
    h.taps = real.direct.taps;
    for (int i = 0; i < m; i++)
    {
        if (real.tx_ris[i].length() != h.length() || real.ris_rx[i].length() != h.length())
            throw std::invalid_argument("composite_cir: CIR lengths differ across links");
        h.taps += phases[i] * real.tx_ris[i].taps.cwiseProduct(real.ris_rx[i].taps);
    }
    return h;
}

RisReflectionMatrix build_theta(int m)
{
    if (m < 1)
        throw std::invalid_argument("build_theta: m must be >= 1");
    const int d = m + 1;
    RisReflectionMatrix ris;
    ris.theta.resize(d, d);
    for (int r = 0; r < d; r++)
        for (int c = 0; c < d; c++)
            ris.theta(r, c) = std::polar(1.0, -kTwoPi * double((r * c) % d) / double(d));
    ris.phase_vectors.reserve(d);
    for (int c = 0; c < d; c++)
        ris.phase_vectors.push_back(ris.theta.col(c).tail(m));
    return ris;
}

CVec cir_to_cfr(const Cir &cir, int n)
{
    if (n < 1)
        throw std::invalid_argument("cir_to_cfr: n must be >= 1");
    if (cir.length() > n)
        throw std::invalid_argument("cir_to_cfr: CIR longer than the number of bins");
    CVec padded = CVec::Zero(n);
    padded.head(cir.length()) = cir.taps;
    return dft(padded) * std::sqrt(double(n));
}

CMat true_cfrs(const ChannelRealization &real, int n)
{
    const int m = real.subsurfaces();
    CMat h(n, m + 1);
    h.col(0) = cir_to_cfr(real.direct, n);
    for (int j = 0; j < m; j++)
        h.col(j + 1) = cir_to_cfr(cascade(real.tx_ris[j], real.ris_rx[j]), n);
    return h;
}

} // namespace eelm
