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

#include "eelm/impairments.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace eelm {

LinkNoise make_link_noise(double snr_db, double mean_rx_power)
{
    if (mean_rx_power < 0.0)
        throw std::invalid_argument("make_link_noise: negative signal power");
    return {snr_db, mean_rx_power / std::pow(10.0, snr_db / 10.0)};
}

CVec hpa_distort(const CVec &samples, const HpaModel &model)
{
    if (!samples.allFinite())
        throw std::invalid_argument("hpa_distort: input has NaN or Inf entries");
    if (model.drive_scale <= 0.0)
        throw std::invalid_argument("hpa_distort: drive_scale must be positive");

    CVec out(samples.size());
    for (Eigen::Index i = 0; i < samples.size(); i++)
    {
        double mag = std::abs(samples[i]);
        if (mag == 0.0)
        {
            out[i] = 0.0;
            continue;
        }
        double r = model.drive_scale * mag;
        out[i] = std::polar(model.am_am(r), std::arg(samples[i]) + model.am_pm(r));
    }
    return out;
}

CVec hpa_linear_reference(const CVec &samples, const HpaModel &model)
{
    return samples * (model.alpha_a * model.drive_scale);
}

double evm_percent(const CVec &distorted, const CVec &linear_ref)
{
    if (distorted.size() != linear_ref.size())
        throw std::invalid_argument("evm_percent: length mismatch");
    double ref_energy = linear_ref.squaredNorm();
    if (ref_energy <= 0.0)
        throw std::invalid_argument("evm_percent: reference signal has zero energy");
    return 100.0 * std::sqrt((distorted - linear_ref).squaredNorm() / ref_energy);
}

double evm_on_probe(const CVec &probe, const HpaModel &model)
{
    return evm_percent(hpa_distort(probe, model), hpa_linear_reference(probe, model));
}

double calibrate_drive(const HpaModel &model, double target_evm_percent, const CVec &probe)
{
    if (target_evm_percent <= 0.0 || target_evm_percent >= 100.0)
        throw std::invalid_argument("calibrate_drive: target EVM must lie in (0, 100)");
    if (probe.size() == 0)
        throw std::invalid_argument("calibrate_drive: empty probe");

    double lo = 1e-3, hi = 1e3;
    HpaModel m = model;

    m.drive_scale = lo;
    double evm_lo = evm_on_probe(probe, m);
    m.drive_scale = hi;
    double evm_hi = evm_on_probe(probe, m);

    if (target_evm_percent < evm_lo || target_evm_percent > evm_hi)
    {
        std::ostringstream msg;
        msg << "calibrate_drive: target " << target_evm_percent << "% outside achievable range ["
            << evm_lo << "%, " << evm_hi << "%] on this probe";
        throw std::runtime_error(msg.str());
    }

    // EVM(g) is monotone non-decreasing, so plain bisection converges
    for (int it = 0; it < 200; it++)
    {
        double g = 0.5 * (lo + hi);
        m.drive_scale = g;
        double e = evm_on_probe(probe, m);
        if (std::abs(e - target_evm_percent) < 1e-3)
            return g;
        if (e < target_evm_percent)
            lo = g;
        else
            hi = g;
    }
    return 0.5 * (lo + hi);
}

CVec transmit_through_channel(const CVec &stream, const Cir &h, const LinkNoise &noise,
                              SeededRng &rng)
{
    const Eigen::Index n = stream.size();
    const Eigen::Index l = h.length();
    if (l < 1)
        throw std::invalid_argument("transmit_through_channel: empty CIR");
    if (noise.variance < 0.0)
        throw std::invalid_argument("transmit_through_channel: negative noise variance");

    CVec out = CVec::Zero(n + l - 1);
    for (Eigen::Index t = 0; t < n; t++)
        for (Eigen::Index k = 0; k < l; k++)
            out[t + k] += h.taps[k] * stream[t];

    if (noise.variance > 0.0)
        out += complex_gaussian(rng, out.size(), noise.variance);
    return out;
}

CVec transmit_slotwise(const CVec &stream, const std::vector<Cir> &slot_cirs, int slot_len)
{
    if (slot_cirs.empty())
        throw std::invalid_argument("transmit_slotwise: no slot CIRs");
    if (slot_len < 1)
        throw std::invalid_argument("transmit_slotwise: slot_len must be >= 1");
    const Eigen::Index l = slot_cirs[0].length();
    for (const Cir &c : slot_cirs)
        if (c.length() != l)
            throw std::invalid_argument("transmit_slotwise: CIR lengths differ across slots");
    if (stream.size() > Eigen::Index(slot_cirs.size()) * slot_len)
        throw std::invalid_argument("transmit_slotwise: stream longer than the slot plan");

    const Eigen::Index n = stream.size();
    CVec out = CVec::Zero(n + l - 1);
    for (Eigen::Index t = 0; t < out.size(); t++)
    {
        const Cir &h = slot_cirs[std::min(size_t(t / slot_len), slot_cirs.size() - 1)];
        cxd acc = 0.0;
        Eigen::Index kmax = std::min(l - 1, t);
        for (Eigen::Index k = t - std::min(t, n - 1); k <= kmax; k++)
            acc += h.taps[k] * stream[t - k];
        out[t] = acc;
    }
    return out;
}

} // namespace eelm
