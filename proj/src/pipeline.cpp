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

#include "eelm/pipeline.hpp"
#include "eelm/parallel.hpp"

#include <stdexcept>

namespace eelm {

CVec calibration_probe(const SweepConfig &cfg)
{
    const int kProbeBlocks = 10;
    SeededRng rng = SeededRng::derive(cfg.seed, streams::kProbe);
    const Eigen::Index block_len = cfg.n_subcarriers + cfg.cp_len;
    CVec probe(kProbeBlocks * block_len);
    for (int b = 0; b < kProbeBlocks; b++)
    {
        OfdmBlock blk = ofdm_modulate(random_qpsk(rng, cfg.n_subcarriers), cfg.cp_len);
        probe.segment(b * block_len, block_len) = blk.time_samples;
    }
    return probe;
}

TrialSetup make_trial_setup(const SweepConfig &cfg)
{
    cfg.validate();
    TrialSetup s;
    s.cfg = cfg;
    s.pilot = zadoff_chu(cfg.n_subcarriers, cfg.zc_root);
    s.pilot_block = ofdm_modulate(s.pilot.symbols, cfg.cp_len);
    s.ris = build_theta(cfg.n_subsurfaces);
    if (cfg.hpa_enabled)
    {
        CVec probe = calibration_probe(cfg);
        s.hpa.drive_scale = calibrate_drive(s.hpa, cfg.evm_target, probe);
        s.achieved_evm = evm_on_probe(probe, s.hpa);
    }
    return s;
}

SimulatedObservation simulate_observation(const TrialSetup &setup, double snr_db, SeededRng &rng)
{
    const SweepConfig &cfg = setup.cfg;
    const int n = cfg.n_subcarriers;
    const int cp = cfg.cp_len;
    const int m = cfg.n_subsurfaces;
    const int n_slots = m + 1;
    const Eigen::Index block_len = n + cp;
    const Eigen::Index slot_len = 2 * block_len;

    // block-fading channel, held over all M+1 slots
    ChannelRealization real = gen_channel(rng, cfg.n_paths, m, cfg.k_factor, cfg.pdp_decay);

    // slots transmitted back to back: pilot block first, then a QPSK data
    // block whose tail is the ISI source for the next slot's pilot
    CVec stream(n_slots * slot_len);
    for (int i = 0; i < n_slots; i++)
    {
        stream.segment(i * slot_len, block_len) = setup.pilot_block.time_samples;
        OfdmBlock data = ofdm_modulate(random_qpsk(rng, n), cp);
        stream.segment(i * slot_len + block_len, block_len) = data.time_samples;
    }

    CVec tx;
    if (cfg.hpa_enabled)
        // rescale by 1/g after the amplifier so the average transmit power is
        // comparable across EVM settings
        tx = hpa_distort(stream, setup.hpa) / setup.hpa.drive_scale;
    else
        tx = stream;

    // per-slot composite CIRs under the slot's reflection phases
    std::vector<Cir> slot_cirs;
    slot_cirs.reserve(n_slots);
    for (int i = 0; i < n_slots; i++)
        slot_cirs.push_back(composite_cir(real, setup.ris.phase_vectors[i]));

    CVec rx = transmit_slotwise(tx, slot_cirs, int(slot_len));
    if (!cfg.noiseless)
    {
        double mean_power = rx.squaredNorm() / double(rx.size());
        LinkNoise noise = make_link_noise(snr_db, mean_power);
        rx += complex_gaussian(rng, rx.size(), noise.variance);
    }

    // receiver: CP removal + DFT on each slot's pilot block
    CMat rx_pilots(n, n_slots);
    for (int i = 0; i < n_slots; i++)
        rx_pilots.col(i) =
            remove_cp_and_demodulate(rx.segment(i * slot_len, block_len), n, cp);

    SimulatedObservation obs;
    obs.separated = separate_links(ls_estimate(rx_pilots, setup.pilot.symbols), setup.ris);
    obs.truth = true_cfrs(real, n);
    return obs;
}

TrainingSet generate_training_set(const SweepConfig &cfg)
{
    TrialSetup setup = make_trial_setup(cfg);
    const int n_links = cfg.n_subsurfaces + 1;

    TrainingSet ts;
    ts.seed = cfg.seed;
    ts.samples.assign(n_links, CMat(cfg.n_subcarriers, cfg.n_train));
    ts.labels.assign(n_links, CMat(cfg.n_subcarriers, cfg.n_train));

    parallel_for(cfg.n_train, cfg.threads, [&](int64_t t) {
        SeededRng rng = SeededRng::derive(cfg.seed, streams::kTrain, uint64_t(t));
        double snr_db = rng.uniform(cfg.train_snr_min_db, cfg.train_snr_max_db);
        SimulatedObservation obs = simulate_observation(setup, snr_db, rng);
        CMat est = obs.separated.stacked();
        for (int j = 0; j < n_links; j++)
        {
            ts.samples[j].col(t) = est.col(j);
            ts.labels[j].col(t) = obs.truth.col(j);
        }
    });
    return ts;
}

} // namespace eelm
