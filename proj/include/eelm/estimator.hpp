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

#ifndef EELM_ESTIMATOR_HPP
#define EELM_ESTIMATOR_HPP

#include "eelm/channel.hpp"
#include "eelm/numerics.hpp"

#include <string>
#include <vector>

namespace eelm {

/// Per-slot composite channel frequency responses from pilot division,
/// N x (M+1), one column per slot.
struct LsEstimate
{
    CMat composite_cfr;
};

/// Direct and reflecting per-link CFRs after reflection-matrix inversion.
struct SeparatedCfrs
{
    CVec direct;     // length N
    CMat reflecting; // N x M

    CMat stacked() const; // [direct | reflecting], N x (M+1)
};

// Per-subcarrier division of received pilots by the transmitted pilot,
// column by column. Every pilot bin must have magnitude >= 1e-12.
LsEstimate ls_estimate(const CMat &rx_pilots_freq, const CVec &pilot_freq);

// Right-multiplies the composite CFRs by theta^-1 and splits the first column
// off as the direct link. Throws if theta is singular.
SeparatedCfrs separate_links(const LsEstimate &ls, const RisReflectionMatrix &theta);

// v / ||v||_2; throws on the zero vector.
CVec normalize_sample(const CVec &v);

// ||estimate - truth||^2 / ||truth||^2. Throws when truth has zero energy.
double nmse(const CMat &estimate, const CMat &truth);
double nmse(const CVec &estimate, const CVec &truth);

enum class Activation
{
    Sigmoid,
    Tanh,
    Relu
};

/// Scope of the pre-activation standardization statistic. Scalar divides all
/// hidden units by the batch average of the per-unit standard deviations;
/// PerUnit divides each unit by its own; Off skips the step entirely (the
/// ablation network).
enum class StdScope
{
    Scalar,
    PerUnit,
    Off
};

/// How the network output is returned to the physical scale. InputNorm
/// trains against labels divided by each sample's input norm and multiplies
/// the inference output by the norm removed during normalization; None trains
/// against raw labels and applies no rescaling.
enum class OutputScale
{
    InputNorm,
    None
};

std::string to_string(Activation a);
std::string to_string(StdScope s);
std::string to_string(OutputScale s);
Activation activation_from_string(const std::string &s);
StdScope std_scope_from_string(const std::string &s);
OutputScale output_scale_from_string(const std::string &s);

struct ElmOptions
{
    int hidden_size = 256;
    Activation activation = Activation::Tanh;
    StdScope std_scope = StdScope::Scalar;
    OutputScale output_scale = OutputScale::InputNorm;
    double ridge = 0.0; // 0 = plain pseudo-inverse
};

/// Noisy separated CFRs and their true values, one matrix pair per link
/// (column t = sample t). Link 0 is the direct link.
struct TrainingSet
{
    std::vector<CMat> samples; // N x N_d each
    std::vector<CMat> labels;  // N x N_d each
    uint64_t seed = 0;         // provenance of the generating stream

    int n_links() const { return int(samples.size()); }
    Eigen::Index n_samples() const { return samples.empty() ? 0 : samples[0].cols(); }

    void save(const std::string &path) const;
    static TrainingSet load(const std::string &path);
};

/// Single-hidden-layer network with frozen random input weights. One output
/// weight matrix per link; all links share W and b. Training is a closed-form
/// least-squares solve per link, so retraining with the same data and seed is
/// bit-identical.
class ElmNetwork
{
  public:
    ElmNetwork(int n_subcarriers, int n_links, const ElmOptions &opt, uint64_t seed);

    void train(const TrainingSet &data, int threads = 0);
    bool trained() const { return trained_; }

    // Refined CFRs, N x (M+1)
    CMat infer(const SeparatedCfrs &separated) const;
    CVec infer_link(int link, const CVec &noisy_cfr) const;

    // --- forward-path pieces, exposed for verification ---

    // [Re(v); Im(v)] stacking and its inverse
    static RVec stack_complex(const CVec &v);
    static CVec unstack_real(const RVec &v);

    // W * inputs + b, column-wise (pre-activations)
    RMat project(const RMat &inputs) const;

    // Standardization statistic of a pre-activation batch: per-unit standard
    // deviation across columns, reduced per `scope`. Size 1 (Scalar/Off) or
    // rows (PerUnit). Batches of fewer than two columns carry no statistics
    // and yield 1. Throws when the statistic degenerates to zero.
    static RVec batch_std_scale(const RMat &pre_activations, StdScope scope);

    // Divide by the scale and apply the activation
    RMat hidden_from_pre(const RMat &pre_activations, const RVec &scale) const;
    RVec hidden_forward(const RVec &sample, const RVec &scale) const; // training-mode stats
    RVec hidden_forward(int link, const RVec &sample) const;          // stored stats

    // Regression matrices for one link: normalized stacked inputs and
    // convention-scaled stacked targets. Used by train() and by external
    // least-squares oracles.
    static std::pair<RMat, RMat> build_regression_matrices(const CMat &samples, const CMat &labels,
                                                           OutputScale output_scale);

    // --- frozen state ---
    const RMat &input_weights() const { return w_; }
    const RVec &bias() const { return b_; }
    const RVec &std_scale(int link) const;
    const RMat &output_weights(int link) const;

    int n_subcarriers() const { return n_; }
    int n_links() const { return n_links_; }
    const ElmOptions &options() const { return opt_; }
    uint64_t seed() const { return seed_; }

    // Versioned binary model file, magic "EELM", little-endian float64.
    void save(const std::string &path) const;
    static ElmNetwork load(const std::string &path);

  private:
    int n_;       // subcarriers per link
    int n_links_; // M + 1
    ElmOptions opt_;
    uint64_t seed_;
    RMat w_; // hidden_size x 2N
    RVec b_; // hidden_size
    std::vector<RVec> scale_;
    std::vector<RMat> beta_; // 2N x hidden_size each
    bool trained_ = false;
};

} // namespace eelm

#endif
