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

#include "eelm/estimator.hpp"
#include "eelm/parallel.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace eelm {

// stream tag for drawing W and b (must differ from the harness tags)
static constexpr uint64_t kElmInitStream = 0x454C4D494E495400ull;

CMat SeparatedCfrs::stacked() const
{
    CMat h(direct.size(), reflecting.cols() + 1);
    h.col(0) = direct;
    h.rightCols(reflecting.cols()) = reflecting;
    return h;
}

LsEstimate ls_estimate(const CMat &rx_pilots_freq, const CVec &pilot_freq)
{
    if (rx_pilots_freq.rows() != pilot_freq.size())
        throw std::invalid_argument("ls_estimate: row count must match pilot length");
    if (pilot_freq.cwiseAbs().minCoeff() < 1e-12)
        throw std::invalid_argument("ls_estimate: pilot has a near-zero bin");

    LsEstimate ls;
    ls.composite_cfr = rx_pilots_freq.array().colwise() / pilot_freq.array();
    return ls;
}

SeparatedCfrs separate_links(const LsEstimate &ls, const RisReflectionMatrix &theta)
{
    const Eigen::Index d = theta.theta.rows();
    if (theta.theta.cols() != d)
        throw std::invalid_argument("separate_links: theta must be square");
    if (ls.composite_cfr.cols() != d)
        throw std::invalid_argument("separate_links: slot count must equal theta dimension");

    Eigen::FullPivLU<CMat> lu(theta.theta);
    if (!lu.isInvertible())
        throw std::runtime_error("separate_links: reflection matrix is singular");

    CMat x = ls.composite_cfr * lu.inverse();
    SeparatedCfrs out;
    out.direct = x.col(0);
    out.reflecting = x.rightCols(d - 1);
    return out;
}

CVec normalize_sample(const CVec &v)
{
    double n = v.norm();
    if (n <= 0.0)
        throw std::invalid_argument("normalize_sample: zero vector");
    return v / n;
}

static double nmse_impl(double err2, double ref2)
{
    if (ref2 <= 0.0)
        throw std::invalid_argument("nmse: truth has zero energy");
    return err2 / ref2;
}

double nmse(const CMat &estimate, const CMat &truth)
{
    if (estimate.rows() != truth.rows() || estimate.cols() != truth.cols())
        throw std::invalid_argument("nmse: shape mismatch");
    return nmse_impl((estimate - truth).squaredNorm(), truth.squaredNorm());
}

double nmse(const CVec &estimate, const CVec &truth)
{
    if (estimate.size() != truth.size())
        throw std::invalid_argument("nmse: shape mismatch");
    return nmse_impl((estimate - truth).squaredNorm(), truth.squaredNorm());
}

// --- enum names ------------------------------------------------------------

std::string to_string(Activation a)
{
    switch (a)
    {
    case Activation::Sigmoid: return "sigmoid";
    case Activation::Tanh: return "tanh";
    case Activation::Relu: return "relu";
    }
    return "?";
}

std::string to_string(StdScope s)
{
    switch (s)
    {
    case StdScope::Scalar: return "scalar";
    case StdScope::PerUnit: return "per_unit";
    case StdScope::Off: return "off";
    }
    return "?";
}

std::string to_string(OutputScale s)
{
    return s == OutputScale::InputNorm ? "input_norm" : "none";
}

Activation activation_from_string(const std::string &s)
{
    if (s == "sigmoid") return Activation::Sigmoid;
    if (s == "tanh") return Activation::Tanh;
    if (s == "relu") return Activation::Relu;
    throw std::invalid_argument("unknown activation: " + s);
}

StdScope std_scope_from_string(const std::string &s)
{
    if (s == "scalar") return StdScope::Scalar;
    if (s == "per_unit") return StdScope::PerUnit;
    if (s == "off") return StdScope::Off;
    throw std::invalid_argument("unknown std_scope: " + s);
}

OutputScale output_scale_from_string(const std::string &s)
{
    if (s == "input_norm") return OutputScale::InputNorm;
    if (s == "none") return OutputScale::None;
    throw std::invalid_argument("unknown output_scale: " + s);
}

// --- binary IO helpers (little-endian host assumed) --------------------------

static void write_bytes(std::ofstream &f, const void *p, size_t n)
{
    f.write(static_cast<const char *>(p), std::streamsize(n));
}

static void read_bytes(std::ifstream &f, void *p, size_t n)
{
    f.read(static_cast<char *>(p), std::streamsize(n));
    if (!f)
        throw std::runtime_error("model/dataset file truncated");
}

template <typename T> static void write_pod(std::ofstream &f, T v) { write_bytes(f, &v, sizeof(T)); }

template <typename T> static T read_pod(std::ifstream &f)
{
    T v;
    read_bytes(f, &v, sizeof(T));
    return v;
}

static void write_rmat(std::ofstream &f, const RMat &m)
{
    write_pod<uint64_t>(f, uint64_t(m.rows()));
    write_pod<uint64_t>(f, uint64_t(m.cols()));
    write_bytes(f, m.data(), sizeof(double) * size_t(m.size()));
}

static RMat read_rmat(std::ifstream &f)
{
    auto rows = Eigen::Index(read_pod<uint64_t>(f));
    auto cols = Eigen::Index(read_pod<uint64_t>(f));
    if (rows < 0 || cols < 0 || rows * cols > (1ll << 32))
        throw std::runtime_error("model/dataset file has implausible dimensions");
    RMat m(rows, cols);
    read_bytes(f, m.data(), sizeof(double) * size_t(m.size()));
    return m;
}

static void write_cmat(std::ofstream &f, const CMat &m)
{
    write_pod<uint64_t>(f, uint64_t(m.rows()));
    write_pod<uint64_t>(f, uint64_t(m.cols()));
    write_bytes(f, m.data(), sizeof(cxd) * size_t(m.size()));
}

static CMat read_cmat(std::ifstream &f)
{
    auto rows = Eigen::Index(read_pod<uint64_t>(f));
    auto cols = Eigen::Index(read_pod<uint64_t>(f));
    if (rows < 0 || cols < 0 || rows * cols > (1ll << 32))
        throw std::runtime_error("model/dataset file has implausible dimensions");
    CMat m(rows, cols);
    read_bytes(f, m.data(), sizeof(cxd) * size_t(m.size()));
    return m;
}

// --- TrainingSet -------------------------------------------------------------

static constexpr char kDatasetMagic[8] = {'E', 'E', 'L', 'M', 'D', 'S', 'E', 'T'};

void TrainingSet::save(const std::string &path) const
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open dataset file for writing: " + path);
    write_bytes(f, kDatasetMagic, 8);
    write_pod<uint32_t>(f, 1u); // version
    write_pod<uint64_t>(f, seed);
    write_pod<uint32_t>(f, uint32_t(n_links()));
    write_pod<uint64_t>(f, uint64_t(n_samples()));
    for (int j = 0; j < n_links(); j++)
    {
        write_cmat(f, samples[j]);
        write_cmat(f, labels[j]);
    }
    if (!f)
        throw std::runtime_error("write failed for dataset file: " + path);
}

TrainingSet TrainingSet::load(const std::string &path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open dataset file: " + path);
    char magic[8];
    read_bytes(f, magic, 8);
    if (std::memcmp(magic, kDatasetMagic, 8) != 0)
        throw std::runtime_error("not a dataset file: " + path);
    auto version = read_pod<uint32_t>(f);
    if (version != 1)
        throw std::runtime_error("unsupported dataset version");
    TrainingSet ts;
    ts.seed = read_pod<uint64_t>(f);
    auto links = read_pod<uint32_t>(f);
    auto count = read_pod<uint64_t>(f);
    ts.samples.reserve(links);
    ts.labels.reserve(links);
    for (uint32_t j = 0; j < links; j++)
    {
        ts.samples.push_back(read_cmat(f));
        ts.labels.push_back(read_cmat(f));
        if (ts.samples.back().cols() != Eigen::Index(count))
            throw std::runtime_error("dataset sample count mismatch");
    }
    return ts;
}

// --- ElmNetwork ---------------------------------------------------------------

ElmNetwork::ElmNetwork(int n_subcarriers, int n_links, const ElmOptions &opt, uint64_t seed)
    : n_(n_subcarriers), n_links_(n_links), opt_(opt), seed_(seed)
{
    if (n_ < 1 || n_links_ < 1)
        throw std::invalid_argument("ElmNetwork: bad dimensions");
    if (opt_.hidden_size < 1)
        throw std::invalid_argument("ElmNetwork: hidden_size must be >= 1");
    if (opt_.ridge < 0.0)
        throw std::invalid_argument("ElmNetwork: ridge must be non-negative");

    // classical ELM init: W ~ U[-1, 1], b ~ U[0, 1], frozen after construction
    SeededRng rng = SeededRng::derive(seed, kElmInitStream);
    w_.resize(opt_.hidden_size, 2 * n_);
    for (int i = 0; i < w_.rows(); i++)
        for (int k = 0; k < w_.cols(); k++)
            w_(i, k) = rng.uniform(-1.0, 1.0);
    b_.resize(opt_.hidden_size);
    for (int i = 0; i < b_.size(); i++)
        b_[i] = rng.uniform(0.0, 1.0);
}

RVec ElmNetwork::stack_complex(const CVec &v)
{
    RVec r(2 * v.size());
    r.head(v.size()) = v.real();
    r.tail(v.size()) = v.imag();
    return r;
}

CVec ElmNetwork::unstack_real(const RVec &v)
{
    if (v.size() % 2 != 0)
        throw std::invalid_argument("unstack_real: odd length");
    Eigen::Index n = v.size() / 2;
    CVec c(n);
    c.real() = v.head(n);
    c.imag() = v.tail(n);
    return c;
}

RMat ElmNetwork::project(const RMat &inputs) const
{
    if (inputs.rows() != w_.cols())
        throw std::invalid_argument("project: input dimension mismatch");
    return (w_ * inputs).colwise() + b_;
}

RVec ElmNetwork::batch_std_scale(const RMat &pre, StdScope scope)
{
    if (scope == StdScope::Off)
        return RVec::Ones(1);
    if (pre.cols() < 2)
        return RVec::Ones(scope == StdScope::PerUnit ? pre.rows() : 1); // no batch statistics

    const double inv_n = 1.0 / double(pre.cols());
    RVec sd(pre.rows());
    for (Eigen::Index u = 0; u < pre.rows(); u++)
    {
        double mean = pre.row(u).sum() * inv_n;
        double var = (pre.row(u).array() - mean).square().sum() * inv_n;
        sd[u] = std::sqrt(var);
    }
    if (scope == StdScope::PerUnit)
    {
        if ((sd.array() <= 0.0).any())
            throw std::runtime_error("batch_std_scale: degenerate per-unit statistics");
        return sd;
    }
    double s = sd.mean();
    if (s <= 0.0)
        throw std::runtime_error("batch_std_scale: degenerate statistics");
    RVec out(1);
    out[0] = s;
    return out;
}

static void apply_activation(RMat &y, Activation a)
{
    switch (a)
    {
    case Activation::Sigmoid:
        y = (1.0 + (-y.array()).exp()).inverse();
        break;
    case Activation::Tanh:
        y = y.array().tanh();
        break;
    case Activation::Relu:
        y = y.array().max(0.0);
        break;
    }
}

RMat ElmNetwork::hidden_from_pre(const RMat &pre, const RVec &scale) const
{
    if ((scale.array() <= 0.0).any())
        throw std::runtime_error("hidden_from_pre: zero standardization scale");
    RMat y;
    if (scale.size() == 1)
        y = pre / scale[0];
    else if (scale.size() == pre.rows())
        y = scale.cwiseInverse().asDiagonal() * pre;
    else
        throw std::invalid_argument("hidden_from_pre: scale size mismatch");
    apply_activation(y, opt_.activation);
    return y;
}

RVec ElmNetwork::hidden_forward(const RVec &sample, const RVec &scale) const
{
    RMat pre = project(sample);
    return hidden_from_pre(pre, scale).col(0);
}

RVec ElmNetwork::hidden_forward(int link, const RVec &sample) const
{
    return hidden_forward(sample, std_scale(link));
}

std::pair<RMat, RMat> ElmNetwork::build_regression_matrices(const CMat &samples, const CMat &labels,
                                                            OutputScale output_scale)
{
    if (samples.rows() != labels.rows() || samples.cols() != labels.cols())
        throw std::invalid_argument("build_regression_matrices: shape mismatch");
    const Eigen::Index n = samples.rows();
    const Eigen::Index count = samples.cols();
    RMat p(2 * n, count), t(2 * n, count);
    for (Eigen::Index i = 0; i < count; i++)
    {
        double norm = samples.col(i).norm();
        if (norm <= 0.0)
            throw std::invalid_argument("build_regression_matrices: zero sample");
        p.col(i) = stack_complex(samples.col(i) / norm);
        CVec lbl = labels.col(i);
        if (output_scale == OutputScale::InputNorm)
            lbl /= norm;
        t.col(i) = stack_complex(lbl);
    }
    return {std::move(p), std::move(t)};
}

void ElmNetwork::train(const TrainingSet &data, int threads)
{
    if (data.n_links() != n_links_)
        throw std::invalid_argument("train: training set link count mismatch");
    if (data.n_samples() < 1)
        throw std::invalid_argument("train: empty training set");
    if (data.n_samples() < opt_.hidden_size)
        std::fprintf(stderr,
                     "elm: warning: %lld training samples < %d hidden units; "
                     "the output solve is underdetermined\n",
                     (long long)data.n_samples(), opt_.hidden_size);

    scale_.assign(n_links_, RVec());
    beta_.assign(n_links_, RMat());

    parallel_for(n_links_, threads, [&](int64_t j) {
        auto [p, t] = build_regression_matrices(data.samples[j], data.labels[j], opt_.output_scale);
        RMat pre = project(p);
        RVec scale = batch_std_scale(pre, opt_.std_scope);
        RMat o = hidden_from_pre(pre, scale);
        RMat beta;
        if (opt_.ridge == 0.0)
            beta = t * pseudo_inverse(o);
        else
        {
            RMat gram = o * o.transpose();
            gram.diagonal().array() += opt_.ridge;
            beta = gram.ldlt().solve(o * t.transpose()).transpose();
        }
        scale_[j] = std::move(scale);
        beta_[j] = std::move(beta);
    });

    trained_ = true;
}

const RVec &ElmNetwork::std_scale(int link) const
{
    if (!trained_)
        throw std::runtime_error("ElmNetwork: not trained");
    if (link < 0 || link >= n_links_)
        throw std::invalid_argument("std_scale: link out of range");
    return scale_[link];
}

const RMat &ElmNetwork::output_weights(int link) const
{
    if (!trained_)
        throw std::runtime_error("ElmNetwork: not trained");
    if (link < 0 || link >= n_links_)
        throw std::invalid_argument("output_weights: link out of range");
    return beta_[link];
}

CVec ElmNetwork::infer_link(int link, const CVec &noisy_cfr) const
{
    if (!trained_)
        throw std::runtime_error("ElmNetwork: not trained");
    if (link < 0 || link >= n_links_)
        throw std::invalid_argument("infer_link: link out of range");
    if (noisy_cfr.size() != n_)
        throw std::invalid_argument("infer_link: CFR length mismatch");

    double norm = noisy_cfr.norm();
    if (norm <= 0.0)
        throw std::invalid_argument("infer_link: zero input");

    RVec p = stack_complex(noisy_cfr / norm);
    RVec o = hidden_forward(link, p);
    CVec out = unstack_real(beta_[link] * o);
    if (opt_.output_scale == OutputScale::InputNorm)
        out *= norm;
    return out;
}

CMat ElmNetwork::infer(const SeparatedCfrs &separated) const
{
    if (separated.reflecting.cols() + 1 != n_links_)
        throw std::invalid_argument("infer: link count mismatch");
    CMat refined(n_, n_links_);
    refined.col(0) = infer_link(0, separated.direct);
    for (int j = 1; j < n_links_; j++)
        refined.col(j) = infer_link(j, separated.reflecting.col(j - 1));
    return refined;
}

// --- model file ----------------------------------------------------------------

static constexpr char kModelMagic[4] = {'E', 'E', 'L', 'M'};

void ElmNetwork::save(const std::string &path) const
{
    if (!trained_)
        throw std::runtime_error("ElmNetwork::save: not trained");
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open model file for writing: " + path);
    write_bytes(f, kModelMagic, 4);
    write_pod<uint32_t>(f, 1u); // format version
    write_pod<uint64_t>(f, seed_);
    write_pod<uint32_t>(f, uint32_t(n_));
    write_pod<uint32_t>(f, uint32_t(n_links_));
    write_pod<uint32_t>(f, uint32_t(opt_.hidden_size));
    write_pod<uint32_t>(f, uint32_t(opt_.activation));
    write_pod<uint32_t>(f, uint32_t(opt_.std_scope));
    write_pod<uint32_t>(f, uint32_t(opt_.output_scale));
    write_pod<double>(f, opt_.ridge);
    write_rmat(f, w_);
    write_rmat(f, RMat(b_));
    for (int j = 0; j < n_links_; j++)
    {
        write_rmat(f, RMat(scale_[j]));
        write_rmat(f, beta_[j]);
    }
    if (!f)
        throw std::runtime_error("write failed for model file: " + path);
}

ElmNetwork ElmNetwork::load(const std::string &path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open model file: " + path);
    char magic[4];
    read_bytes(f, magic, 4);
    if (std::memcmp(magic, kModelMagic, 4) != 0)
        throw std::runtime_error("not a model file: " + path);
    auto version = read_pod<uint32_t>(f);
    if (version != 1)
        throw std::runtime_error("unsupported model version");

    auto seed = read_pod<uint64_t>(f);
    auto n = int(read_pod<uint32_t>(f));
    auto links = int(read_pod<uint32_t>(f));
    ElmOptions opt;
    opt.hidden_size = int(read_pod<uint32_t>(f));
    opt.activation = Activation(read_pod<uint32_t>(f));
    opt.std_scope = StdScope(read_pod<uint32_t>(f));
    opt.output_scale = OutputScale(read_pod<uint32_t>(f));
    opt.ridge = read_pod<double>(f);

    ElmNetwork net(n, links, opt, seed);
    net.w_ = read_rmat(f);
    net.b_ = read_rmat(f).col(0);
    net.scale_.resize(links);
    net.beta_.resize(links);
    for (int j = 0; j < links; j++)
    {
        net.scale_[j] = read_rmat(f).col(0);
        net.beta_[j] = read_rmat(f);
    }
    net.trained_ = true;
    return net;
}

} // namespace eelm
