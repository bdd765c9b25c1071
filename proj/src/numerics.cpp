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

#include "eelm/numerics.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

namespace eelm {

static constexpr double kTwoPi = 6.283185307179586476925286766559;

static uint64_t splitmix64(uint64_t x)
{
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

SeededRng::SeededRng(uint64_t seed) : engine_(seed), seed_(seed) {}

SeededRng SeededRng::derive(uint64_t seed, uint64_t stream, uint64_t index, uint64_t subindex)
{
    uint64_t s = splitmix64(seed ^ splitmix64(stream));
    s = splitmix64(s ^ splitmix64(index));
    s = splitmix64(s ^ splitmix64(subindex));
    return SeededRng(s);
}

uint64_t SeededRng::next_u64()
{
    position_++;
    return engine_();
}

double SeededRng::uniform01()
{
    // 53-bit mantissa from the top of the word
    return double(next_u64() >> 11) * 0x1.0p-53;
}

double SeededRng::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform01();
}

double SeededRng::gaussian()
{
    if (has_spare_)
    {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 shifted away from 0 so the log is finite
    double u1 = 1.0 - uniform01();
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = kTwoPi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

cxd SeededRng::cgaussian(double variance)
{
    if (variance < 0.0)
        throw std::invalid_argument("cgaussian: variance must be non-negative");
    double s = std::sqrt(0.5 * variance);
    double re = gaussian();
    double im = gaussian();
    return {s * re, s * im};
}

CVec complex_gaussian(SeededRng &rng, Eigen::Index n, double variance)
{
    if (variance < 0.0)
        throw std::invalid_argument("complex_gaussian: variance must be non-negative");
    CVec v(n);
    for (Eigen::Index i = 0; i < n; i++)
        v[i] = rng.cgaussian(variance);
    return v;
}

CMat dft_matrix(Eigen::Index n)
{
    if (n < 1)
        throw std::invalid_argument("dft_matrix: n must be >= 1");
    CMat f(n, n);
    double scale = 1.0 / std::sqrt(double(n));
    for (Eigen::Index k = 0; k < n; k++)
        for (Eigen::Index l = 0; l < n; l++)
        {
            // reduce k*l mod n first so the angle stays small for large n
            double phase = -kTwoPi * double((k * l) % n) / double(n);
            f(k, l) = scale * std::polar(1.0, phase);
        }
    return f;
}

static bool is_pow2(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

// In-place iterative radix-2, unnormalized. sign = -1 forward, +1 inverse.
static void fft_radix2(std::vector<cxd> &a, int sign)
{
    const size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; i++)
    {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1)
            j ^= bit;
        j ^= bit;
        if (i < j)
            std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1)
    {
        double base = double(sign) * kTwoPi / double(len);
        for (size_t i = 0; i < n; i += len)
            for (size_t j = 0; j < len / 2; j++)
            {
                cxd w = std::polar(1.0, base * double(j));
                cxd u = a[i + j];
                cxd v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
            }
    }
}

static CVec transform(const Eigen::Ref<const CVec> &x, int sign)
{
    const Eigen::Index n = x.size();
    if (n < 1)
        throw std::invalid_argument("dft: empty input");
    double scale = 1.0 / std::sqrt(double(n));
    if (is_pow2(n))
    {
        std::vector<cxd> a(x.data(), x.data() + n);
        fft_radix2(a, sign);
        CVec y(n);
        for (Eigen::Index i = 0; i < n; i++)
            y[i] = scale * a[i];
        return y;
    }
    CVec y = CVec::Zero(n);
    for (Eigen::Index k = 0; k < n; k++)
    {
        cxd acc = 0.0;
        for (Eigen::Index l = 0; l < n; l++)
            acc += x[l] * std::polar(1.0, double(sign) * kTwoPi * double((k * l) % n) / double(n));
        y[k] = scale * acc;
    }
    return y;
}

CVec dft(const Eigen::Ref<const CVec> &x) { return transform(x, -1); }

CVec idft(const Eigen::Ref<const CVec> &x) { return transform(x, +1); }

template <typename Mat> static Mat pinv_impl(const Mat &m, std::optional<double> tol)
{
    if (!m.allFinite())
        throw std::invalid_argument("pseudo_inverse: input has NaN or Inf entries");
    if (tol && *tol < 0.0)
        throw std::invalid_argument("pseudo_inverse: tol must be non-negative");

    double rel = tol ? *tol
                     : std::numeric_limits<double>::epsilon() * double(std::max(m.rows(), m.cols()));

    Eigen::BDCSVD<Mat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto &sv = svd.singularValues();
    if (sv.size() == 0)
        return Mat::Zero(m.cols(), m.rows());

    double cutoff = rel * sv[0];
    Eigen::VectorXd inv_sv = Eigen::VectorXd::Zero(sv.size());
    for (Eigen::Index i = 0; i < sv.size(); i++)
        if (sv[i] > cutoff && sv[i] > 0.0)
            inv_sv[i] = 1.0 / sv[i];

    return svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().adjoint();
}

CMat pseudo_inverse(const CMat &m, std::optional<double> tol) { return pinv_impl(m, tol); }

RMat pseudo_inverse(const RMat &m, std::optional<double> tol) { return pinv_impl(m, tol); }

} // namespace eelm
