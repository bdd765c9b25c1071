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

#ifndef EELM_NUMERICS_HPP
#define EELM_NUMERICS_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>

namespace eelm {

using cxd = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

/// Deterministic random source. The same seed yields the same draw sequence
/// on every platform: the engine is the standard-mandated mt19937_64 and all
/// variate mappings (uniform, Gaussian) are implemented on top of raw 64-bit
/// words rather than the implementation-defined std distributions.
///
/// Single-owner by design: concurrent workers must each hold their own
/// instance obtained via derive() with distinct stream/index tags.
class SeededRng
{
  public:
    explicit SeededRng(uint64_t seed);

    // Child stream for (stream, index, subindex), decorrelated from the parent
    // seed by splitmix64 chaining. Used for per-trial / per-sample RNGs.
    static SeededRng derive(uint64_t seed, uint64_t stream, uint64_t index = 0, uint64_t subindex = 0);

    uint64_t next_u64();
    double uniform01();                        // [0, 1), 53-bit resolution
    double uniform(double lo, double hi);
    double gaussian();                         // N(0, 1), Box-Muller
    cxd cgaussian(double variance);            // CSCG, variance split between re/im

    uint64_t seed() const { return seed_; }
    uint64_t position() const { return position_; } // engine words consumed

  private:
    std::mt19937_64 engine_;
    uint64_t seed_;
    uint64_t position_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// n i.i.d. circularly symmetric complex Gaussian samples, zero mean, total
// variance `variance` (so re/im each have variance/2).
CVec complex_gaussian(SeededRng &rng, Eigen::Index n, double variance);

// Normalized n x n Fourier matrix, entry (k,l) = exp(-j 2 pi k l / n) / sqrt(n).
// Unitary for every n >= 1.
CMat dft_matrix(Eigen::Index n);

// Normalized transforms matching dft_matrix(n) and its adjoint. Power-of-two
// lengths go through a radix-2 FFT, everything else through the O(n^2) sum.
CVec dft(const Eigen::Ref<const CVec> &x);   // F_n * x
CVec idft(const Eigen::Ref<const CVec> &x);  // F_n^H * x

// Moore-Penrose pseudo-inverse via SVD. Singular values below
// tol * sigma_max are truncated; when tol is not given it defaults to
// machine_epsilon * max(rows, cols).
CMat pseudo_inverse(const CMat &m, std::optional<double> tol = std::nullopt);
RMat pseudo_inverse(const RMat &m, std::optional<double> tol = std::nullopt);

} // namespace eelm

#endif
