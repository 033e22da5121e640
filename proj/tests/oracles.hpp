// Copyright 2026 The qrflab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force reference implementations used by the unit tests. They work
// from residues and explicit loops and share no code with the library
// beyond the container types.
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "qrflab/hilbert.hpp"

namespace oracle {

using qrf::cplx;
using qrf::Mat;
using qrf::Vec;
using Res = std::vector<int>;
using Config = std::vector<Res>;

inline std::size_t order(const Res& moduli) {
  std::size_t n = 1;
  for (int m : moduli) n *= static_cast<std::size_t>(m);
  return n;
}

// Residues of element number idx, last factor fastest.
inline Res residues(const Res& moduli, std::size_t idx) {
  Res r(moduli.size());
  for (std::size_t j = moduli.size(); j-- > 0;) {
    r[j] = static_cast<int>(idx % static_cast<std::size_t>(moduli[j]));
    idx /= static_cast<std::size_t>(moduli[j]);
  }
  return r;
}

inline std::size_t index(const Res& moduli, const Res& r) {
  std::size_t idx = 0;
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    const int m = moduli[j];
    idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(((r[j] % m) + m) % m);
  }
  return idx;
}

inline Res add(const Res& moduli, const Res& a, const Res& b) {
  Res r(moduli.size());
  for (std::size_t j = 0; j < moduli.size(); ++j) r[j] = ((a[j] + b[j]) % moduli[j] + moduli[j]) % moduli[j];
  return r;
}

inline Res neg(const Res& moduli, const Res& a) {
  Res r(moduli.size());
  for (std::size_t j = 0; j < moduli.size(); ++j) r[j] = (moduli[j] - a[j] % moduli[j]) % moduli[j];
  return r;
}

inline cplx chi(const Res& moduli, const Res& k, const Res& g) {
  double phase = 0;
  for (std::size_t j = 0; j < moduli.size(); ++j) phase += static_cast<double>(k[j] * g[j]) / moduli[j];
  return std::exp(cplx(0, 2 * std::numbers::pi * phase));
}

// Basis index of a configuration, particle 1 most significant.
inline std::size_t basis(const Res& moduli, const Config& config) {
  const std::size_t n = order(moduli);
  std::size_t idx = 0;
  for (const auto& g : config) idx = idx * n + index(moduli, g);
  return idx;
}

inline Config configuration(const Res& moduli, int N, std::size_t idx) {
  const std::size_t n = order(moduli);
  Config c(static_cast<std::size_t>(N));
  for (int p = N; p-- > 0;) {
    c[static_cast<std::size_t>(p)] = residues(moduli, idx % n);
    idx /= n;
  }
  return c;
}

inline std::size_t dim(const Res& moduli, int N) {
  std::size_t d = 1;
  for (int p = 0; p < N; ++p) d *= order(moduli);
  return d;
}

// U_g applied to every particle.
inline Mat global_translation(const Res& moduli, int N, const Res& g) {
  const std::size_t d = dim(moduli, N);
  Mat U = Mat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    Config c = configuration(moduli, N, i);
    for (auto& x : c) x = add(moduli, x, g);
    U(static_cast<Eigen::Index>(basis(moduli, c)), static_cast<Eigen::Index>(i)) = 1.0;
  }
  return U;
}

// |h;chi_k> = |G|^{-1/2} sum_g chi_k(g^{-1}) |g, h_1 g, ..., h_{N-1} g>.
inline Vec sector_state(const Res& moduli, const Config& h, const Res& k) {
  const int N = static_cast<int>(h.size()) + 1;
  const std::size_t n = order(moduli);
  Vec v = Vec::Zero(static_cast<Eigen::Index>(dim(moduli, N)));
  for (std::size_t gi = 0; gi < n; ++gi) {
    const Res g = residues(moduli, gi);
    Config c{g};
    for (const auto& hk : h) c.push_back(add(moduli, hk, g));
    v[static_cast<Eigen::Index>(basis(moduli, c))] += chi(moduli, k, neg(moduli, g)) / std::sqrt(double(n));
  }
  return v;
}

inline Mat physical_projector(const Res& moduli, int N) {
  const std::size_t n = order(moduli);
  const auto d = static_cast<Eigen::Index>(dim(moduli, N));
  Mat P = Mat::Zero(d, d);
  for (std::size_t gi = 0; gi < n; ++gi) P += global_translation(moduli, N, residues(moduli, gi));
  return P / double(n);
}

inline Mat kron(const Mat& A, const Mat& B) {
  Mat K(A.rows() * B.rows(), A.cols() * B.cols());
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j)
      for (Eigen::Index k = 0; k < B.rows(); ++k)
        for (Eigen::Index l = 0; l < B.cols(); ++l) K(i * B.rows() + k, j * B.cols() + l) = A(i, j) * B(k, l);
  return K;
}

// Partial trace over a trailing factor of dimension dm.
inline Mat partial_trace(const Mat& rho, Eigen::Index dm) {
  const Eigen::Index dk = rho.rows() / dm;
  Mat out = Mat::Zero(dk, dk);
  for (Eigen::Index a = 0; a < dk; ++a)
    for (Eigen::Index b = 0; b < dk; ++b)
      for (Eigen::Index s = 0; s < dm; ++s) out(a, b) += rho(a * dm + s, b * dm + s);
  return out;
}

inline double max_diff(const Mat& a, const Mat& b) { return (a - b).cwiseAbs().maxCoeff(); }
inline double max_diff(const Vec& a, const Vec& b) { return (a - b).cwiseAbs().maxCoeff(); }

}  // namespace oracle
