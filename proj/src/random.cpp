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

#include "qrflab/random.hpp"

#include <numbers>

namespace qrf {
namespace {

using Index = Eigen::Index;

cplx gaussian(Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  const double re = nd(rng);
  const double im = nd(rng);
  return {re, im};
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::string_view label) {
  // FNV-1a over the label, mixed with the seed.
  std::uint64_t h = 1469598103934665603ULL;
  for (char ch : label) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ULL;
  }
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return Rng(seq);
}

Operator random_operator(const SpaceLabel& space, Rng& rng) {
  const auto d = static_cast<Index>(space.dim());
  Mat m(d, d);
  for (Index c = 0; c < d; ++c) {
    for (Index r = 0; r < d; ++r) m(r, c) = gaussian(rng);
  }
  return Operator(space, std::move(m));
}

Operator random_hermitian(const SpaceLabel& space, Rng& rng) {
  Operator x = random_operator(space, rng);
  return Operator(space, (x.matrix() + x.matrix().adjoint()) * 0.5);
}

Operator random_density(const SpaceLabel& space, Rng& rng) {
  Operator x = random_operator(space, rng);
  Mat rho = x.matrix() * x.matrix().adjoint();
  rho /= rho.trace().real();
  return Operator(space, std::move(rho));
}

StateVector random_state(const SpaceLabel& space, Rng& rng) {
  Vec v(static_cast<Index>(space.dim()));
  for (Index i = 0; i < v.size(); ++i) v[i] = gaussian(rng);
  v.normalize();
  return StateVector(space, std::move(v));
}

Operator random_unitary(const SpaceLabel& space, Rng& rng) {
  Operator x = random_operator(space, rng);
  Eigen::HouseholderQR<Mat> qr(x.matrix());
  Mat q = qr.householderQ();
  const Mat r = qr.matrixQR();
  for (Index k = 0; k < q.cols(); ++k) {
    const cplx d = r(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return Operator(space, std::move(q));
}

SymmetryElement random_symmetry(const SpaceLabel& space, Rng& rng, bool with_phase) {
  const std::size_t n = space.local_dim();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> a(space.dim() / n);
  for (auto& g : a) g = pick(rng);
  double phase = 0;
  if (with_phase) phase = std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
  return SymmetryElement(space, std::move(a), phase);
}

StateVector random_alignable_state(const SpaceLabel& space, Rng& rng, double fill) {
  auto sb = SectorBasis::of(space);
  std::uniform_int_distribution<std::size_t> pick(0, sb->order() - 1);
  std::bernoulli_distribution occupied(fill);
  StateVector out = StateVector::zero(space);
  std::uniform_int_distribution<std::size_t> any(0, sb->relations() - 1);
  const std::size_t forced = any(rng);
  for (std::size_t r = 0; r < sb->relations(); ++r) {
    if (r != forced && !occupied(rng)) continue;
    out.amplitudes()[static_cast<Index>(sb->member(r, pick(rng)))] = gaussian(rng);
  }
  out.amplitudes().normalize();
  return out;
}

}  // namespace qrf
