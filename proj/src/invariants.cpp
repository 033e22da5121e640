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

#include "qrflab/invariants.hpp"

#include <cmath>

#include "qrflab/alignment.hpp"
#include "qrflab/config.hpp"
#include "qrflab/sectors.hpp"

namespace qrf {
namespace {

using Index = Eigen::Index;

Index ix(std::size_t i) { return static_cast<Index>(i); }

// Adds sum_{r, k != 0} D(r, k) |r;k><r;k| to `op`.
void add_character_diagonal(Operator& op, const Mat& D) {
  auto sb = SectorBasis::of(op.space());
  const std::size_t n = sb->order();
  Mat A(ix(n), ix(n));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t k = 0; k < n; ++k) A(ix(g), ix(k)) = sb->amplitude(k, g);
  }
  Mat& m = op.matrix();
  for (std::size_t r = 0; r < sb->relations(); ++r) {
    Vec d = D.row(ix(r)).transpose();
    d[0] = 0;
    Mat block = A * d.asDiagonal() * A.adjoint();
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t gp = 0; gp < n; ++gp) {
        m(ix(sb->member(r, g)), ix(sb->member(r, gp))) += block(ix(g), ix(gp));
      }
    }
  }
}

}  // namespace

std::string to_string(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::PHYS:
      return "PHYS";
    case AlgebraTag::ALG:
      return "ALG";
    case AlgebraTag::INV:
      return "INV";
    case AlgebraTag::INV_PRIME:
      return "INV_PRIME";
    case AlgebraTag::NONE:
      break;
  }
  return "NONE";
}

Operator project_phys(const Operator& rho) {
  return from_relational_block(rho.space(), relational_block(rho));
}

Operator project_inv(const Operator& rho) {
  Operator out = project_phys(rho);
  add_character_diagonal(out, sector_diagonal(rho));
  return out;
}

Operator project_inv_prime(const Operator& rho) {
  auto sb = SectorBasis::of(rho.space());
  const std::size_t n = sb->order();
  const std::size_t d = rho.space().dim();
  Operator out = Operator::zero(rho.space());
  std::vector<Index> p(d);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t i = 0; i < d; ++i) p[i] = ix(sb->translate(i, g));
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) out.matrix()(p[i], p[j]) += rho.matrix()(ix(i), ix(j));
    }
  }
  out.matrix() /= static_cast<double>(n);
  return out;
}

Operator project_alg(const Operator& rho) {
  const double n = static_cast<double>(rho.space().local_dim());
  Operator out = project_phys(rho);
  add_nontrivial(out, nontrivial_weights(rho) / (n - 1.0));
  return out;
}

Operator project(const Operator& rho, AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::PHYS:
      return project_phys(rho);
    case AlgebraTag::ALG:
      return project_alg(rho);
    case AlgebraTag::INV:
      return project_inv(rho);
    case AlgebraTag::INV_PRIME:
      return project_inv_prime(rho);
    case AlgebraTag::NONE:
      break;
  }
  return rho;
}

bool in_algebra(const Operator& op, AlgebraTag tag, double eps) {
  return max_abs_diff(project(op, tag), op) < eps;
}

AlgebraTag classify(const Operator& op, double eps) {
  for (AlgebraTag tag : {AlgebraTag::PHYS, AlgebraTag::ALG, AlgebraTag::INV, AlgebraTag::INV_PRIME}) {
    if (in_algebra(op, tag, eps)) return tag;
  }
  return AlgebraTag::NONE;
}

Operator relational_observable(const Operator& A, int i) {
  const int N = A.space().particles() + 1;
  if (i < 1 || i > N) throw StructuralError("relational_observable: particle out of range");
  Operator out = project_phys(pin_site(A, i, 0));
  out.matrix() *= static_cast<double>(A.space().local_dim());
  return out;
}

bool observationally_equivalent(const Operator& rho, const Operator& sigma, double eps) {
  require_same_space(rho.space(), sigma.space(), "observationally_equivalent");
  return max_abs_diff(project_inv(rho), project_inv(sigma)) < eps;
}

bool symmetry_equivalent_alignable(const StateVector& psi, const StateVector& phi, double eps) {
  require_same_space(psi.space(), phi.space(), "symmetry_equivalent_alignable");
  auto a = decompose_alignable(psi);
  auto b = decompose_alignable(phi);
  if (!a || !b) throw DomainError("symmetry_equivalent_alignable: input is not alignable");
  const std::size_t R = psi.space().dim() / psi.space().local_dim();
  Vec x = Vec::Zero(ix(R));
  Vec y = Vec::Zero(ix(R));
  for (const auto& t : a->terms) x[ix(t.relation)] = t.alpha;
  for (const auto& t : b->terms) y[ix(t.relation)] = t.alpha;
  // Common phase taken from the largest coefficient of x.
  Index k = 0;
  x.cwiseAbs().maxCoeff(&k);
  if (std::abs(x[k]) < eps) return y.cwiseAbs().maxCoeff() < eps;
  if (std::abs(y[k]) < eps) return false;
  const cplx phase = (y[k] / x[k]) / std::abs(y[k] / x[k]);
  return (phase * x - y).cwiseAbs().maxCoeff() < eps;
}

Operator witness_inv_prime_not_inv(const SpaceLabel& space) {
  if (space.particles() < 2) throw DomainError("needs at least two relation sectors (N >= 2)");
  StateVector a = sector_state(space, 0, 1);
  StateVector b = sector_state(space, 1, 1);
  return outer(a, b);
}

std::optional<Operator> witness_inv_not_alg(const SpaceLabel& space) {
  if (space.local_dim() < 3) return std::nullopt;
  return density(sector_state(space, 0, 1));
}

Operator witness_alg_not_phys(const SpaceLabel& space) { return nontrivial_projector(space, 0); }

}  // namespace qrf
