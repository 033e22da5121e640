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

#include <gtest/gtest.h>

#include <numbers>

#include "oracles.hpp"
#include "qrflab/alignment.hpp"
#include "qrflab/config.hpp"
#include "qrflab/invariants.hpp"
#include "qrflab/paradox.hpp"
#include "qrflab/random.hpp"
#include "qrflab/sectors.hpp"
#include "qrflab/symmetry.hpp"

using namespace qrf;

namespace {

StateVector embed_at(const StateVector& phi, int site) {
  const SpaceLabel full = phi.space().with_particles(phi.space().particles() + 1);
  StateVector out = StateVector::zero(full);
  for (std::size_t a = 0; a < phi.space().dim(); ++a) {
    out.amplitudes()[static_cast<Eigen::Index>(insert_site(a, full.particles() - 1, site, 0, full.local_dim()))] =
        phi[a];
  }
  return out;
}

// Distance between two states modulo a global phase.
double phase_distance(const StateVector& a, const StateVector& b) {
  const cplx ov = inner(a, b);
  const cplx ph = std::abs(ov) > 0 ? ov / std::abs(ov) : cplx(1.0);
  StateVector c = a;
  c.amplitudes() *= ph;
  return max_abs_diff(c, b);
}

std::size_t idx(const SpaceLabel& s, std::vector<std::size_t> c) { return basis_index(s, c); }

}  // namespace

TEST(Alignment, ProductBasisState) {
  const SpaceLabel s(GroupSpec({5}), 2);
  const auto dec = decompose_alignable(StateVector::basis(s, idx(s, {0, 3})));
  ASSERT_TRUE(dec);
  ASSERT_EQ(dec->terms.size(), 1u);
  EXPECT_EQ(dec->terms[0].relation, 3u);
  EXPECT_EQ(dec->terms[0].anchor, 0u);
  EXPECT_NEAR(std::abs(dec->terms[0].alpha - 1.0), 0.0, 1e-15);
}

TEST(Alignment, RelationalBasisStateIsNotAlignable) {
  const SpaceLabel s(GroupSpec({5}), 2);
  EXPECT_FALSE(decompose_alignable(sector_state(s, 2, 0)));
  EXPECT_THROW(align_to(sector_state(s, 2, 0), 1), DomainError);
}

TEST(Alignment, ParadoxTwoParticleState) {
  const double theta = 0.9;
  const ParadoxConfig cfg = ParadoxConfig::with_default_masses(16, 3, 2, 5, theta);
  const StateVector psi = build_two_particle_state(cfg);
  const auto dec = decompose_alignable(psi);
  ASSERT_TRUE(dec);
  ASSERT_EQ(dec->terms.size(), 2u);
  EXPECT_EQ(dec->terms[0].relation, 5u);
  EXPECT_EQ(dec->terms[0].anchor, 13u);
  EXPECT_NEAR(std::abs(dec->terms[0].alpha - 1 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_EQ(dec->terms[1].relation, 11u);
  EXPECT_EQ(dec->terms[1].anchor, 3u);
  EXPECT_NEAR(std::abs(dec->terms[1].alpha - std::polar(1 / std::sqrt(2.0), theta)), 0.0, 1e-15);
  // Relative to particle 1: (|a+b> + e^{i theta}|-a-b>)/sqrt2 on particle 2.
  const AlignedForm f = align_to(psi, 1);
  const SpaceLabel one = psi.space().with_particles(1);
  StateVector expect = StateVector::zero(one);
  expect.amplitudes()[5] = 1 / std::sqrt(2.0);
  expect.amplitudes()[11] = std::polar(1 / std::sqrt(2.0), theta);
  EXPECT_LT(max_abs_diff(f.reduced_state, expect), 1e-15);
}

TEST(Alignment, FixedPointAndCanon) {
  Rng rng = make_rng(1, "alignment.fixed");
  const SpaceLabel r(GroupSpec({2, 3}), 2);
  StateVector phi = random_state(r, rng);
  const AlignedForm f = align_to(embed_at(phi, 2), 2);
  EXPECT_LT(phase_distance(f.reduced_state, phi), 1e-14);
  // First nonzero amplitude is real and positive.
  for (std::size_t a = 0; a < r.dim(); ++a) {
    if (std::abs(f.reduced_state[a]) > kSupportThreshold) {
      EXPECT_GT(f.reduced_state[a].real(), 0);
      EXPECT_NEAR(f.reduced_state[a].imag(), 0.0, 1e-15);
      break;
    }
  }
  EXPECT_LT(max_abs_diff(reconstruct(f), embed_at(phi, 2)), 1e-14);
}

TEST(Alignment, ChangeOfFrame) {
  Rng rng = make_rng(2, "alignment.frame");
  const SpaceLabel s(GroupSpec({5}), 3);
  for (int t = 0; t < 5; ++t) {
    const StateVector psi = random_alignable_state(s, rng);
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        const StateVector via_j = qrf_transform(j, i, s).V * align_to(psi, j).reduced_state;
        EXPECT_LT(phase_distance(via_j, align_to(psi, i).reduced_state), 1e-12);
      }
    }
  }
}

TEST(Alignment, ObservableAlignment) {
  Rng rng = make_rng(3, "alignment.observable");
  const SpaceLabel s(GroupSpec({3}), 3);
  const SpaceLabel r = s.with_particles(2);
  const Operator B = random_operator(r, rng);
  const Operator A = pin_site(B, 1, 0);
  auto back = align_observable(A, 1, 1e-12);
  ASSERT_TRUE(back);
  EXPECT_LT(max_abs_diff(*back, B), 1e-15);
  const SymmetryElement u = random_symmetry(s, rng);
  back = align_observable(u.conjugate(A), 1, 1e-12);
  ASSERT_TRUE(back);
  EXPECT_LT(max_abs_diff(*back, B), 1e-14);
  EXPECT_FALSE(align_observable(physical_projector(s), 1, 1e-12));
}

TEST(AlignmentProperty, Uniqueness) {
  Rng rng = make_rng(4, "alignment.unique");
  const SpaceLabel s(GroupSpec({4}), 3);
  for (int t = 0; t < 10; ++t) {
    const StateVector psi = random_alignable_state(s, rng);
    const StateVector moved = random_symmetry(s, rng, true).apply(psi);
    for (int i = 1; i <= 3; ++i) {
      EXPECT_EQ(max_abs_diff(align_to(psi, i).reduced_state, align_to(psi, i).reduced_state), 0.0);
      EXPECT_LT(max_abs_diff(align_to(moved, i).reduced_state, align_to(psi, i).reduced_state), 1e-12);
    }
  }
}

TEST(AlignmentProperty, ProjectionFormula) {
  Rng rng = make_rng(5, "alignment.projection");
  const SpaceLabel s(GroupSpec({2, 2}), 2);
  const double n = 4;
  for (int t = 0; t < 10; ++t) {
    const StateVector psi = random_alignable_state(s, rng);
    const auto dec = decompose_alignable(psi);
    ASSERT_TRUE(dec);
    Operator expect = Operator::zero(s);
    for (const auto& x : dec->terms) {
      for (const auto& y : dec->terms) {
        Operator hj = outer(sector_state(s, x.relation, 0), sector_state(s, y.relation, 0));
        expect += (x.alpha * std::conj(y.alpha) / n) * hj;
      }
      expect += (std::norm(x.alpha) / n) * nontrivial_projector(s, x.relation);
    }
    EXPECT_LT(max_abs_diff(project_inv(density(psi)), expect), 1e-10);
    const Mat P = oracle::physical_projector({2, 2}, 2);
    EXPECT_NEAR(std::abs(psi.amplitudes().dot(P * psi.amplitudes()) - 1 / n), 0.0, 1e-12);
  }
}

TEST(AlignmentProperty, EquivalenceNotions) {
  Rng rng = make_rng(6, "alignment.equivalence");
  const SpaceLabel s(GroupSpec({5}), 2);
  for (int t = 0; t < 10; ++t) {
    const StateVector psi = random_alignable_state(s, rng, 0.6);
    const StateVector same = random_symmetry(s, rng, true).apply(psi);
    EXPECT_TRUE(symmetry_equivalent_alignable(psi, same, 1e-10));
    EXPECT_TRUE(observationally_equivalent(density(psi), density(same), 1e-10));
    const StateVector other = random_alignable_state(s, rng, 0.6);
    EXPECT_EQ(symmetry_equivalent_alignable(psi, other, 1e-10),
              observationally_equivalent(density(psi), density(other), 1e-10));
  }
  // Changing one |alpha_h| breaks both notions.
  StateVector a = StateVector::zero(s), b = StateVector::zero(s);
  a.amplitudes()[1] = a.amplitudes()[2] = 1 / std::sqrt(2.0);
  b.amplitudes()[1] = std::sqrt(0.3);
  b.amplitudes()[2] = std::sqrt(0.7);
  EXPECT_FALSE(symmetry_equivalent_alignable(a, b, 1e-10));
  EXPECT_FALSE(observationally_equivalent(density(a), density(b), 1e-10));
}

TEST(AlignmentProperty, RelationalObservableIsomorphism) {
  Rng rng = make_rng(7, "alignment.iso");
  const SpaceLabel s(GroupSpec({5}), 3);
  const SpaceLabel r = s.with_particles(2);
  for (int t = 0; t < 5; ++t) {
    const Operator A = random_operator(r, rng), B = random_operator(r, rng);
    const cplx c(0.3, -1.2);
    for (int i = 1; i <= 3; ++i) {
      const Operator FA = relational_observable(A, i), FB = relational_observable(B, i);
      EXPECT_LT(max_abs_diff(relational_observable(A * B, i), FA * FB), 1e-10);
      EXPECT_LT(max_abs_diff(relational_observable(A.adjoint(), i), FA.adjoint()), 1e-10);
      EXPECT_LT(max_abs_diff(relational_observable(A + c * B, i), FA + c * FB), 1e-10);
      for (int j = 1; j <= 3; ++j) {
        const Operator& V = qrf_transform(i, j, s).V;
        EXPECT_LT(max_abs_diff(FA, relational_observable(V * A * V.adjoint(), j)), 1e-10);
      }
    }
  }
}
