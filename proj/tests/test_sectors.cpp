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

#include "oracles.hpp"
#include "qrflab/config.hpp"
#include "qrflab/random.hpp"
#include "qrflab/sectors.hpp"

using namespace qrf;

namespace {

struct Case {
  std::vector<int> moduli;
  int N;
};

const std::vector<Case> kCases = {{{2}, 2}, {{6}, 2}, {{3}, 3}, {{2, 3}, 2}, {{4}, 3}, {{2, 2}, 3}};

// Relation tuple of index r as residues, h_1 most significant.
oracle::Config relation_residues(const std::vector<int>& m, int N, std::size_t r) {
  return oracle::configuration(m, N - 1, r);
}

}  // namespace

TEST(Sectors, RelationOfExamples) {
  const GroupSpec z6({6});
  const auto h = relation_of({z6.element(2), z6.element(3), z6.element(4)});
  ASSERT_EQ(h.relations.size(), 2u);
  EXPECT_EQ(h.relations[0], z6.element(1));
  EXPECT_EQ(h.relations[1], z6.element(2));
  const GroupSpec z16({16});
  const auto p = relation_of({GroupElement(z16, {-3}), GroupElement(z16, {2})});
  EXPECT_EQ(p.relations[0], z16.element(5));
}

TEST(Sectors, RelationTranslationInvariant) {
  const GroupSpec G({2, 3});
  Rng rng = make_rng(1, "sectors.relation");
  std::uniform_int_distribution<std::size_t> pick(0, G.order() - 1);
  for (int t = 0; t < 100; ++t) {
    std::vector<GroupElement> c{G.element(pick(rng)), G.element(pick(rng)), G.element(pick(rng))};
    const auto g = G.element(pick(rng));
    std::vector<GroupElement> moved;
    for (const auto& x : c) moved.push_back(compose(g, x));
    EXPECT_EQ(relation_of(c), relation_of(moved));
  }
}

TEST(Sectors, RelationIndexRoundTrip) {
  const SpaceLabel s(GroupSpec({2, 3}), 3);
  for (std::size_t r = 0; r < 36; ++r) EXPECT_EQ(relation_index(s, relation_tuple(s, r)), r);
}

TEST(Sectors, TwoParticleZ2State) {
  const SpaceLabel s(GroupSpec({2}), 2);
  const StateVector v = sector_state(s, 0, 0);
  const double r = 1 / std::sqrt(2.0);
  Vec expect(4);
  expect << r, 0, 0, r;
  EXPECT_LT(oracle::max_diff(v.amplitudes(), expect), 1e-15);
}

TEST(Sectors, SectorStatesMatchOracle) {
  for (const auto& c : kCases) {
    const SpaceLabel s(GroupSpec(c.moduli), c.N);
    const std::size_t n = s.local_dim();
    for (std::size_t r = 0; r < s.dim() / n; ++r) {
      for (std::size_t k = 0; k < n; ++k) {
        const Vec expect = oracle::sector_state(c.moduli, relation_residues(c.moduli, c.N, r),
                                                oracle::residues(c.moduli, k));
        EXPECT_LT(oracle::max_diff(sector_state(s, r, k).amplitudes(), expect), 1e-14);
        const RelationTuple h = relation_tuple(s, r);
        EXPECT_LT(oracle::max_diff(sector_state(s, h, s.group().character(k)).amplitudes(), expect), 1e-14);
      }
    }
  }
}

TEST(Sectors, OrthonormalBasis) {
  for (const auto& c : kCases) {
    const SpaceLabel s(GroupSpec(c.moduli), c.N);
    const Mat W = change_of_basis(s).matrix();
    EXPECT_LT(oracle::max_diff(Mat(W.adjoint() * W), Mat::Identity(W.rows(), W.cols())), 1e-12);
  }
}

TEST(Sectors, Projectors) {
  const SpaceLabel s(GroupSpec({3}), 3);
  Operator sum = Operator::zero(s);
  for (std::size_t r = 0; r < 9; ++r) {
    const Operator P = sector_projector(s, r);
    EXPECT_TRUE(P.is_projector(1e-12));
    EXPECT_NEAR(std::abs(P.trace() - 3.0), 0.0, 1e-12);
    for (std::size_t q = 0; q < 9; ++q) {
      if (q != r) EXPECT_LT(frobenius_norm(P * sector_projector(s, q)), 1e-14);
    }
    sum += P;
  }
  EXPECT_LT(max_abs_diff(sum, Operator::identity(s)), 1e-14);
}

TEST(Sectors, PhysicalProjectorMatchesOracle) {
  for (const auto& c : kCases) {
    const SpaceLabel s(GroupSpec(c.moduli), c.N);
    const Mat expect = oracle::physical_projector(c.moduli, c.N);
    EXPECT_LT(oracle::max_diff(physical_projector(s).matrix(), expect), 1e-14);
    EXPECT_LT(oracle::max_diff(physical_projector_from_sectors(s).matrix(), expect), 1e-14);
  }
  EXPECT_NEAR(std::abs(physical_projector(SpaceLabel(GroupSpec({8}), 3)).trace() - 64.0), 0.0, 1e-9);
}

TEST(Sectors, PhysicalProjectorActions) {
  const SpaceLabel s(GroupSpec({5}), 2);
  const Operator P = physical_projector(s);
  const StateVector h1 = sector_state(s, 3, 0);
  EXPECT_LT(max_abs_diff(P * h1, h1), 1e-14);
  // |g, h g> projects to |h;1>/sqrt|G|.
  StateVector expect = h1;
  expect.amplitudes() /= std::sqrt(5.0);
  EXPECT_LT(max_abs_diff(P * StateVector::basis(s, basis_index(s, std::vector<std::size_t>{2, 0})), expect), 1e-14);
}

TEST(Sectors, GlobalTranslationMatchesOracle) {
  const std::vector<int> m{2, 3};
  const SpaceLabel s(GroupSpec(m), 2);
  for (std::size_t g = 0; g < 6; ++g) {
    EXPECT_EQ(oracle::max_diff(global_translation(s, g).matrix(),
                               oracle::global_translation(m, 2, oracle::residues(m, g))),
              0.0);
  }
}

TEST(Sectors, StructuredBlocks) {
  Rng rng = make_rng(2, "sectors.blocks");
  const SpaceLabel s(GroupSpec({2, 2}), 3);
  const Operator rho = random_operator(s, rng);
  const Mat R = relational_block(rho);
  for (Eigen::Index h = 0; h < R.rows(); ++h) {
    for (Eigen::Index j = 0; j < R.cols(); ++j) {
      const cplx expect = inner(sector_state(s, static_cast<std::size_t>(h), 0),
                                rho * sector_state(s, static_cast<std::size_t>(j), 0));
      EXPECT_NEAR(std::abs(R(h, j) - expect), 0.0, 1e-13);
    }
  }
  // from_relational_block inverts relational_block on A_phys.
  const Operator back = from_relational_block(s, R);
  EXPECT_LT(oracle::max_diff(relational_block(back), R), 1e-13);
  const Operator P = physical_projector(s);
  EXPECT_LT(max_abs_diff(back, P * rho * P), 1e-13);

  const Vec w = nontrivial_weights(rho);
  for (std::size_t r = 0; r < 16; ++r) {
    const cplx expect = (nontrivial_projector(s, r) * rho).trace();
    EXPECT_NEAR(std::abs(w[static_cast<Eigen::Index>(r)] - expect), 0.0, 1e-13);
  }
  const StateVector psi = random_state(s, rng);
  EXPECT_LT(oracle::max_diff(nontrivial_weights(psi), nontrivial_weights(density(psi))), 1e-14);
}

TEST(Sectors, NontrivialProjector) {
  const SpaceLabel s(GroupSpec({4}), 2);
  for (std::size_t r = 0; r < 4; ++r) {
    const Operator expect = sector_projector(s, r) - density(sector_state(s, r, 0));
    EXPECT_LT(max_abs_diff(nontrivial_projector(s, r), expect), 1e-14);
    Operator z = Operator::zero(s);
    Vec c = Vec::Zero(4);
    c[static_cast<Eigen::Index>(r)] = 2.0;
    add_nontrivial(z, c);
    EXPECT_LT(max_abs_diff(z, 2.0 * expect), 1e-14);
  }
}

TEST(SectorsProperty, Eigenbasis) {
  for (const auto& c : kCases) {
    const SpaceLabel s(GroupSpec(c.moduli), c.N);
    const std::size_t n = s.local_dim();
    for (std::size_t g = 0; g < n; ++g) {
      const Mat U = oracle::global_translation(c.moduli, c.N, oracle::residues(c.moduli, g));
      for (std::size_t r = 0; r < s.dim() / n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
          const Vec v = sector_state(s, r, k).amplitudes();
          EXPECT_LT(oracle::max_diff(Vec(U * v), Vec(s.group().chi(k, g) * v)), 1e-12);
        }
      }
    }
  }
}

TEST(SectorsProperty, ProjectorFactorization) {
  const std::vector<int> m{3};
  for (int Nk = 1; Nk <= 2; ++Nk) {
    const int M = 3 - Nk;
    const Mat lhs = oracle::kron(oracle::physical_projector(m, Nk),
                                 Mat::Identity(static_cast<Eigen::Index>(oracle::dim(m, M)),
                                               static_cast<Eigen::Index>(oracle::dim(m, M)))) *
                    oracle::physical_projector(m, 3);
    const SpaceLabel s(GroupSpec(m), 3);
    const Operator rhs = tensor(physical_projector(s.with_particles(Nk)), physical_projector(s.with_particles(M)));
    EXPECT_LT(oracle::max_diff(lhs, rhs.matrix()), 1e-12);
  }
}

TEST(Sectors, RelationalAmplitudes) {
  Rng rng = make_rng(3, "sectors.amplitudes");
  const SpaceLabel s(GroupSpec({5}), 3);
  const StateVector psi = random_state(s, rng);
  const Vec a = relational_amplitudes(psi);
  for (std::size_t r = 0; r < 25; ++r) {
    EXPECT_NEAR(std::abs(a[static_cast<Eigen::Index>(r)] - inner(sector_state(s, r, 0), psi)), 0.0, 1e-14);
  }
}
