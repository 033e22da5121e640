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

#pragma once

/// @file sectors.hpp
/// Relation sectors H_h and the character basis |h;chi>.
///
/// Relations are always taken relative to particle 1: h_k = g_{k+1} g_1^{-1}.
/// A relation tuple is indexed in mixed radix with h_1 most significant, and
/// the sector basis is ordered by (relation index, character index).

#include <memory>
#include <vector>

#include "qrflab/hilbert.hpp"

namespace qrf {

struct RelationTuple {
  std::vector<GroupElement> relations;
  bool operator==(const RelationTuple& o) const { return relations == o.relations; }
};

RelationTuple relation_of(const std::vector<GroupElement>& config);
std::size_t relation_index(const SpaceLabel& space, const RelationTuple& h);
RelationTuple relation_tuple(const SpaceLabel& space, std::size_t index);

/// Index tables for one space, shared through a process-wide cache.
class SectorBasis {
 public:
  static std::shared_ptr<const SectorBasis> of(const SpaceLabel& space);

  explicit SectorBasis(const SpaceLabel& space);

  const SpaceLabel& space() const { return space_; }
  std::size_t order() const { return n_; }
  std::size_t relations() const { return relations_; }

  /// Basis index of |g, h g> for relation index r and element index g.
  std::size_t member(std::size_t r, std::size_t g) const { return member_[r * n_ + g]; }
  std::size_t relation_at(std::size_t basis) const { return relation_[basis]; }
  /// Element held by particle 1 in basis state `basis`.
  std::size_t anchor_at(std::size_t basis) const { return anchor_[basis]; }
  /// Element index of h_k (k = 1..N-1) in relation index r; h_0 is the identity.
  std::size_t relation_digit(std::size_t r, int k) const;
  /// Relation index with the listed relation element indices h_1..h_{N-1}.
  std::size_t relation_from_digits(const std::vector<std::size_t>& h) const;

  /// <|g, h g>| h;chi_k> = chi_k(g^{-1}) / sqrt|G|.
  cplx amplitude(std::size_t k, std::size_t g) const;

  /// Basis index of the global translate U_g^{(x)N} |basis>.
  std::size_t translate(std::size_t basis, std::size_t g) const;

 private:
  SpaceLabel space_;
  std::size_t n_;
  std::size_t relations_;
  std::vector<std::size_t> member_;
  std::vector<std::size_t> relation_;
  std::vector<std::size_t> anchor_;
  double inv_sqrt_n_;
};

StateVector sector_state(const SpaceLabel& space, const RelationTuple& h, const Character& chi);
StateVector sector_state(const SpaceLabel& space, std::size_t r, std::size_t k);
Operator sector_projector(const SpaceLabel& space, const RelationTuple& h);
Operator sector_projector(const SpaceLabel& space, std::size_t r);

/// U_g^{(x)N}.
Operator global_translation(const SpaceLabel& space, std::size_t g);

/// (1/|G|) sum_g U_g^{(x)N}.
Operator physical_projector(const SpaceLabel& space);
/// sum_h |h;1><h;1|, built from the sector tables.
Operator physical_projector_from_sectors(const SpaceLabel& space);
/// Projector onto the span of |h;chi> with chi nontrivial, for one relation index.
Operator nontrivial_projector(const SpaceLabel& space, std::size_t r);

/// Columns are |h;chi> in (relation, character) order.
Operator change_of_basis(const SpaceLabel& space);

// Structured helpers. All run in O(dim^2) or better.

/// R(h, j) = <h;1| rho |j;1>.
Mat relational_block(const Operator& rho);
/// w(h) = <h;1|psi>.
Vec relational_amplitudes(const StateVector& psi);
/// sum_{h,j} R(h, j) |h;1><j;1|.
Operator from_relational_block(const SpaceLabel& space, const Mat& R);
/// Adds sum_h c(h) Pi_{h;chi!=1} to `op`.
void add_nontrivial(Operator& op, const Vec& c);
/// tr(Pi_{h;chi!=1} rho) per relation index.
Vec nontrivial_weights(const Operator& rho);
/// Same quantity for |psi><psi|.
Vec nontrivial_weights(const StateVector& psi);
/// D(r, k) = <h_r;chi_k| rho |h_r;chi_k>.
Mat sector_diagonal(const Operator& rho);

}  // namespace qrf
