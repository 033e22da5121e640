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

/// @file symmetry.hpp
/// Relation-conditional global translations: each sector H_h is translated
/// globally by its own element g_h, optionally times a global phase.

#include <optional>
#include <vector>

#include "qrflab/sectors.hpp"

namespace qrf {

class SymmetryElement {
 public:
  /// `assignment[r]` is the element index g_h for relation index r.
  SymmetryElement(SpaceLabel space, std::vector<std::size_t> assignment, double phase = 0.0);

  static SymmetryElement identity(const SpaceLabel& space);
  /// Constant assignment: the global translation U_g^{(x)N}.
  static SymmetryElement translation(const SpaceLabel& space, std::size_t g);

  const SpaceLabel& space() const { return space_; }
  const std::vector<std::size_t>& assignment() const { return assignment_; }
  double phase() const { return phase_; }
  GroupElement at(const RelationTuple& h) const;

  /// Basis index that |basis> is mapped to.
  std::size_t image(std::size_t basis) const;

  StateVector apply(const StateVector& psi) const;
  /// U rho U^dagger.
  Operator conjugate(const Operator& rho) const;
  Operator materialize() const;

 private:
  SpaceLabel space_;
  std::vector<std::size_t> assignment_;
  double phase_;
  std::shared_ptr<const SectorBasis> sb_;
};

/// Pointwise product of the assignments; phases add.
SymmetryElement compose(const SymmetryElement& u, const SymmetryElement& v);
SymmetryElement inverse(const SymmetryElement& u);
StateVector apply_symmetry(const SymmetryElement& u, const StateVector& psi);

/// Equal induced operators up to a global phase.
bool equal_mod_phase(const SymmetryElement& u, const SymmetryElement& v);

/// Recovers the assignment (and phase) if `candidate` is induced by a
/// symmetry element up to a global phase.
std::optional<SymmetryElement> is_in_usym(const Operator& candidate, double eps);

struct QrfTransform {
  int from_particle;
  int to_particle;
  /// (N-1)-particle unitary V_{i->j}.
  Operator V;
  /// The N-particle element with |e>_i (x) phi -> |e>_j (x) V phi.
  SymmetryElement U;
};

/// Particles are 1-based.
QrfTransform qrf_transform(int i, int j, const SpaceLabel& space);
SymmetryElement qrf_symmetry(int i, int j, const SpaceLabel& space);

/// Center-of-mass element on Z_n: g(h) = -floor((m_2 h_1 + ... + m_N h_{N-1}) / m).
/// Relations enter through their centered representatives in (-n/2, n/2].
SymmetryElement center_of_mass_symmetry(const std::vector<double>& masses, const SpaceLabel& space);

/// Centered representative of v in Z_n, in (-n/2, n/2].
long long centered_representative(std::size_t v, std::size_t n);

/// Number of elements of U_sym without phases, or 0 if it exceeds `limit`.
std::size_t usym_size(const SpaceLabel& space, std::size_t limit);
/// Every element of U_sym (phase 0). Throws DomainError above `limit`.
std::vector<SymmetryElement> enumerate_usym(const SpaceLabel& space, std::size_t limit);

}  // namespace qrf
