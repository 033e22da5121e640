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

/// @file invariants.hpp
/// The nested invariant algebras A_phys < A_alg < A_inv < A'_inv and their
/// Hilbert-Schmidt orthogonal projections.

#include <optional>
#include <string>

#include "qrflab/hilbert.hpp"

namespace qrf {

enum class AlgebraTag { PHYS, ALG, INV, INV_PRIME, NONE };

std::string to_string(AlgebraTag tag);

/// Pi_phys rho Pi_phys.
Operator project_phys(const Operator& rho);
/// Orthogonal projection onto the U_sym-invariant algebra (closed form).
Operator project_inv(const Operator& rho);
/// (1/|G|) sum_g U_g rho U_g^dagger.
Operator project_inv_prime(const Operator& rho);
/// Orthogonal projection onto A_alg: A_phys plus span{Pi_{h;chi!=1}}.
Operator project_alg(const Operator& rho);

Operator project(const Operator& rho, AlgebraTag tag);
/// Fixed-point test of the projection for `tag`.
bool in_algebra(const Operator& op, AlgebraTag tag, double eps);
/// Finest tag whose algebra contains `op`, or NONE.
AlgebraTag classify(const Operator& op, double eps);

/// F_{A,i} = |G| Pi_phys (|e><e|_i (x) A) Pi_phys for A on N-1 particles.
Operator relational_observable(const Operator& A, int i);

bool observationally_equivalent(const Operator& rho, const Operator& sigma, double eps);

/// Both states must be alignable; throws DomainError otherwise.
bool symmetry_equivalent_alignable(const StateVector& psi, const StateVector& phi, double eps);

/// |h;chi><j;chi| with h != j and chi nontrivial: in A'_inv, not in A_inv.
Operator witness_inv_prime_not_inv(const SpaceLabel& space);
/// Non-uniform diagonal over the nontrivial characters of one sector: in
/// A_inv, not in A_alg. Needs |G| >= 3; empty otherwise.
std::optional<Operator> witness_inv_not_alg(const SpaceLabel& space);
/// Pi_{h;chi!=1}: in A_alg, not in A_phys.
Operator witness_alg_not_phys(const SpaceLabel& space);

}  // namespace qrf
