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

/// @file traces.hpp
/// Embeddings of N-particle invariant observables into N+M particles and
/// their Hilbert-Schmidt adjoints (invariant and relational traces).
///
/// Relations on N+M particles are (h, g) with h in G^{N-1} and g in G^M,
/// all taken relative to particle 1.

#include <optional>
#include <string>
#include <vector>

#include "qrflab/symmetry.hpp"

namespace qrf {

enum class EmbeddingKind { PARTICLE, CENTER_OF_MASS, CUSTOM, RELATIONAL };

struct EmbeddingSpec {
  EmbeddingKind kind = EmbeddingKind::PARTICLE;
  int N = 1;
  int M = 1;
  int particle = 1;             ///< PARTICLE(i)
  std::vector<double> masses;   ///< CENTER_OF_MASS, one per kept particle
  std::optional<SymmetryElement> custom;  ///< CUSTOM, acts on the N kept particles

  static EmbeddingSpec particle_frame(int N, int M, int i);
  static EmbeddingSpec center_of_mass(int N, int M, std::vector<double> masses);
  static EmbeddingSpec custom_frame(int M, SymmetryElement u);
  static EmbeddingSpec relational(int N, int M);

  /// The N-particle symmetry element defining the embedding. Not defined
  /// for RELATIONAL.
  SymmetryElement symmetry(const GroupSpec& group) const;
  std::string label() const;
};

enum class Membership { Strict, Project };

/// Phi^U. In Strict mode a non-member of A_alg raises DomainError; in
/// Project mode the input is first projected onto A_alg.
Operator embed_invariant(const EmbeddingSpec& spec, const Operator& A,
                         Membership mode = Membership::Strict);
/// A (x) Pi_phys^{(M)} for A in A_phys; Project mode projects onto A_phys first.
Operator embed_relational(const Operator& A, int M, Membership mode = Membership::Strict);
/// Dispatch on spec.kind.
Operator embed(const EmbeddingSpec& spec, const Operator& A, Membership mode = Membership::Strict);

/// Trinv^U, closed form. Accepts any operator on N+M particles.
Operator trinv(const EmbeddingSpec& spec, const Operator& rho);
Operator trinv(const EmbeddingSpec& spec, const StateVector& psi);

/// Tr_M[(Pi^N (x) Pi^M) rho (Pi^N (x) Pi^M)].
Operator trel(const Operator& rho, int M);
Operator trel(const StateVector& psi, int M);
/// Same map computed with dense projectors; slow, used for cross-checks.
Operator trel_dense(const Operator& rho, int M);

/// Dispatch on spec.kind: trinv or trel.
Operator trace_out(const EmbeddingSpec& spec, const Operator& rho);
Operator trace_out(const EmbeddingSpec& spec, const StateVector& psi);

/// tr(rho Pi_phys).
double relational_weight(const Operator& rho);
double relational_weight(const StateVector& psi);

/// trel(rho) / tr(rho Pi_phys). Throws DomainError if the weight is below `eps`.
Operator conditional_state(const Operator& rho, int M, double eps);
Operator conditional_state(const StateVector& psi, int M, double eps);

/// Pi_alg(A (x) 1^{(M)}).
Operator naive_embedding(const Operator& A, int M);

struct NaiveCounterexample {
  Operator A;
  Operator B;
  double defect;  ///< Frobenius norm of naive(AB) - naive(A) naive(B)
};

/// A = |h;1><j;1|, B = |j;1><h;1| for the first two relation tuples.
NaiveCounterexample naive_physical_embedding_counterexample(const GroupSpec& group, int N, int M);

}  // namespace qrf
