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

/// @file alignment.hpp
/// Alignable states (at most one classical configuration per relation
/// sector), their aligned representatives, and alignable observables.

#include <optional>
#include <vector>

#include "qrflab/hilbert.hpp"

namespace qrf {

inline constexpr double kSupportThreshold = 1e-12;

struct AlignableTerm {
  std::size_t relation;  ///< relation index h
  cplx alpha;            ///< amplitude alpha_h
  std::size_t anchor;    ///< element index g_h held by particle 1
};

struct AlignableDecomposition {
  std::vector<AlignableTerm> terms;  ///< occupied sectors, increasing relation index
};

/// Empty when some sector holds more than one configuration.
std::optional<AlignableDecomposition> decompose_alignable(const StateVector& psi,
                                                          double threshold = kSupportThreshold);

struct AlignedForm {
  int reference_particle;
  StateVector reduced_state;  ///< first nonzero amplitude is real and positive
  double global_phase;        ///< phase removed by the canonicalization
};

/// Throws DomainError on non-alignable input.
AlignedForm align_to(const StateVector& psi, int i);

/// e^{i global_phase} |e>_i (x) phi.
StateVector reconstruct(const AlignedForm& form, bool with_phase = true);

/// Returns A_i such that U A U^dagger = |e><e|_i (x) A_i for some symmetry
/// element U, or empty if no such U exists.
std::optional<Operator> align_observable(const Operator& A, int i, double eps);

}  // namespace qrf
