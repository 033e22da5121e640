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

/// @file random.hpp
/// Seeded samplers for states, operators and symmetry elements.

#include <cstdint>
#include <random>

#include "qrflab/symmetry.hpp"

namespace qrf {

using Rng = std::mt19937_64;

/// Derives an independent stream from a base seed and a label.
Rng make_rng(std::uint64_t seed, std::string_view label);

/// Entries with i.i.d. standard normal real and imaginary parts.
Operator random_operator(const SpaceLabel& space, Rng& rng);
Operator random_hermitian(const SpaceLabel& space, Rng& rng);
/// X X^dagger / tr(X X^dagger).
Operator random_density(const SpaceLabel& space, Rng& rng);
/// Unit-norm Gaussian vector.
StateVector random_state(const SpaceLabel& space, Rng& rng);
/// Haar-distributed unitary.
Operator random_unitary(const SpaceLabel& space, Rng& rng);
SymmetryElement random_symmetry(const SpaceLabel& space, Rng& rng, bool with_phase = false);
/// Unit-norm state with at most one configuration per sector; each sector
/// is occupied with probability `fill` (at least one always is).
StateVector random_alignable_state(const SpaceLabel& space, Rng& rng, double fill = 0.5);

}  // namespace qrf
