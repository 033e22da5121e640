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

/// @file io.hpp
/// JSON schemas for groups, spaces, states, operators and reports.
///
///   group:    {"moduli": [2, 3]}     (the string form "Z2xZ3" is also read)
///   space:    {"group": <group>, "particles": N}
///   state:    {"space": <space>, "data": [[re, im], ...]}
///   operator: same as state, data row-major with dim^2 entries
///
/// Doubles are written in shortest round-trip form, so reading back is exact.

#include <string>

#include "json.hpp"
#include "qrflab/alignment.hpp"
#include "qrflab/paradox.hpp"
#include "qrflab/symmetry.hpp"

namespace qrf {

using json = nlohmann::json;

json to_json(const GroupSpec& g);
json to_json(const SpaceLabel& s);
json to_json(const StateVector& psi);
json to_json(const Operator& op);
json to_json(const SymmetryElement& u);
json to_json(const AlignedForm& form);
json to_json(const AlignableDecomposition& dec, const SpaceLabel& space);
json to_json(const ParadoxReport& report, bool include_operators = true);

GroupSpec group_from_json(const json& j);
SpaceLabel space_from_json(const json& j);
StateVector state_from_json(const json& j);
Operator operator_from_json(const json& j);
SymmetryElement symmetry_from_json(const json& j);

/// Reads a file; "-" reads standard input.
json read_json_file(const std::string& path);
/// Writes with a trailing newline; "-" writes standard output.
void write_json_file(const std::string& path, const json& j);

}  // namespace qrf
