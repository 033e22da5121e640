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

/// @file verify.hpp
/// Property-check runner behind `qrflab verify`.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrflab/hilbert.hpp"

namespace qrf {

struct CheckResult {
  std::string name;       ///< "<module>.<property>"
  std::string reference;  ///< statement being checked
  bool passed = false;
  bool skipped = false;   ///< not applicable to this (G, N)
  double max_deviation = 0;
  double threshold = 0;
  double runtime_ms = 0;
  std::string note;
};

struct SuiteResult {
  std::string group;
  int particles = 0;
  std::string selector;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;  ///< sorted by name
  double runtime_seconds = 0;

  bool all_passed() const;
};

struct SuiteOptions {
  std::string selector = "all";
  std::uint64_t seed = 1;
  std::size_t max_dim = 4096;
  unsigned workers = 1;
  std::ostream* progress = nullptr;
};

/// all, group, hilbert, sectors, symmetry, invariants, alignment, traces,
/// paradox, cli, bruteforce.
const std::vector<std::string>& suite_selectors();

/// Throws DomainError when |G|^N exceeds opts.max_dim and StructuralError
/// on an unknown selector.
SuiteResult run_suite(const GroupSpec& group, int particles, const SuiteOptions& opts);

/// Average of U rho U^dagger over every element of U_sym. Throws DomainError
/// if U_sym has more than `limit` elements.
Operator literal_usym_twirl(const Operator& rho, std::size_t limit = 10000);

nlohmann::json to_json(const SuiteResult& result);

}  // namespace qrf
