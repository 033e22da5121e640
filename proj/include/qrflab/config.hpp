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

#include <stdexcept>
#include <string>

namespace qrf {

/// Raised when inputs do not fit together (wrong lengths, mismatched spaces).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input is well formed but outside the domain of an
/// operation, e.g. a non-alignable state passed to align_to.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a documented example is requested on a group it is not
/// defined for (center of mass on a multi-factor group).
class UnsupportedError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline constexpr double kDefaultTolerance = 1e-10;

/// Shared comparison tolerance. Starts at QRFLAB_EPS if that variable is
/// set and parses as a positive number, otherwise at kDefaultTolerance.
double tolerance();
void set_tolerance(double eps);

}  // namespace qrf
