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

/// @file paradox.hpp
/// The third-particle scenario on Z_n:
///   psi = (|-a>|b> + e^{i theta}|a>|-b>) / sqrt 2,  Psi = psi (x) |c>,
/// and its 1-aligned form Psi'.

#include <string>
#include <utility>
#include <vector>

#include "qrflab/hilbert.hpp"

namespace qrf {

struct ParadoxConfig {
  int n = 16;
  int a = 3;
  int b = 2;
  int c = 5;
  double theta = 0.0;
  double m1 = 2.0;
  double m2 = 3.0;

  /// Masses (b, a), so that m1 a = m2 b.
  static ParadoxConfig with_default_masses(int n, int a, int b, int c, double theta);

  /// Throws DomainError on invalid parameters.
  void validate() const;
  bool masses_balanced() const;
  ParadoxConfig with_theta(double t) const;
  SpaceLabel space(int particles) const;
};

StateVector build_two_particle_state(const ParadoxConfig& cfg);
/// (Psi, Psi').
std::pair<StateVector, StateVector> build_three_particle_state(const ParadoxConfig& cfg);

/// T |g1, g2> = |g1 - 2a, g2 + 2b>.
Operator angelo_T(const ParadoxConfig& cfg);
cplx angelo_T_expectation(const ParadoxConfig& cfg);

/// 2(a+b) = 0 mod n: both branches of psi fall into one relation sector.
bool branches_share_sector(const ParadoxConfig& cfg);
/// 4a = 0 and 4b = 0 mod n: cross terms spoil <psi|T|psi> = e^{i theta}/2.
bool angelo_cross_terms(const ParadoxConfig& cfg);

struct MethodResult {
  std::string name;
  Operator at_theta;
  Operator at_zero;
  double theta_difference;  ///< Frobenius norm of at_theta - at_zero
  bool theta_visible;
  /// Frobenius norm of the difference between the outputs for Psi and Psi'.
  double frame_difference;
};

struct ParadoxReport {
  ParadoxConfig config;
  std::vector<MethodResult> methods;  ///< standard, trinv1, com, trel, conditional
  double relational_weight;
  double conditional_trace;
  cplx angelo_expectation;
  bool branches_share_sector;
  bool angelo_cross_terms;
  bool masses_balanced;
  bool matches_expected;  ///< standard/trinv1 lose theta, com/trel keep it
  double runtime_seconds;

  const MethodResult& method(const std::string& name) const;
};

inline constexpr double kThetaVisibleThreshold = 1e-6;

ParadoxReport run_paradox(const ParadoxConfig& cfg);

}  // namespace qrf
