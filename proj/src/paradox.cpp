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

#include "qrflab/paradox.hpp"

#include <chrono>
#include <cmath>
#include <functional>

#include "qrflab/config.hpp"
#include "qrflab/traces.hpp"

namespace qrf {
namespace {

using Index = Eigen::Index;

std::size_t mod(long long v, int n) {
  long long r = v % n;
  return static_cast<std::size_t>(r < 0 ? r + n : r);
}

}  // namespace

ParadoxConfig ParadoxConfig::with_default_masses(int n, int a, int b, int c, double theta) {
  return ParadoxConfig{n, a, b, c, theta, static_cast<double>(b), static_cast<double>(a)};
}

void ParadoxConfig::validate() const {
  if (n < 2) throw DomainError("paradox: n must be at least 2");
  for (int v : {a, b, c}) {
    if (v < 0 || v >= n) throw DomainError("paradox: a, b, c must lie in [0, n)");
  }
  if (a == 0) throw DomainError("paradox: a must be nonzero");
  if (!std::isfinite(theta)) throw DomainError("paradox: theta must be finite");
  if (!(m1 > 0) || !(m2 > 0) || !std::isfinite(m1) || !std::isfinite(m2)) {
    throw DomainError("paradox: masses must be positive");
  }
}

bool ParadoxConfig::masses_balanced() const { return std::abs(m1 * a - m2 * b) < 1e-12 * (m1 * a + m2 * b); }

ParadoxConfig ParadoxConfig::with_theta(double t) const {
  ParadoxConfig out = *this;
  out.theta = t;
  return out;
}

SpaceLabel ParadoxConfig::space(int particles) const { return SpaceLabel(GroupSpec({n}), particles); }

StateVector build_two_particle_state(const ParadoxConfig& cfg) {
  cfg.validate();
  const SpaceLabel space = cfg.space(2);
  StateVector psi = StateVector::zero(space);
  const double s = 1.0 / std::sqrt(2.0);
  psi.amplitudes()[static_cast<Index>(basis_index(space, {mod(-cfg.a, cfg.n), mod(cfg.b, cfg.n)}))] += s;
  psi.amplitudes()[static_cast<Index>(basis_index(space, {mod(cfg.a, cfg.n), mod(-cfg.b, cfg.n)}))] +=
      s * std::polar(1.0, cfg.theta);
  return psi;
}

std::pair<StateVector, StateVector> build_three_particle_state(const ParadoxConfig& cfg) {
  cfg.validate();
  const SpaceLabel space = cfg.space(3);
  const StateVector psi = build_two_particle_state(cfg);
  const StateVector Psi = tensor(psi, StateVector::basis(cfg.space(1), mod(cfg.c, cfg.n)));
  StateVector Psi_prime = StateVector::zero(space);
  const double s = 1.0 / std::sqrt(2.0);
  const int a = cfg.a, b = cfg.b, c = cfg.c, n = cfg.n;
  Psi_prime.amplitudes()[static_cast<Index>(basis_index(space, {0, mod(a + b, n), mod(a + c, n)}))] += s;
  Psi_prime.amplitudes()[static_cast<Index>(basis_index(space, {0, mod(-a - b, n), mod(-a + c, n)}))] +=
      s * std::polar(1.0, cfg.theta);
  return {Psi, Psi_prime};
}

Operator angelo_T(const ParadoxConfig& cfg) {
  cfg.validate();
  const SpaceLabel space = cfg.space(2);
  Operator T = Operator::zero(space);
  for (int g1 = 0; g1 < cfg.n; ++g1) {
    for (int g2 = 0; g2 < cfg.n; ++g2) {
      const auto to = basis_index(space, {mod(g1 - 2LL * cfg.a, cfg.n), mod(g2 + 2LL * cfg.b, cfg.n)});
      const auto from = basis_index(space, {static_cast<std::size_t>(g1), static_cast<std::size_t>(g2)});
      T.matrix()(static_cast<Index>(to), static_cast<Index>(from)) = 1.0;
    }
  }
  return T;
}

cplx angelo_T_expectation(const ParadoxConfig& cfg) {
  const StateVector psi = build_two_particle_state(cfg);
  return inner(psi, angelo_T(cfg) * psi);
}

bool branches_share_sector(const ParadoxConfig& cfg) { return mod(2LL * (cfg.a + cfg.b), cfg.n) == 0; }

bool angelo_cross_terms(const ParadoxConfig& cfg) {
  return mod(4LL * cfg.a, cfg.n) == 0 && mod(4LL * cfg.b, cfg.n) == 0;
}

const MethodResult& ParadoxReport::method(const std::string& name) const {
  for (const auto& m : methods) {
    if (m.name == name) return m;
  }
  throw StructuralError("paradox report has no method '" + name + "'");
}

ParadoxReport run_paradox(const ParadoxConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto [Psi, Psi_prime] = build_three_particle_state(cfg);
  const auto [Psi0, Psi0_prime] = build_three_particle_state(cfg.with_theta(0.0));

  const EmbeddingSpec frame1 = EmbeddingSpec::particle_frame(2, 1, 1);
  const EmbeddingSpec com = EmbeddingSpec::center_of_mass(2, 1, {cfg.m1, cfg.m2});
  const double eps = tolerance();

  struct Method {
    std::string name;
    std::function<Operator(const StateVector&, const StateVector&)> run;  // (Psi, Psi')
  };
  const std::vector<Method> methods = {
      {"standard", [](const StateVector&, const StateVector& p) { return partial_trace_last(p, 1); }},
      {"trinv1", [&](const StateVector& s, const StateVector&) { return trinv(frame1, s); }},
      {"com", [&](const StateVector& s, const StateVector&) { return trinv(com, s); }},
      {"trel", [](const StateVector& s, const StateVector&) { return trel(s, 1); }},
      {"conditional", [&](const StateVector& s, const StateVector&) { return conditional_state(s, 1, eps); }},
  };

  ParadoxReport report{cfg, {}, 0, 0, 0, false, false, false, false, 0};
  for (const auto& m : methods) {
    Operator at_theta = m.run(Psi, Psi_prime);
    Operator at_zero = m.run(Psi0, Psi0_prime);
    const double diff = frobenius_norm(at_theta - at_zero);
    // Same method fed with the other frame's description of the state.
    const Operator swapped = m.run(Psi_prime, Psi);
    const double frame_diff = frobenius_norm(at_theta - swapped);
    report.methods.push_back(
        MethodResult{m.name, std::move(at_theta), std::move(at_zero), diff, diff > kThetaVisibleThreshold, frame_diff});
  }
  report.relational_weight = relational_weight(Psi);
  report.conditional_trace = report.method("conditional").at_theta.trace().real();
  report.angelo_expectation = angelo_T_expectation(cfg);
  report.branches_share_sector = branches_share_sector(cfg);
  report.angelo_cross_terms = angelo_cross_terms(cfg);
  report.masses_balanced = cfg.masses_balanced();
  report.matches_expected = !report.method("standard").theta_visible && !report.method("trinv1").theta_visible &&
                            report.method("com").theta_visible && report.method("trel").theta_visible;
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace qrf
