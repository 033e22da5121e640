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

/// @file hilbert.hpp
/// Dense states and operators on l2(G)^{(x)N}.
///
/// Computational basis states |g_1,...,g_N> are indexed in mixed radix with
/// particle 1 most significant and each digit a group element index.

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "qrflab/group.hpp"

namespace qrf {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

class SpaceLabel {
 public:
  SpaceLabel(GroupSpec group, int particles);

  const GroupSpec& group() const { return group_; }
  int particles() const { return particles_; }
  std::size_t local_dim() const { return group_.order(); }
  std::size_t dim() const { return dim_; }

  /// Same group with a different particle count.
  SpaceLabel with_particles(int particles) const { return SpaceLabel(group_, particles); }

  bool operator==(const SpaceLabel& o) const {
    return particles_ == o.particles_ && group_ == o.group_;
  }
  bool operator!=(const SpaceLabel& o) const { return !(*this == o); }

 private:
  GroupSpec group_;
  int particles_;
  std::size_t dim_;
};

/// Returns the number of basis states, or 0 if |G|^N overflows `cap`.
std::size_t checked_dim(const GroupSpec& group, int particles, std::size_t cap);

class StateVector {
 public:
  StateVector(SpaceLabel space, Vec amplitudes);

  static StateVector zero(const SpaceLabel& space);
  static StateVector basis(const SpaceLabel& space, std::size_t index);

  const SpaceLabel& space() const { return space_; }
  const Vec& amplitudes() const { return amps_; }
  Vec& amplitudes() { return amps_; }
  cplx operator[](std::size_t i) const { return amps_[static_cast<Eigen::Index>(i)]; }
  double norm() const { return amps_.norm(); }

 private:
  SpaceLabel space_;
  Vec amps_;
};

class Operator {
 public:
  Operator(SpaceLabel space, Mat matrix);

  static Operator zero(const SpaceLabel& space);
  static Operator identity(const SpaceLabel& space);

  const SpaceLabel& space() const { return space_; }
  const Mat& matrix() const { return m_; }
  Mat& matrix() { return m_; }
  cplx operator()(std::size_t r, std::size_t c) const {
    return m_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }

  cplx trace() const { return m_.trace(); }
  Operator adjoint() const { return Operator(space_, m_.adjoint()); }
  bool is_hermitian(double eps) const;
  bool is_projector(double eps) const;

  Operator& operator+=(const Operator& o);
  Operator& operator-=(const Operator& o);
  Operator& operator*=(cplx s) {
    m_ *= s;
    return *this;
  }

 private:
  SpaceLabel space_;
  Mat m_;
};

Operator operator+(Operator a, const Operator& b);
Operator operator-(Operator a, const Operator& b);
Operator operator*(const Operator& a, const Operator& b);
Operator operator*(cplx s, Operator a);
StateVector operator*(const Operator& a, const StateVector& psi);

std::size_t basis_index(const SpaceLabel& space, const std::vector<GroupElement>& config);
std::size_t basis_index(const SpaceLabel& space, const std::vector<std::size_t>& config);
/// Inverse of basis_index: element indices of particles 1..N.
std::vector<std::size_t> configuration_of(const SpaceLabel& space, std::size_t index);

/// Index of the N-particle configuration obtained by inserting element `g`
/// at particle position `site` (1-based) into an (N-1)-particle index.
std::size_t insert_site(std::size_t reduced, int reduced_particles, int site, std::size_t g,
                        std::size_t local_dim);
/// Removes particle `site` (1-based); returns the remaining index and, via
/// `removed`, the element the particle held.
std::size_t remove_site(std::size_t full, int particles, int site, std::size_t local_dim,
                        std::size_t* removed = nullptr);

Operator tensor(const Operator& a, const Operator& b);
StateVector tensor(const StateVector& a, const StateVector& b);

/// Standard partial trace over the last M particles.
Operator partial_trace_last(const Operator& rho, int M);
/// Reduced density matrix of |psi><psi| on the first N-M particles.
Operator partial_trace_last(const StateVector& psi, int M);

/// tr(a^dagger b).
cplx hs_inner(const Operator& a, const Operator& b);
/// <a|b>.
cplx inner(const StateVector& a, const StateVector& b);

/// |a><b|.
Operator outer(const StateVector& a, const StateVector& b);
Operator density(const StateVector& psi);

/// |g><g| at particle `site` tensored (in place) with `rest` on the other particles.
Operator pin_site(const Operator& rest, int site, std::size_t g);

double max_abs_diff(const Operator& a, const Operator& b);
double max_abs_diff(const StateVector& a, const StateVector& b);
bool approx_equal(const Operator& a, const Operator& b, double eps);
bool approx_equal(const StateVector& a, const StateVector& b, double eps);
double frobenius_norm(const Operator& a);

void require_same_space(const SpaceLabel& a, const SpaceLabel& b, const char* what);

}  // namespace qrf
