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

#include "qrflab/hilbert.hpp"

#include <limits>
#include <string>

#include "qrflab/config.hpp"

namespace qrf {
namespace {

using Index = Eigen::Index;

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

}  // namespace

void require_same_space(const SpaceLabel& a, const SpaceLabel& b, const char* what) {
  if (a != b) throw StructuralError(std::string(what) + ": operands live on different spaces");
}

std::size_t checked_dim(const GroupSpec& group, int particles, std::size_t cap) {
  std::size_t d = 1;
  for (int k = 0; k < particles; ++k) {
    if (d > cap / group.order()) return 0;
    d *= group.order();
  }
  return d <= cap ? d : 0;
}

SpaceLabel::SpaceLabel(GroupSpec group, int particles)
    : group_(std::move(group)), particles_(particles) {
  if (particles_ < 1) throw StructuralError("a space needs at least one particle");
  dim_ = checked_dim(group_, particles_, std::numeric_limits<std::size_t>::max() / 2);
  if (dim_ == 0) throw StructuralError("space dimension overflows");
}

StateVector::StateVector(SpaceLabel space, Vec amplitudes)
    : space_(std::move(space)), amps_(std::move(amplitudes)) {
  if (static_cast<std::size_t>(amps_.size()) != space_.dim()) {
    throw StructuralError("state vector length does not match |G|^N");
  }
}

StateVector StateVector::zero(const SpaceLabel& space) {
  return StateVector(space, Vec::Zero(static_cast<Index>(space.dim())));
}

StateVector StateVector::basis(const SpaceLabel& space, std::size_t index) {
  if (index >= space.dim()) throw StructuralError("basis index out of range");
  StateVector s = zero(space);
  s.amps_[static_cast<Index>(index)] = 1.0;
  return s;
}

Operator::Operator(SpaceLabel space, Mat matrix) : space_(std::move(space)), m_(std::move(matrix)) {
  auto d = static_cast<Index>(space_.dim());
  if (m_.rows() != d || m_.cols() != d) throw StructuralError("operator shape does not match |G|^N");
}

Operator Operator::zero(const SpaceLabel& space) {
  auto d = static_cast<Index>(space.dim());
  return Operator(space, Mat::Zero(d, d));
}

Operator Operator::identity(const SpaceLabel& space) {
  auto d = static_cast<Index>(space.dim());
  return Operator(space, Mat::Identity(d, d));
}

bool Operator::is_hermitian(double eps) const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() < eps;
}

bool Operator::is_projector(double eps) const {
  return is_hermitian(eps) && (m_ * m_ - m_).cwiseAbs().maxCoeff() < eps;
}

Operator& Operator::operator+=(const Operator& o) {
  require_same_space(space_, o.space_, "operator +");
  m_ += o.m_;
  return *this;
}

Operator& Operator::operator-=(const Operator& o) {
  require_same_space(space_, o.space_, "operator -");
  m_ -= o.m_;
  return *this;
}

Operator operator+(Operator a, const Operator& b) { return a += b; }
Operator operator-(Operator a, const Operator& b) { return a -= b; }

Operator operator*(const Operator& a, const Operator& b) {
  require_same_space(a.space(), b.space(), "operator *");
  return Operator(a.space(), a.matrix() * b.matrix());
}

Operator operator*(cplx s, Operator a) { return a *= s; }

StateVector operator*(const Operator& a, const StateVector& psi) {
  require_same_space(a.space(), psi.space(), "operator apply");
  return StateVector(psi.space(), a.matrix() * psi.amplitudes());
}

std::size_t basis_index(const SpaceLabel& space, const std::vector<GroupElement>& config) {
  if (config.size() != static_cast<std::size_t>(space.particles())) {
    throw StructuralError("configuration length differs from particle count");
  }
  std::size_t idx = 0;
  for (const auto& g : config) idx = idx * space.local_dim() + space.group().index_of(g);
  return idx;
}

std::size_t basis_index(const SpaceLabel& space, const std::vector<std::size_t>& config) {
  if (config.size() != static_cast<std::size_t>(space.particles())) {
    throw StructuralError("configuration length differs from particle count");
  }
  std::size_t idx = 0;
  for (std::size_t g : config) {
    if (g >= space.local_dim()) throw StructuralError("group element index out of range");
    idx = idx * space.local_dim() + g;
  }
  return idx;
}

std::vector<std::size_t> configuration_of(const SpaceLabel& space, std::size_t index) {
  if (index >= space.dim()) throw StructuralError("basis index out of range");
  std::vector<std::size_t> out(static_cast<std::size_t>(space.particles()));
  for (std::size_t k = out.size(); k-- > 0;) {
    out[k] = index % space.local_dim();
    index /= space.local_dim();
  }
  return out;
}

std::size_t insert_site(std::size_t reduced, int reduced_particles, int site, std::size_t g,
                        std::size_t local_dim) {
  // Particles after `site` form the low digits.
  std::size_t low = ipow(local_dim, reduced_particles - site + 1);
  std::size_t head = reduced / low;
  std::size_t tail = reduced % low;
  return (head * local_dim + g) * low + tail;
}

std::size_t remove_site(std::size_t full, int particles, int site, std::size_t local_dim,
                        std::size_t* removed) {
  std::size_t low = ipow(local_dim, particles - site);
  std::size_t tail = full % low;
  std::size_t rest = full / low;
  if (removed) *removed = rest % local_dim;
  return (rest / local_dim) * low + tail;
}

Operator tensor(const Operator& a, const Operator& b) {
  if (a.space().group() != b.space().group()) throw StructuralError("tensor: group mismatch");
  SpaceLabel out_space(a.space().group(), a.space().particles() + b.space().particles());
  const Index da = a.matrix().rows();
  const Index db = b.matrix().rows();
  Mat out(da * db, da * db);
  for (Index i = 0; i < da; ++i) {
    for (Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  return Operator(out_space, std::move(out));
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.space().group() != b.space().group()) throw StructuralError("tensor: group mismatch");
  SpaceLabel out_space(a.space().group(), a.space().particles() + b.space().particles());
  const Index da = a.amplitudes().size();
  const Index db = b.amplitudes().size();
  Vec out(da * db);
  for (Index i = 0; i < da; ++i) out.segment(i * db, db) = a.amplitudes()[i] * b.amplitudes();
  return StateVector(out_space, std::move(out));
}

Operator partial_trace_last(const Operator& rho, int M) {
  const int total = rho.space().particles();
  if (M < 0 || M >= total) throw StructuralError("partial_trace_last: M must be in [0, N+M)");
  SpaceLabel out_space = rho.space().with_particles(total - M);
  const auto dk = static_cast<Index>(ipow(rho.space().local_dim(), M));
  const auto dn = static_cast<Index>(out_space.dim());
  Mat out = Mat::Zero(dn, dn);
  const Mat& m = rho.matrix();
  for (Index a = 0; a < dn; ++a) {
    for (Index b = 0; b < dn; ++b) {
      cplx s = 0;
      for (Index k = 0; k < dk; ++k) s += m(a * dk + k, b * dk + k);
      out(a, b) = s;
    }
  }
  return Operator(out_space, std::move(out));
}

Operator partial_trace_last(const StateVector& psi, int M) {
  const int total = psi.space().particles();
  if (M < 0 || M >= total) throw StructuralError("partial_trace_last: M must be in [0, N+M)");
  SpaceLabel out_space = psi.space().with_particles(total - M);
  const auto dk = static_cast<Index>(ipow(psi.space().local_dim(), M));
  const auto dn = static_cast<Index>(out_space.dim());
  // Rows index the kept particles.
  Eigen::Map<const Mat> x(psi.amplitudes().data(), dk, dn);
  Mat out = x.transpose() * x.conjugate();
  return Operator(out_space, std::move(out));
}

cplx hs_inner(const Operator& a, const Operator& b) {
  require_same_space(a.space(), b.space(), "hs_inner");
  return (a.matrix().conjugate().cwiseProduct(b.matrix())).sum();
}

cplx inner(const StateVector& a, const StateVector& b) {
  require_same_space(a.space(), b.space(), "inner");
  return a.amplitudes().dot(b.amplitudes());
}

Operator outer(const StateVector& a, const StateVector& b) {
  require_same_space(a.space(), b.space(), "outer");
  return Operator(a.space(), a.amplitudes() * b.amplitudes().adjoint());
}

Operator density(const StateVector& psi) { return outer(psi, psi); }

Operator pin_site(const Operator& rest, int site, std::size_t g) {
  const int n_rest = rest.space().particles();
  if (site < 1 || site > n_rest + 1) throw StructuralError("pin_site: site out of range");
  SpaceLabel full = rest.space().with_particles(n_rest + 1);
  const std::size_t d = full.local_dim();
  Operator out = Operator::zero(full);
  const auto dr = static_cast<Index>(rest.space().dim());
  std::vector<Index> map(static_cast<std::size_t>(dr));
  for (Index r = 0; r < dr; ++r) {
    map[static_cast<std::size_t>(r)] =
        static_cast<Index>(insert_site(static_cast<std::size_t>(r), n_rest, site, g, d));
  }
  for (Index r = 0; r < dr; ++r) {
    for (Index c = 0; c < dr; ++c) {
      out.matrix()(map[static_cast<std::size_t>(r)], map[static_cast<std::size_t>(c)]) =
          rest.matrix()(r, c);
    }
  }
  return out;
}

double max_abs_diff(const Operator& a, const Operator& b) {
  require_same_space(a.space(), b.space(), "max_abs_diff");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  require_same_space(a.space(), b.space(), "max_abs_diff");
  return (a.amplitudes() - b.amplitudes()).cwiseAbs().maxCoeff();
}

bool approx_equal(const Operator& a, const Operator& b, double eps) {
  return a.space() == b.space() && max_abs_diff(a, b) < eps;
}

bool approx_equal(const StateVector& a, const StateVector& b, double eps) {
  return a.space() == b.space() && max_abs_diff(a, b) < eps;
}

double frobenius_norm(const Operator& a) { return a.matrix().norm(); }

}  // namespace qrf
