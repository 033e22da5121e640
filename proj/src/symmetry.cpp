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

#include "qrflab/symmetry.hpp"

#include <cmath>
#include <numbers>

#include "qrflab/config.hpp"

namespace qrf {
namespace {

using Index = Eigen::Index;

Index ix(std::size_t i) { return static_cast<Index>(i); }

double wrap_phase(double phi) {
  const double two_pi = 2.0 * std::numbers::pi;
  phi = std::fmod(phi, two_pi);
  return phi < 0 ? phi + two_pi : phi;
}

}  // namespace

SymmetryElement::SymmetryElement(SpaceLabel space, std::vector<std::size_t> assignment, double phase)
    : space_(std::move(space)),
      assignment_(std::move(assignment)),
      phase_(wrap_phase(phase)),
      sb_(SectorBasis::of(space_)) {
  if (assignment_.size() != sb_->relations()) {
    throw StructuralError("assignment must cover every relation tuple");
  }
  for (std::size_t g : assignment_) {
    if (g >= sb_->order()) throw StructuralError("assignment holds an invalid element index");
  }
}

SymmetryElement SymmetryElement::identity(const SpaceLabel& space) {
  return translation(space, 0);
}

SymmetryElement SymmetryElement::translation(const SpaceLabel& space, std::size_t g) {
  return SymmetryElement(space, std::vector<std::size_t>(space.dim() / space.local_dim(), g));
}

GroupElement SymmetryElement::at(const RelationTuple& h) const {
  return space_.group().element(assignment_[relation_index(space_, h)]);
}

std::size_t SymmetryElement::image(std::size_t basis) const {
  const std::size_t r = sb_->relation_at(basis);
  return sb_->member(r, space_.group().add(assignment_[r], sb_->anchor_at(basis)));
}

StateVector SymmetryElement::apply(const StateVector& psi) const {
  require_same_space(space_, psi.space(), "apply_symmetry");
  StateVector out = StateVector::zero(space_);
  const cplx ph = std::polar(1.0, phase_);
  for (std::size_t i = 0; i < space_.dim(); ++i) out.amplitudes()[ix(image(i))] = ph * psi[i];
  return out;
}

Operator SymmetryElement::conjugate(const Operator& rho) const {
  require_same_space(space_, rho.space(), "conjugate");
  std::vector<Index> p(space_.dim());
  for (std::size_t i = 0; i < space_.dim(); ++i) p[i] = ix(image(i));
  Operator out = Operator::zero(space_);
  for (std::size_t j = 0; j < space_.dim(); ++j) {
    for (std::size_t i = 0; i < space_.dim(); ++i) out.matrix()(p[i], p[j]) = rho.matrix()(ix(i), ix(j));
  }
  return out;
}

Operator SymmetryElement::materialize() const {
  Operator out = Operator::zero(space_);
  const cplx ph = std::polar(1.0, phase_);
  for (std::size_t i = 0; i < space_.dim(); ++i) out.matrix()(ix(image(i)), ix(i)) = ph;
  return out;
}

SymmetryElement compose(const SymmetryElement& u, const SymmetryElement& v) {
  require_same_space(u.space(), v.space(), "compose");
  std::vector<std::size_t> a(u.assignment().size());
  for (std::size_t r = 0; r < a.size(); ++r) a[r] = u.space().group().add(u.assignment()[r], v.assignment()[r]);
  return SymmetryElement(u.space(), std::move(a), u.phase() + v.phase());
}

SymmetryElement inverse(const SymmetryElement& u) {
  std::vector<std::size_t> a(u.assignment().size());
  for (std::size_t r = 0; r < a.size(); ++r) a[r] = u.space().group().neg(u.assignment()[r]);
  return SymmetryElement(u.space(), std::move(a), -u.phase());
}

StateVector apply_symmetry(const SymmetryElement& u, const StateVector& psi) { return u.apply(psi); }

bool equal_mod_phase(const SymmetryElement& u, const SymmetryElement& v) {
  return u.space() == v.space() && u.assignment() == v.assignment();
}

std::optional<SymmetryElement> is_in_usym(const Operator& candidate, double eps) {
  const SpaceLabel& space = candidate.space();
  auto sb = SectorBasis::of(space);
  const Mat& m = candidate.matrix();
  const std::size_t d = space.dim();
  // Every column must hold a single unit-modulus entry.
  std::vector<std::size_t> target(d);
  std::vector<cplx> value(d);
  for (std::size_t c = 0; c < d; ++c) {
    Index best = 0;
    m.col(ix(c)).cwiseAbs().maxCoeff(&best);
    const cplx v = m(best, ix(c));
    if (std::abs(std::abs(v) - 1.0) > eps) return std::nullopt;
    for (Index r = 0; r < ix(d); ++r) {
      if (r != best && std::abs(m(r, ix(c))) > eps) return std::nullopt;
    }
    target[c] = static_cast<std::size_t>(best);
    value[c] = v;
  }
  const cplx phase = value[0];
  std::vector<std::size_t> assignment(sb->relations());
  for (std::size_t r = 0; r < sb->relations(); ++r) {
    const std::size_t img = target[sb->member(r, 0)];
    if (sb->relation_at(img) != r) return std::nullopt;
    assignment[r] = sb->anchor_at(img);
  }
  SymmetryElement u(space, std::move(assignment), std::arg(phase));
  for (std::size_t c = 0; c < d; ++c) {
    if (target[c] != u.image(c) || std::abs(value[c] - phase) > eps) return std::nullopt;
  }
  return u;
}

SymmetryElement qrf_symmetry(int i, int j, const SpaceLabel& space) {
  const int N = space.particles();
  if (i < 1 || i > N || j < 1 || j > N) throw StructuralError("qrf_transform: particle out of range");
  auto sb = SectorBasis::of(space);
  const GroupSpec& G = space.group();
  std::vector<std::size_t> a(sb->relations());
  for (std::size_t r = 0; r < a.size(); ++r) {
    a[r] = G.sub(sb->relation_digit(r, i - 1), sb->relation_digit(r, j - 1));
  }
  return SymmetryElement(space, std::move(a));
}

QrfTransform qrf_transform(int i, int j, const SpaceLabel& space) {
  const int N = space.particles();
  if (N < 2) throw StructuralError("qrf_transform needs at least two particles");
  SymmetryElement U = qrf_symmetry(i, j, space);
  SpaceLabel reduced = space.with_particles(N - 1);
  const std::size_t n = space.local_dim();
  Operator V = Operator::zero(reduced);
  for (std::size_t a = 0; a < reduced.dim(); ++a) {
    const std::size_t img = U.image(insert_site(a, N - 1, i, 0, n));
    std::size_t held = 0;
    const std::size_t b = remove_site(img, N, j, n, &held);
    if (held != 0) throw std::logic_error("qrf_transform: image is not aligned to particle j");
    V.matrix()(ix(b), ix(a)) = 1.0;
  }
  return QrfTransform{i, j, std::move(V), std::move(U)};
}

long long centered_representative(std::size_t v, std::size_t n) {
  auto x = static_cast<long long>(v % n);
  auto nn = static_cast<long long>(n);
  return 2 * x > nn ? x - nn : x;
}

SymmetryElement center_of_mass_symmetry(const std::vector<double>& masses, const SpaceLabel& space) {
  if (!space.group().is_cyclic()) {
    throw UnsupportedError("center of mass is only defined on a single cyclic factor Z_n");
  }
  const int N = space.particles();
  if (masses.size() != static_cast<std::size_t>(N)) throw StructuralError("need one mass per particle");
  double m = 0;
  for (double mk : masses) {
    if (!(mk >= 0) || !std::isfinite(mk)) throw DomainError("masses must be finite and non-negative");
    m += mk;
  }
  if (!(m > 0)) throw DomainError("total mass must be positive");
  auto sb = SectorBasis::of(space);
  const std::size_t n = space.local_dim();
  std::vector<std::size_t> a(sb->relations());
  for (std::size_t r = 0; r < a.size(); ++r) {
    double s = 0;
    for (int k = 1; k < N; ++k) {
      s += masses[static_cast<std::size_t>(k)] *
           static_cast<double>(centered_representative(sb->relation_digit(r, k), n));
    }
    const double q = s / m;
    const double nearest = std::round(q);
    const double fl = std::abs(q - nearest) < 1e-9 * std::max(1.0, std::abs(q)) ? nearest : std::floor(q);
    auto f = static_cast<long long>(fl);
    auto nn = static_cast<long long>(n);
    a[r] = static_cast<std::size_t>(((-f) % nn + nn) % nn);
  }
  return SymmetryElement(space, std::move(a));
}

std::size_t usym_size(const SpaceLabel& space, std::size_t limit) {
  const std::size_t n = space.local_dim();
  const std::size_t R = space.dim() / n;
  std::size_t total = 1;
  for (std::size_t r = 0; r < R; ++r) {
    if (total > limit / n) return 0;
    total *= n;
  }
  return total;
}

std::vector<SymmetryElement> enumerate_usym(const SpaceLabel& space, std::size_t limit) {
  const std::size_t count = usym_size(space, limit);
  if (count == 0) throw DomainError("U_sym is too large to enumerate");
  const std::size_t n = space.local_dim();
  const std::size_t R = space.dim() / n;
  std::vector<SymmetryElement> out;
  out.reserve(count);
  std::vector<std::size_t> a(R, 0);
  for (std::size_t t = 0; t < count; ++t) {
    out.emplace_back(space, a);
    for (std::size_t r = R; r-- > 0;) {
      if (++a[r] < n) break;
      a[r] = 0;
    }
  }
  return out;
}

}  // namespace qrf
