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

#include "qrflab/alignment.hpp"

#include <cmath>

#include "qrflab/config.hpp"
#include "qrflab/sectors.hpp"
#include "qrflab/symmetry.hpp"

namespace qrf {
namespace {

using Index = Eigen::Index;

Index ix(std::size_t i) { return static_cast<Index>(i); }

constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);
constexpr std::size_t kCrowded = static_cast<std::size_t>(-2);

}  // namespace

std::optional<AlignableDecomposition> decompose_alignable(const StateVector& psi, double threshold) {
  auto sb = SectorBasis::of(psi.space());
  std::vector<std::size_t> occupant(sb->relations(), kEmpty);
  for (std::size_t i = 0; i < psi.space().dim(); ++i) {
    if (std::abs(psi[i]) < threshold) continue;
    std::size_t& slot = occupant[sb->relation_at(i)];
    if (slot != kEmpty) return std::nullopt;
    slot = i;
  }
  AlignableDecomposition out;
  for (std::size_t r = 0; r < occupant.size(); ++r) {
    if (occupant[r] == kEmpty) continue;
    out.terms.push_back({r, psi[occupant[r]], sb->anchor_at(occupant[r])});
  }
  return out;
}

AlignedForm align_to(const StateVector& psi, int i) {
  const SpaceLabel& space = psi.space();
  const int N = space.particles();
  if (N < 2) throw StructuralError("align_to needs at least two particles");
  if (i < 1 || i > N) throw StructuralError("align_to: particle out of range");
  auto dec = decompose_alignable(psi);
  if (!dec) throw DomainError("not alignable");
  auto sb = SectorBasis::of(space);
  const GroupSpec& G = space.group();
  SpaceLabel reduced = space.with_particles(N - 1);
  StateVector phi = StateVector::zero(reduced);
  for (const auto& t : dec->terms) {
    // Unique configuration of the sector with e at particle i.
    const std::size_t full = sb->member(t.relation, G.neg(sb->relation_digit(t.relation, i - 1)));
    phi.amplitudes()[ix(remove_site(full, N, i, space.local_dim()))] = t.alpha;
  }
  double phase = 0;
  for (Index k = 0; k < phi.amplitudes().size(); ++k) {
    if (std::abs(phi.amplitudes()[k]) >= kSupportThreshold) {
      phase = std::arg(phi.amplitudes()[k]);
      break;
    }
  }
  phi.amplitudes() *= std::polar(1.0, -phase);
  return AlignedForm{i, std::move(phi), phase};
}

StateVector reconstruct(const AlignedForm& form, bool with_phase) {
  const SpaceLabel& reduced = form.reduced_state.space();
  const int N = reduced.particles() + 1;
  SpaceLabel full = reduced.with_particles(N);
  StateVector out = StateVector::zero(full);
  const cplx ph = with_phase ? std::polar(1.0, form.global_phase) : cplx(1.0);
  for (std::size_t a = 0; a < reduced.dim(); ++a) {
    out.amplitudes()[ix(insert_site(a, N - 1, form.reference_particle, 0, full.local_dim()))] =
        ph * form.reduced_state[a];
  }
  return out;
}

std::optional<Operator> align_observable(const Operator& A, int i, double eps) {
  const SpaceLabel& space = A.space();
  const int N = space.particles();
  if (N < 2) throw StructuralError("align_observable needs at least two particles");
  if (i < 1 || i > N) throw StructuralError("align_observable: particle out of range");
  auto sb = SectorBasis::of(space);
  const Mat& m = A.matrix();
  std::vector<std::size_t> occupant(sb->relations(), kEmpty);
  for (std::size_t b = 0; b < space.dim(); ++b) {
    const bool used = m.row(ix(b)).cwiseAbs().maxCoeff() > eps || m.col(ix(b)).cwiseAbs().maxCoeff() > eps;
    if (!used) continue;
    std::size_t& slot = occupant[sb->relation_at(b)];
    slot = slot == kEmpty ? b : kCrowded;
  }
  const GroupSpec& G = space.group();
  std::vector<std::size_t> assignment(sb->relations(), 0);
  for (std::size_t r = 0; r < occupant.size(); ++r) {
    if (occupant[r] == kCrowded) return std::nullopt;
    if (occupant[r] == kEmpty) continue;
    const std::size_t held = configuration_of(space, occupant[r])[static_cast<std::size_t>(i - 1)];
    assignment[r] = G.neg(held);
  }
  const Operator B = SymmetryElement(space, std::move(assignment)).conjugate(A);
  SpaceLabel reduced = space.with_particles(N - 1);
  std::vector<Index> map(reduced.dim());
  for (std::size_t a = 0; a < reduced.dim(); ++a) {
    map[a] = ix(insert_site(a, N - 1, i, 0, space.local_dim()));
  }
  Operator out = Operator::zero(reduced);
  for (std::size_t c = 0; c < reduced.dim(); ++c) {
    for (std::size_t r = 0; r < reduced.dim(); ++r) out.matrix()(ix(r), ix(c)) = B.matrix()(map[r], map[c]);
  }
  return out;
}

}  // namespace qrf
