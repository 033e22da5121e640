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

#include "qrflab/traces.hpp"

#include "qrflab/config.hpp"
#include "qrflab/invariants.hpp"
#include "qrflab/sectors.hpp"

namespace qrf {
namespace {

using Index = Eigen::Index;

Index ix(std::size_t i) { return static_cast<Index>(i); }

// Index bookkeeping shared by the invariant embedding and its trace.
struct SplitLayout {
  SpaceLabel kept;
  SpaceLabel full;
  std::size_t RN;  // relation tuples of the kept particles
  std::size_t S;   // relation tuples of the added particles, n^M
  std::shared_ptr<const SectorBasis> added;  // M-particle tables, for translating g in G^M
  std::vector<std::size_t> g;  // assignment of the defining symmetry, negated

  // Relation index (h, g(h)^{-1} s) on N+M particles.
  std::size_t shifted(std::size_t h, std::size_t s) const { return h * S + added->translate(s, g[h]); }
};

SplitLayout make_layout(const EmbeddingSpec& spec, const GroupSpec& group) {
  if (spec.kind == EmbeddingKind::RELATIONAL) throw StructuralError("relational embedding has no symmetry");
  if (spec.N < 1 || spec.M < 1) throw StructuralError("embedding needs N >= 1 and M >= 1");
  SpaceLabel kept(group, spec.N);
  SpaceLabel full(group, spec.N + spec.M);
  SymmetryElement u = spec.symmetry(group);
  std::vector<std::size_t> g(u.assignment().size());
  for (std::size_t r = 0; r < g.size(); ++r) g[r] = group.neg(u.assignment()[r]);
  SpaceLabel added(group, spec.M);
  return SplitLayout{kept,  full, kept.dim() / kept.local_dim(), added.dim(), SectorBasis::of(added),
                     std::move(g)};
}

}  // namespace

EmbeddingSpec EmbeddingSpec::particle_frame(int N, int M, int i) {
  EmbeddingSpec s;
  s.kind = EmbeddingKind::PARTICLE;
  s.N = N;
  s.M = M;
  s.particle = i;
  return s;
}

EmbeddingSpec EmbeddingSpec::center_of_mass(int N, int M, std::vector<double> masses) {
  EmbeddingSpec s;
  s.kind = EmbeddingKind::CENTER_OF_MASS;
  s.N = N;
  s.M = M;
  s.masses = std::move(masses);
  return s;
}

EmbeddingSpec EmbeddingSpec::custom_frame(int M, SymmetryElement u) {
  EmbeddingSpec s;
  s.kind = EmbeddingKind::CUSTOM;
  s.N = u.space().particles();
  s.M = M;
  s.custom = std::move(u);
  return s;
}

EmbeddingSpec EmbeddingSpec::relational(int N, int M) {
  EmbeddingSpec s;
  s.kind = EmbeddingKind::RELATIONAL;
  s.N = N;
  s.M = M;
  return s;
}

SymmetryElement EmbeddingSpec::symmetry(const GroupSpec& group) const {
  SpaceLabel kept(group, N);
  switch (kind) {
    case EmbeddingKind::PARTICLE:
      if (particle < 1 || particle > N) throw StructuralError("PARTICLE(i) needs 1 <= i <= N");
      return qrf_symmetry(1, particle, kept);
    case EmbeddingKind::CENTER_OF_MASS:
      return center_of_mass_symmetry(masses, kept);
    case EmbeddingKind::CUSTOM:
      if (!custom || custom->space() != kept) throw StructuralError("CUSTOM symmetry must act on the N kept particles");
      return *custom;
    case EmbeddingKind::RELATIONAL:
      break;
  }
  throw StructuralError("relational embedding has no symmetry");
}

std::string EmbeddingSpec::label() const {
  switch (kind) {
    case EmbeddingKind::PARTICLE:
      return "particle(" + std::to_string(particle) + ")";
    case EmbeddingKind::CENTER_OF_MASS:
      return "center_of_mass";
    case EmbeddingKind::CUSTOM:
      return "custom";
    case EmbeddingKind::RELATIONAL:
      return "relational";
  }
  return "unknown";
}

Operator embed_invariant(const EmbeddingSpec& spec, const Operator& A, Membership mode) {
  if (A.space().particles() != spec.N) throw StructuralError("embed_invariant: operator must act on N particles");
  Operator X = project_alg(A);
  if (mode == Membership::Strict) {
    if (max_abs_diff(X, A) >= tolerance()) throw DomainError("embed_invariant: operator is not in A_alg");
    X = A;
  }
  const SplitLayout L = make_layout(spec, A.space().group());
  const double n = static_cast<double>(A.space().local_dim());
  const Mat R = relational_block(X);
  const Vec a = nontrivial_weights(X) / (n - 1.0);
  Mat Rp = Mat::Zero(ix(L.RN * L.S), ix(L.RN * L.S));
  Vec c = Vec::Zero(ix(L.RN * L.S));
  for (std::size_t s = 0; s < L.S; ++s) {
    for (std::size_t h = 0; h < L.RN; ++h) {
      const Index row = ix(L.shifted(h, s));
      for (std::size_t j = 0; j < L.RN; ++j) Rp(row, ix(L.shifted(j, s))) = R(ix(h), ix(j));
      c[ix(h * L.S + s)] = a[ix(h)];
    }
  }
  Operator out = from_relational_block(L.full, Rp);
  add_nontrivial(out, c);
  return out;
}

Operator embed_relational(const Operator& A, int M, Membership mode) {
  if (M < 1) throw StructuralError("embed_relational needs M >= 1");
  Operator X = project_phys(A);
  if (mode == Membership::Strict) {
    if (max_abs_diff(X, A) >= tolerance()) throw DomainError("embed_relational: operator is not in A_phys");
    X = A;
  }
  return tensor(X, physical_projector(A.space().with_particles(M)));
}

Operator embed(const EmbeddingSpec& spec, const Operator& A, Membership mode) {
  if (spec.kind == EmbeddingKind::RELATIONAL) {
    if (A.space().particles() != spec.N) throw StructuralError("embed: operator must act on N particles");
    return embed_relational(A, spec.M, mode);
  }
  return embed_invariant(spec, A, mode);
}

Operator trinv(const EmbeddingSpec& spec, const Operator& rho) {
  if (rho.space().particles() != spec.N + spec.M) throw StructuralError("trinv: operator must act on N+M particles");
  const SplitLayout L = make_layout(spec, rho.space().group());
  const double n = static_cast<double>(rho.space().local_dim());
  const Mat R = relational_block(rho);
  const Vec w = nontrivial_weights(rho);
  Mat T = Mat::Zero(ix(L.RN), ix(L.RN));
  Vec c = Vec::Zero(ix(L.RN));
  for (std::size_t s = 0; s < L.S; ++s) {
    for (std::size_t h = 0; h < L.RN; ++h) {
      const Index row = ix(L.shifted(h, s));
      for (std::size_t j = 0; j < L.RN; ++j) T(ix(h), ix(j)) += R(row, ix(L.shifted(j, s)));
      c[ix(h)] += w[ix(h * L.S + s)];
    }
  }
  Operator out = from_relational_block(L.kept, T);
  add_nontrivial(out, c / (n - 1.0));
  return out;
}

Operator trinv(const EmbeddingSpec& spec, const StateVector& psi) {
  if (psi.space().particles() != spec.N + spec.M) throw StructuralError("trinv: state must live on N+M particles");
  const SplitLayout L = make_layout(spec, psi.space().group());
  const double n = static_cast<double>(psi.space().local_dim());
  const Vec v = relational_amplitudes(psi);
  const Vec w = nontrivial_weights(psi);
  Mat V(ix(L.RN), ix(L.S));
  Vec c = Vec::Zero(ix(L.RN));
  for (std::size_t h = 0; h < L.RN; ++h) {
    for (std::size_t s = 0; s < L.S; ++s) {
      V(ix(h), ix(s)) = v[ix(L.shifted(h, s))];
      c[ix(h)] += w[ix(h * L.S + s)];
    }
  }
  Operator out = from_relational_block(L.kept, V * V.adjoint());
  add_nontrivial(out, c / (n - 1.0));
  return out;
}

namespace {

// Label of each basis state of N+M particles: (relation of the first N,
// relation of the last M), flattened.
struct TrelLabels {
  SpaceLabel kept;
  std::size_t RN;
  std::size_t RM;
  std::vector<std::size_t> label;
};

TrelLabels trel_labels(const SpaceLabel& full, int M) {
  const int N = full.particles() - M;
  if (M < 1 || N < 1) throw StructuralError("trel needs N >= 1 and M >= 1");
  SpaceLabel kept = full.with_particles(N);
  SpaceLabel added = full.with_particles(M);
  auto sbN = SectorBasis::of(kept);
  auto sbM = SectorBasis::of(added);
  TrelLabels t{kept, sbN->relations(), sbM->relations(), std::vector<std::size_t>(full.dim())};
  const std::size_t DM = added.dim();
  for (std::size_t i = 0; i < full.dim(); ++i) {
    t.label[i] = sbN->relation_at(i / DM) * t.RM + sbM->relation_at(i % DM);
  }
  return t;
}

}  // namespace

Operator trel(const Operator& rho, int M) {
  const TrelLabels t = trel_labels(rho.space(), M);
  const std::size_t L = t.RN * t.RM;
  const std::size_t d = rho.space().dim();
  Mat C = Mat::Zero(ix(L), ix(L));
  for (std::size_t j = 0; j < d; ++j) {
    const Index b = ix(t.label[j]);
    for (std::size_t i = 0; i < d; ++i) C(ix(t.label[i]), b) += rho.matrix()(ix(i), ix(j));
  }
  const double n = static_cast<double>(rho.space().local_dim());
  Mat Q = Mat::Zero(ix(t.RN), ix(t.RN));
  for (std::size_t h = 0; h < t.RN; ++h) {
    for (std::size_t hp = 0; hp < t.RN; ++hp) {
      for (std::size_t k = 0; k < t.RM; ++k) Q(ix(h), ix(hp)) += C(ix(h * t.RM + k), ix(hp * t.RM + k));
    }
  }
  return from_relational_block(t.kept, Q / (n * n));
}

Operator trel(const StateVector& psi, int M) {
  const TrelLabels t = trel_labels(psi.space(), M);
  Vec c = Vec::Zero(ix(t.RN * t.RM));
  for (std::size_t i = 0; i < psi.space().dim(); ++i) c[ix(t.label[i])] += psi[i];
  c /= static_cast<double>(psi.space().local_dim());
  Eigen::Map<const Mat> V(c.data(), ix(t.RM), ix(t.RN));  // V(k, h)
  return from_relational_block(t.kept, V.transpose() * V.conjugate());
}

Operator trel_dense(const Operator& rho, int M) {
  const int N = rho.space().particles() - M;
  if (M < 1 || N < 1) throw StructuralError("trel needs N >= 1 and M >= 1");
  const Operator P = tensor(physical_projector(rho.space().with_particles(N)),
                            physical_projector(rho.space().with_particles(M)));
  return partial_trace_last(P * rho * P, M);
}

Operator trace_out(const EmbeddingSpec& spec, const Operator& rho) {
  if (spec.kind == EmbeddingKind::RELATIONAL) {
    if (rho.space().particles() != spec.N + spec.M) throw StructuralError("trel: operator must act on N+M particles");
    return trel(rho, spec.M);
  }
  return trinv(spec, rho);
}

Operator trace_out(const EmbeddingSpec& spec, const StateVector& psi) {
  if (spec.kind == EmbeddingKind::RELATIONAL) {
    if (psi.space().particles() != spec.N + spec.M) throw StructuralError("trel: state must live on N+M particles");
    return trel(psi, spec.M);
  }
  return trinv(spec, psi);
}

double relational_weight(const Operator& rho) {
  auto sb = SectorBasis::of(rho.space());
  const std::size_t n = sb->order();
  cplx acc = 0;
  for (std::size_t r = 0; r < sb->relations(); ++r) {
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t gp = 0; gp < n; ++gp) acc += rho.matrix()(ix(sb->member(r, g)), ix(sb->member(r, gp)));
    }
  }
  return acc.real() / static_cast<double>(n);
}

double relational_weight(const StateVector& psi) { return relational_amplitudes(psi).squaredNorm(); }

Operator conditional_state(const Operator& rho, int M, double eps) {
  const double w = relational_weight(rho);
  if (!(w > eps)) throw DomainError("conditional state undefined: vanishing relational weight");
  Operator out = trel(rho, M);
  out.matrix() /= w;
  return out;
}

Operator conditional_state(const StateVector& psi, int M, double eps) {
  const double w = relational_weight(psi);
  if (!(w > eps)) throw DomainError("conditional state undefined: vanishing relational weight");
  Operator out = trel(psi, M);
  out.matrix() /= w;
  return out;
}

Operator naive_embedding(const Operator& A, int M) {
  if (M < 1) throw StructuralError("naive_embedding needs M >= 1");
  return project_alg(tensor(A, Operator::identity(A.space().with_particles(M))));
}

NaiveCounterexample naive_physical_embedding_counterexample(const GroupSpec& group, int N, int M) {
  if (N < 2) throw DomainError("counterexample needs N >= 2 (two distinct relation tuples)");
  if (M < 1) throw DomainError("counterexample needs M >= 1");
  SpaceLabel space(group, N);
  const StateVector h = sector_state(space, 0, 0);
  const StateVector j = sector_state(space, 1, 0);
  Operator A = outer(h, j);
  Operator B = outer(j, h);
  const Operator lhs = naive_embedding(A * B, M);
  const Operator rhs = naive_embedding(A, M) * naive_embedding(B, M);
  const double defect = frobenius_norm(lhs - rhs);
  return NaiveCounterexample{std::move(A), std::move(B), defect};
}

}  // namespace qrf
