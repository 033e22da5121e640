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

#include "qrflab/verify.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <set>
#include <thread>

#include "qrflab/alignment.hpp"
#include "qrflab/config.hpp"
#include "qrflab/invariants.hpp"
#include "qrflab/io.hpp"
#include "qrflab/paradox.hpp"
#include "qrflab/random.hpp"
#include "qrflab/sectors.hpp"
#include "qrflab/symmetry.hpp"
#include "qrflab/traces.hpp"

namespace qrf {
namespace {

using Index = Eigen::Index;
using SpMat = Eigen::SparseMatrix<cplx>;

Index ix(std::size_t i) { return static_cast<Index>(i); }

struct Ctx {
  GroupSpec group;
  int N;
  SpaceLabel space;
  std::uint64_t seed;
};

struct Outcome {
  double deviation = 0;
  double threshold = 0;
  bool passed = false;
  bool skipped = false;
  std::string note;
};

Outcome within(double dev, double tol, std::string note = {}) {
  return Outcome{dev, tol, dev <= tol, false, std::move(note)};
}

Outcome exceeds(double value, double bound, std::string note = {}) {
  return Outcome{value, bound, value > bound, false, std::move(note)};
}

Outcome skip(std::string why) { return Outcome{0, 0, true, true, std::move(why)}; }

struct Check {
  std::string name;
  std::string reference;
  std::vector<std::string> selectors;
  std::function<Outcome(const Ctx&)> run;
};

Operator normalized(Operator op) {
  const double f = frobenius_norm(op);
  if (f > 0) op.matrix() /= f;
  return op;
}

cplx int_pow(cplx z, std::size_t e) {
  cplx r = 1;
  while (e) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

SpMat sparse_change_of_basis(const SpaceLabel& space) {
  auto sb = SectorBasis::of(space);
  const std::size_t n = sb->order();
  std::vector<Eigen::Triplet<cplx>> t;
  t.reserve(space.dim());
  for (std::size_t r = 0; r < sb->relations(); ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t g = 0; g < n; ++g) t.emplace_back(ix(sb->member(r, g)), ix(r * n + k), sb->amplitude(k, g));
    }
  }
  SpMat W(ix(space.dim()), ix(space.dim()));
  W.setFromTriplets(t.begin(), t.end());
  return W;
}

// Translations by a generator of each cyclic factor, optionally restricted to one sector.
std::vector<SymmetryElement> generators(const SpaceLabel& space, bool per_sector) {
  const GroupSpec& G = space.group();
  const std::size_t R = space.dim() / space.local_dim();
  std::vector<std::size_t> gens;
  for (std::size_t j = 0; j < G.factors(); ++j) {
    std::vector<long long> e(G.factors(), 0);
    e[j] = 1;
    gens.push_back(G.index_of(GroupElement(G, e)));
  }
  std::vector<SymmetryElement> out;
  for (std::size_t g : gens) {
    out.push_back(SymmetryElement::translation(space, g));
    if (!per_sector) continue;
    for (std::size_t r = 0; r < R; ++r) {
      std::vector<std::size_t> a(R, 0);
      a[r] = g;
      out.emplace_back(space, std::move(a));
    }
  }
  return out;
}

// ---- group -----------------------------------------------------------------

Outcome group_orthogonality(const Ctx& c) {
  const GroupSpec& G = c.group;
  const std::size_t n = G.order();
  Rng rng = make_rng(c.seed, "group.orthogonality");
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  const bool exhaustive = n <= 128;
  const std::size_t pairs = exhaustive ? n * n : 4096;
  double dev = 0;
  for (std::size_t p = 0; p < pairs; ++p) {
    const std::size_t k = exhaustive ? p / n : pick(rng);
    const std::size_t kp = exhaustive ? p % n : pick(rng);
    cplx s = 0;
    for (std::size_t g = 0; g < n; ++g) s += std::conj(G.chi(k, g)) * G.chi(kp, g);
    dev = std::max(dev, std::abs(s - (k == kp ? static_cast<double>(n) : 0.0)));
  }
  return within(dev, 1e-12 * std::max<double>(1.0, static_cast<double>(n) / 8), exhaustive ? "" : "sampled pairs");
}

Outcome group_character_order(const Ctx& c) {
  const GroupSpec& G = c.group;
  const std::size_t n = G.order();
  double dev = 0;
  const std::size_t stride = n > 256 ? n / 256 : 1;
  for (std::size_t k = 0; k < n; k += stride) {
    for (std::size_t g = 0; g < n; ++g) dev = std::max(dev, std::abs(int_pow(G.chi(k, g), n) - 1.0));
  }
  return within(dev, 1e-12);
}

Outcome group_commutativity(const Ctx& c) {
  Rng rng = make_rng(c.seed, "group.commutativity");
  std::uniform_int_distribution<std::size_t> pick(0, c.group.order() - 1);
  double bad = 0;
  for (int t = 0; t < 1000; ++t) {
    const GroupElement a = c.group.element(pick(rng));
    const GroupElement b = c.group.element(pick(rng));
    if (compose(a, b) != compose(b, a)) bad += 1;
  }
  return within(bad, 0, "count of non-commuting pairs");
}

// ---- hilbert ---------------------------------------------------------------

Outcome hilbert_bijection(const Ctx& c) {
  double bad = 0;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < c.space.dim(); ++i) {
    auto cfg = configuration_of(c.space, i);
    if (basis_index(c.space, cfg) != i) bad += 1;
    if (!seen.insert(cfg).second) bad += 1;
  }
  return within(bad, 0, "count of index mismatches");
}

Outcome hilbert_partial_trace_positive(const Ctx& c) {
  if (c.N < 2) return skip("needs at least two particles");
  Rng rng = make_rng(c.seed, "hilbert.partial_trace_positive");
  const auto d = ix(c.space.dim());
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    Mat X(d, 3);
    for (Index k = 0; k < 3; ++k) X.col(k) = random_state(c.space, rng).amplitudes();
    const Operator rho(c.space, X * X.adjoint());
    const Operator red = partial_trace_last(rho, 1);
    Eigen::SelfAdjointEigenSolver<Mat> es(red.matrix(), Eigen::EigenvaluesOnly);
    worst = std::min(worst, es.eigenvalues().minCoeff());
  }
  return within(-worst, 1e-10, "most negative eigenvalue, negated");
}

Outcome hilbert_tensor_associative(const Ctx& c) {
  Rng rng = make_rng(c.seed, "hilbert.tensor_associative");
  const SpaceLabel one = c.space.with_particles(1);
  // Gaussian-integer entries keep every product exact.
  std::uniform_int_distribution<int> pick(-8, 8);
  auto integral = [&](const SpaceLabel& s) {
    Operator X = Operator::zero(s);
    for (Index j = 0; j < X.matrix().cols(); ++j) {
      for (Index i = 0; i < X.matrix().rows(); ++i) X.matrix()(i, j) = cplx(pick(rng), pick(rng));
    }
    return X;
  };
  const Operator A = integral(one);
  const Operator B = integral(one);
  const Operator C = integral(c.space.with_particles(std::max(1, c.N - 2)));
  return within(max_abs_diff(tensor(tensor(A, B), C), tensor(A, tensor(B, C))), 0, "exact equality");
}

// ---- sectors ---------------------------------------------------------------

Outcome sectors_eigenbasis(const Ctx& c) {
  Rng rng = make_rng(c.seed, "sectors.eigenbasis");
  auto sb = SectorBasis::of(c.space);
  const std::size_t n = sb->order();
  std::uniform_int_distribution<std::size_t> pr(0, sb->relations() - 1), pk(0, n - 1);
  double dev = 0;
  for (int t = 0; t < 32; ++t) {
    const std::size_t r = pr(rng), k = pk(rng);
    const StateVector v = sector_state(c.space, r, k);
    for (std::size_t g = 0; g < n; ++g) {
      StateVector u = StateVector::zero(c.space);
      for (std::size_t i = 0; i < c.space.dim(); ++i) u.amplitudes()[ix(sb->translate(i, g))] = v[i];
      StateVector expect = v;
      expect.amplitudes() *= c.group.chi(k, g);
      dev = std::max(dev, max_abs_diff(u, expect));
    }
  }
  return within(dev, 1e-12);
}

Outcome sectors_completeness(const Ctx& c) {
  const SpMat W = sparse_change_of_basis(c.space);
  SpMat gram = SpMat(W.adjoint()) * W;
  Mat diff = Mat(gram) - Mat::Identity(ix(c.space.dim()), ix(c.space.dim()));
  return within(diff.cwiseAbs().maxCoeff(), 1e-10);
}

Outcome sectors_coherent_average(const Ctx& c) {
  const Operator avg = physical_projector(c.space);
  const Operator sum = physical_projector_from_sectors(c.space);
  const double dev = max_abs_diff(avg, sum);
  const double expected = static_cast<double>(c.space.dim() / c.space.local_dim());
  const double tdev = std::abs(avg.trace() - expected);
  Outcome o = within(dev, 1e-12, "trace deviation " + std::to_string(tdev));
  o.passed = o.passed && tdev <= 1e-9;
  return o;
}

Outcome sectors_projector_factorization(const Ctx& c) {
  if (c.N < 2) return skip("needs at least two particles");
  double dev = 0;
  const Operator full = physical_projector(c.space);
  for (int k = c.N - 1; k >= 1; --k) {
    const Operator Pk = physical_projector(c.space.with_particles(k));
    const Operator Pm = physical_projector(c.space.with_particles(c.N - k));
    const Operator lhs = tensor(Pk, Operator::identity(c.space.with_particles(c.N - k))) * full;
    dev = std::max(dev, max_abs_diff(lhs, tensor(Pk, Pm)));
    if (c.space.dim() > 1024) break;
  }
  return within(dev, 1e-12);
}

// ---- symmetry --------------------------------------------------------------

Outcome symmetry_closure(const Ctx& c) {
  Rng rng = make_rng(c.seed, "symmetry.closure");
  double bad = 0;
  for (int t = 0; t < 100; ++t) {
    const SymmetryElement u = random_symmetry(c.space, rng);
    const SymmetryElement v = random_symmetry(c.space, rng);
    const SymmetryElement uv = compose(u, v);
    for (std::size_t i = 0; i < c.space.dim(); ++i) {
      if (uv.image(i) != u.image(v.image(i))) {
        bad += 1;
        break;
      }
    }
    if (t < 3 && c.space.dim() <= 512) {
      const auto rec = is_in_usym(u.materialize() * v.materialize(), 1e-10);
      if (!rec || rec->assignment() != uv.assignment()) bad += 1;
    }
  }
  return within(bad, 0, "count of failing pairs");
}

Outcome symmetry_commutes_with_sectors(const Ctx& c) {
  Rng rng = make_rng(c.seed, "symmetry.commutes_with_sectors");
  auto sb = SectorBasis::of(c.space);
  std::uniform_int_distribution<std::size_t> pr(0, sb->relations() - 1);
  double dev = 0;
  for (int t = 0; t < 5; ++t) {
    const SymmetryElement u = random_symmetry(c.space, rng, true);
    for (std::size_t i = 0; i < c.space.dim(); ++i) {
      if (sb->relation_at(u.image(i)) != sb->relation_at(i)) dev = std::max(dev, 1.0);
    }
    for (int s = 0; s < 8; ++s) {
      const Operator P = sector_projector(c.space, pr(rng));
      dev = std::max(dev, max_abs_diff(u.conjugate(P), P));
    }
  }
  return within(dev, 1e-12);
}

Outcome symmetry_condition3(const Ctx& c) {
  Rng rng = make_rng(c.seed, "symmetry.condition3");
  auto sb = SectorBasis::of(c.space);
  double dev = 0;
  for (int t = 0; t < 5; ++t) {
    const SymmetryElement u = random_symmetry(c.space, rng, true);
    for (std::size_t g = 0; g < c.group.order(); ++g) {
      for (std::size_t i = 0; i < c.space.dim(); ++i) {
        if (u.image(sb->translate(i, g)) != sb->translate(u.image(i), g)) dev = std::max(dev, 1.0);
      }
    }
    const Operator U = u.materialize();
    const std::size_t g = std::uniform_int_distribution<std::size_t>(0, c.group.order() - 1)(rng);
    dev = std::max(dev, max_abs_diff(SymmetryElement::translation(c.space, g).conjugate(U), U));
  }
  return within(dev, 1e-12);
}

Outcome symmetry_bruteforce(const Ctx& c) {
  const std::size_t count = usym_size(c.space, 10000);
  if (count == 0 || c.space.dim() > 64) return skip("U_sym too large to enumerate");
  const auto all = enumerate_usym(c.space, 10000);
  double bad = all.size() == count ? 0 : 1;
  std::set<std::vector<std::size_t>> distinct;
  for (const auto& u : all) {
    distinct.insert(u.assignment());
    const auto rec = is_in_usym(u.materialize(), 1e-10);
    if (!rec || rec->assignment() != u.assignment()) bad += 1;
  }
  if (distinct.size() != count) bad += 1;
  return within(bad, 0, "|U_sym| = " + std::to_string(count));
}

// ---- invariants ------------------------------------------------------------

Outcome invariants_self_adjoint(const Ctx& c) {
  Rng rng = make_rng(c.seed, "invariants.self_adjoint_idempotent");
  double dev = 0;
  for (int t = 0; t < 3; ++t) {
    const Operator A = normalized(random_operator(c.space, rng));
    const Operator B = normalized(random_operator(c.space, rng));
    for (AlgebraTag tag : {AlgebraTag::PHYS, AlgebraTag::ALG, AlgebraTag::INV, AlgebraTag::INV_PRIME}) {
      const Operator PA = project(A, tag);
      const Operator PB = project(B, tag);
      dev = std::max(dev, std::abs(hs_inner(A, PB) - hs_inner(PA, B)));
      dev = std::max(dev, max_abs_diff(project(PA, tag), PA));
    }
  }
  return within(dev, 1e-10);
}

Outcome invariants_strict_inclusions(const Ctx& c) {
  if (c.N < 2) return skip("needs two relation sectors");
  const double eps = tolerance();
  double bad = 0;
  const Operator w1 = witness_inv_prime_not_inv(c.space);
  if (classify(w1, eps) != AlgebraTag::INV_PRIME) bad += 1;
  const Operator w3 = witness_alg_not_phys(c.space);
  if (classify(w3, eps) != AlgebraTag::ALG) bad += 1;
  std::string note;
  if (auto w2 = witness_inv_not_alg(c.space)) {
    if (classify(*w2, eps) != AlgebraTag::INV) bad += 1;
  } else {
    note = "|G| = 2: A_inv and A_alg coincide, no witness";
  }
  return within(bad, 0, note);
}

Outcome invariants_fixed_points(const Ctx& c) {
  if (c.space.dim() > 512) return skip("brute-force commutant check limited to dim <= 512");
  Rng rng = make_rng(c.seed, "invariants.fixed_points");
  const auto gens_prime = generators(c.space, false);
  const auto gens_inv = generators(c.space, true);
  std::vector<Operator> probes;
  const Operator X = normalized(random_operator(c.space, rng));
  probes.push_back(X);
  probes.push_back(project_inv(X));
  probes.push_back(project_inv_prime(X));
  probes.push_back(project_alg(X));
  if (c.N >= 2) probes.push_back(witness_inv_prime_not_inv(c.space));
  double bad = 0;
  auto commutes = [](const Operator& A, const std::vector<SymmetryElement>& gens) {
    for (const auto& g : gens) {
      if (max_abs_diff(g.conjugate(A), A) > 1e-9) return false;
    }
    return true;
  };
  for (const auto& A : probes) {
    if (in_algebra(A, AlgebraTag::INV_PRIME, 1e-9) != commutes(A, gens_prime)) bad += 1;
    if (in_algebra(A, AlgebraTag::INV, 1e-9) != commutes(A, gens_inv)) bad += 1;
  }
  return within(bad, 0, "count of mismatches between fixed points and commutant");
}

Outcome invariants_superselection(const Ctx& c) {
  Rng rng = make_rng(c.seed, "invariants.superselection");
  const SpMat W = sparse_change_of_basis(c.space);
  const std::size_t n = c.space.local_dim();
  double dev = 0;
  for (int t = 0; t < 2; ++t) {
    const Operator A = project_inv(normalized(random_operator(c.space, rng)));
    const Mat B = SpMat(W.adjoint()) * (A.matrix() * W);
    for (Index col = 0; col < B.cols(); ++col) {
      for (Index row = 0; row < B.rows(); ++row) {
        const auto r1 = static_cast<std::size_t>(row) / n, k1 = static_cast<std::size_t>(row) % n;
        const auto r2 = static_cast<std::size_t>(col) / n, k2 = static_cast<std::size_t>(col) % n;
        const bool allowed = (k1 == 0 && k2 == 0) || (r1 == r2 && k1 == k2);
        if (!allowed) dev = std::max(dev, std::abs(B(row, col)));
      }
    }
  }
  return within(dev, 1e-12);
}

Outcome invariants_bruteforce_twirl(const Ctx& c) {
  const std::size_t count = usym_size(c.space, 10000);
  if (count == 0) return skip("U_sym too large for the literal twirl");
  Rng rng = make_rng(c.seed, "invariants.bruteforce_twirl");
  double dev = 0;
  for (int t = 0; t < 20; ++t) {
    const Operator X = normalized(random_operator(c.space, rng));
    dev = std::max(dev, max_abs_diff(literal_usym_twirl(X), project_inv(X)));
  }
  return within(dev, 1e-11, "|U_sym| = " + std::to_string(count));
}

// ---- alignment -------------------------------------------------------------

Outcome alignment_uniqueness(const Ctx& c) {
  if (c.N < 2) return skip("needs at least two particles");
  Rng rng = make_rng(c.seed, "alignment.uniqueness");
  std::uniform_int_distribution<int> pi(1, c.N);
  double dev = 0;
  for (int t = 0; t < 10; ++t) {
    const StateVector psi = random_alignable_state(c.space, rng);
    const int i = pi(rng);
    const AlignedForm a = align_to(psi, i);
    const AlignedForm b = align_to(psi, i);
    dev = std::max(dev, max_abs_diff(a.reduced_state, b.reduced_state));
    const StateVector moved = random_symmetry(c.space, rng, true).apply(psi);
    dev = std::max(dev, max_abs_diff(align_to(moved, i).reduced_state, a.reduced_state));
  }
  return within(dev, 1e-12);
}

Outcome alignment_projection_formula(const Ctx& c) {
  Rng rng = make_rng(c.seed, "alignment.projection_formula");
  const double n = static_cast<double>(c.space.local_dim());
  const std::size_t R = c.space.dim() / c.space.local_dim();
  double dev = 0;
  for (int t = 0; t < 5; ++t) {
    const StateVector psi = random_alignable_state(c.space, rng);
    const auto dec = decompose_alignable(psi);
    Vec alpha = Vec::Zero(ix(R));
    for (const auto& term : dec->terms) alpha[ix(term.relation)] = term.alpha;
    Operator expect = from_relational_block(c.space, alpha * alpha.adjoint() / n);
    add_nontrivial(expect, alpha.cwiseAbs2().cast<cplx>() / n);
    dev = std::max(dev, max_abs_diff(project_inv(density(psi)), expect));
  }
  return within(dev, 1e-10);
}

Outcome alignment_physical_weight(const Ctx& c) {
  Rng rng = make_rng(c.seed, "alignment.physical_weight");
  const Operator P = physical_projector(c.space);
  double dev = 0;
  for (int t = 0; t < 20; ++t) {
    const StateVector psi = random_alignable_state(c.space, rng);
    dev = std::max(dev, std::abs(inner(psi, P * psi) - 1.0 / static_cast<double>(c.space.local_dim())));
  }
  return within(dev, 1e-12);
}

Outcome alignment_equivalence(const Ctx& c) {
  Rng rng = make_rng(c.seed, "alignment.equivalence");
  const double eps = 1e-9;
  double bad = 0;
  for (int t = 0; t < 6; ++t) {
    const StateVector psi = random_alignable_state(c.space, rng, 0.7);
    std::vector<StateVector> others;
    others.push_back(random_symmetry(c.space, rng, true).apply(psi));
    others.push_back(random_alignable_state(c.space, rng, 0.7));
    // Reweight the occupied sectors.
    StateVector skewed = psi;
    const auto dec = decompose_alignable(psi);
    auto sb = SectorBasis::of(c.space);
    if (dec->terms.size() >= 2) {
      const auto& t0 = dec->terms.front();
      skewed.amplitudes()[ix(sb->member(t0.relation, t0.anchor))] *= 1.7;
      skewed.amplitudes().normalize();
      others.push_back(skewed);
    }
    for (const auto& phi : others) {
      const bool obs = observationally_equivalent(density(psi), density(phi), eps);
      const bool sym = symmetry_equivalent_alignable(psi, phi, eps);
      if (obs != sym) bad += 1;
    }
    if (!symmetry_equivalent_alignable(psi, others.front(), eps)) bad += 1;
  }
  return within(bad, 0, "count of disagreements");
}

// ---- traces ----------------------------------------------------------------

std::vector<EmbeddingSpec> all_embeddings(const GroupSpec& G, int Nk, int M, Rng& rng) {
  std::vector<EmbeddingSpec> out;
  for (int i = 1; i <= Nk; ++i) out.push_back(EmbeddingSpec::particle_frame(Nk, M, i));
  if (G.is_cyclic()) {
    std::uniform_int_distribution<int> pm(1, 5);
    std::vector<double> masses;
    for (int k = 0; k < Nk; ++k) masses.push_back(pm(rng));
    out.push_back(EmbeddingSpec::center_of_mass(Nk, M, masses));
  }
  out.push_back(EmbeddingSpec::custom_frame(M, random_symmetry(SpaceLabel(G, Nk), rng)));
  out.push_back(EmbeddingSpec::relational(Nk, M));
  return out;
}

Outcome traces_adjoint(const Ctx& c) {
  if (c.N < 2) return skip("needs N + M >= 2");
  Rng rng = make_rng(c.seed, "traces.adjoint");
  const int Nk = c.N - 1;
  const SpaceLabel kept = c.space.with_particles(Nk);
  double dev = 0;
  for (const auto& spec : all_embeddings(c.group, Nk, 1, rng)) {
    for (int t = 0; t < 2; ++t) {
      const Operator A = normalized(random_operator(kept, rng));
      const Operator rho = normalized(random_operator(c.space, rng));
      const cplx lhs = hs_inner(embed(spec, A, Membership::Project), rho);
      const cplx rhs = hs_inner(A, trace_out(spec, rho));
      dev = std::max(dev, std::abs(lhs - rhs));
    }
  }
  return within(dev, 1e-10);
}

Outcome traces_trel_factorization(const Ctx& c) {
  if (c.N < 2) return skip("needs N + M >= 2");
  Rng rng = make_rng(c.seed, "traces.trel_factorization");
  double dev = 0;
  for (int t = 0; t < 2; ++t) {
    const Operator rho = normalized(random_operator(c.space, rng));
    const Operator direct = trel(rho, 1);
    const Operator chained = project_phys(partial_trace_last(project_phys(rho), 1));
    dev = std::max(dev, max_abs_diff(direct, chained));
    if (c.space.dim() <= 1024) dev = std::max(dev, max_abs_diff(direct, trel_dense(rho, 1)));
  }
  return within(dev, 1e-12);
}

Outcome traces_embedding_dependence(const Ctx&) {
  // Small n, where the two traces differ by more than 0.1 in Hilbert-Schmidt norm.
  const double half_pi = std::numbers::pi / 2;
  const ParadoxConfig small = ParadoxConfig::with_default_masses(5, 1, 1, 2, half_pi);
  auto gap = [](const ParadoxConfig& cfg) {
    const StateVector Psi = build_three_particle_state(cfg).first;
    const Operator one = trinv(EmbeddingSpec::particle_frame(2, 1, 1), Psi);
    const Operator com = trinv(EmbeddingSpec::center_of_mass(2, 1, {cfg.m1, cfg.m2}), Psi);
    return frobenius_norm(one - com);
  };
  const double d_small = gap(small);
  // At n = 16 the gap is sqrt(2) / (2n).
  const ParadoxConfig big{16, 3, 2, 5, half_pi, 2, 3};
  const double d_big = gap(big);
  const double big_dev = std::abs(d_big - std::sqrt(2.0) / 32.0);
  Outcome o = exceeds(d_small, 0.1,
                      "n=5,a=b=1: gap " + std::to_string(d_small) + "; n=16: gap " + std::to_string(d_big));
  o.passed = o.passed && big_dev < 1e-12;
  return o;
}

Outcome traces_norm_reduction(const Ctx& c) {
  if (c.N < 2) return skip("needs N + M >= 2");
  Rng rng = make_rng(c.seed, "traces.norm_reduction");
  double dev = 0;
  const double n = static_cast<double>(c.space.local_dim());
  for (int M = 1; M <= std::min(2, c.N - 1); ++M) {
    const int Nk = c.N - M;
    const SpaceLabel kept = c.space.with_particles(Nk);
    auto sbM = SectorBasis::of(c.space.with_particles(M));
    const std::size_t S = c.space.with_particles(M).dim();
    const std::size_t R = c.space.dim() / c.space.local_dim();
    std::uniform_int_distribution<std::size_t> pr(0, R - 1);
    for (int t = 0; t < 10; ++t) {
      const std::size_t r1 = pr(rng);
      std::size_t r2 = pr(rng);
      if (t % 2 == 0) r2 = (r2 / S) * S + sbM->translate(r1 % S, r2 % c.space.local_dim());
      const Operator X = outer(sector_state(c.space, r1, 0), sector_state(c.space, r2, 0));
      bool linked = false;
      for (std::size_t g = 0; g < c.space.local_dim(); ++g) linked = linked || sbM->translate(r2 % S, g) == r1 % S;
      Operator expect = Operator::zero(kept);
      if (linked) {
        expect = outer(sector_state(kept, r1 / S, 0), sector_state(kept, r2 / S, 0));
        expect.matrix() /= n;
      }
      dev = std::max(dev, max_abs_diff(trel(X, M), expect));
    }
  }
  return within(dev, 1e-12);
}

// ---- paradox ---------------------------------------------------------------

ParadoxConfig reference_config() { return ParadoxConfig{16, 3, 2, 5, std::numbers::pi / 2, 2, 3}; }

Outcome paradox_frame_invariance(const Ctx& c) {
  const ParadoxReport rep = run_paradox(reference_config());
  double dev = 0;
  for (const char* m : {"trinv1", "com", "trel", "conditional"}) dev = std::max(dev, rep.method(m).frame_difference);
  Rng rng = make_rng(c.seed, "paradox.frame_invariance");
  const auto [Psi, Psi_prime] = build_three_particle_state(reference_config());
  for (int t = 0; t < 20; ++t) {
    const auto spec = EmbeddingSpec::custom_frame(1, random_symmetry(reference_config().space(2), rng));
    dev = std::max(dev, frobenius_norm(trinv(spec, Psi) - trinv(spec, Psi_prime)));
  }
  const double standard = rep.method("standard").frame_difference;
  Outcome o = within(dev, 1e-10, "standard partial trace frame difference " + std::to_string(standard));
  o.passed = o.passed && standard > 0.1;
  return o;
}

Outcome paradox_relational_state(const Ctx&) {
  const ParadoxConfig cfg = reference_config();
  const StateVector Psi = build_three_particle_state(cfg).first;
  const StateVector psi = build_two_particle_state(cfg);
  const Operator P = physical_projector(psi.space());
  const Operator target = P * density(psi) * P;
  const double dev = max_abs_diff(conditional_state(Psi, 1, tolerance()), target);
  Operator scaled = target;
  scaled.matrix() /= static_cast<double>(cfg.n);
  const double trel_dev = max_abs_diff(trel(Psi, 1), scaled);
  return within(std::max(dev, trel_dev), 1e-10, "conditional state vs Pi|psi><psi|Pi, Trel vs the same over n");
}

Outcome paradox_relational_expectations(const Ctx& c) {
  const ParadoxConfig cfg = reference_config();
  const StateVector Psi = build_three_particle_state(cfg).first;
  const StateVector psi = build_two_particle_state(cfg);
  const Operator cond = conditional_state(Psi, 1, tolerance());
  const Operator inv = project_inv(density(psi));
  Rng rng = make_rng(c.seed, "paradox.relational_expectations");
  double dev = 0;
  for (int t = 0; t < 50; ++t) {
    const Operator A = project_phys(normalized(random_hermitian(psi.space(), rng)));
    const cplx lhs = A.matrix().cwiseProduct(cond.matrix().transpose()).sum();
    const cplx rhs = A.matrix().cwiseProduct(inv.matrix().transpose()).sum();
    dev = std::max(dev, std::abs(lhs - rhs));
  }
  return within(dev, 1e-9);
}

// ---- cli -------------------------------------------------------------------

Outcome cli_roundtrip(const Ctx& c) {
  Rng a = make_rng(c.seed, "cli.deterministic_roundtrip");
  Rng b = make_rng(c.seed, "cli.deterministic_roundtrip");
  const StateVector s1 = random_state(c.space, a);
  const StateVector s2 = random_state(c.space, b);
  double dev = max_abs_diff(s1, s2);
  const StateVector s3 = state_from_json(json::parse(to_json(s1).dump()));
  if ((s3.amplitudes().array() != s1.amplitudes().array()).any()) dev = std::max(dev, 1.0);
  const SpaceLabel small = c.space.dim() > 512 ? c.space.with_particles(1) : c.space;
  const Operator op = random_operator(small, a);
  const Operator back = operator_from_json(json::parse(to_json(op).dump()));
  if ((back.matrix().array() != op.matrix().array()).any()) dev = std::max(dev, 1.0);
  const SymmetryElement u = random_symmetry(c.space, a, true);
  const SymmetryElement v = symmetry_from_json(json::parse(to_json(u).dump()));
  if (u.assignment() != v.assignment() || u.phase() != v.phase()) dev = std::max(dev, 1.0);
  return within(dev, 0, "bit-exact");
}

const std::vector<Check>& registry() {
  static const std::vector<Check> checks = {
      {"group.orthogonality", "sum_g conj(chi(g)) chi'(g) = |G| delta", {"group"}, group_orthogonality},
      {"group.character_order", "chi(g)^|G| = 1", {"group"}, group_character_order},
      {"group.commutativity", "compose is commutative on 1000 random pairs", {"group"}, group_commutativity},
      {"hilbert.basis_index_bijection", "basis_index and its inverse compose to the identity", {"hilbert"},
       hilbert_bijection},
      {"hilbert.partial_trace_positive", "partial trace of 100 random PSD matrices stays PSD", {"hilbert"},
       hilbert_partial_trace_positive},
      {"hilbert.tensor_associative", "(A x B) x C = A x (B x C) elementwise", {"hilbert"},
       hilbert_tensor_associative},
      {"sectors.eigenbasis", "U_g^N |h;chi> = chi(g) |h;chi>", {"sectors"}, sectors_eigenbasis},
      {"sectors.completeness", "the |h;chi> form an orthonormal basis", {"sectors"}, sectors_completeness},
      {"sectors.coherent_average", "G-average of U_g^N equals sum_h |h;1><h;1|, trace |G|^(N-1)", {"sectors"},
       sectors_coherent_average},
      {"sectors.projector_factorization", "(Pi^N x 1) Pi^(N+M) = Pi^N x Pi^M", {"sectors"},
       sectors_projector_factorization},
      {"symmetry.closure", "products of symmetry elements compose assignments pointwise", {"symmetry"},
       symmetry_closure},
      {"symmetry.commutes_with_sectors", "symmetry elements commute with every Pi_h", {"symmetry"},
       symmetry_commutes_with_sectors},
      {"symmetry.condition3", "symmetry elements commute with global translations", {"symmetry"},
       symmetry_condition3},
      {"symmetry.bruteforce_enumeration", "U_sym has |G|^(|G|^(N-1)) elements, all recognized", {"symmetry", "bruteforce"},
       symmetry_bruteforce},
      {"invariants.self_adjoint_idempotent", "algebra projections are idempotent and HS-self-adjoint",
       {"invariants"}, invariants_self_adjoint},
      {"invariants.strict_inclusions", "witnesses for A_phys < A_alg < A_inv < A'_inv", {"invariants"},
       invariants_strict_inclusions},
      {"invariants.fixed_points", "projection fixed points equal the commutant of the generators",
       {"invariants", "bruteforce"}, invariants_fixed_points},
      {"invariants.superselection", "invariant operators have no cross-sector coherences outside chi = 1",
       {"invariants"}, invariants_superselection},
      {"invariants.bruteforce_twirl", "literal U_sym twirl equals the closed-form projection",
       {"invariants", "bruteforce"}, invariants_bruteforce_twirl},
      {"alignment.uniqueness", "aligned forms are deterministic and unique up to phase", {"alignment"},
       alignment_uniqueness},
      {"alignment.projection_formula", "invariant projection of an alignable state in closed form",
       {"alignment"}, alignment_projection_formula},
      {"alignment.physical_weight", "<psi|Pi_phys|psi> = 1/|G| for alignable psi", {"alignment"},
       alignment_physical_weight},
      {"alignment.equivalence", "observational and symmetry equivalence agree on alignable states",
       {"alignment"}, alignment_equivalence},
      {"traces.adjoint", "<Phi(A), rho> = <A, Tr(rho)> for every embedding kind", {"traces"}, traces_adjoint},
      {"traces.trel_factorization", "Trel = Pi^N o Tr_M o Pi^(N+M)", {"traces"}, traces_trel_factorization},
      {"traces.embedding_dependence", "Trinv^1 and Trinv^CoM differ on the paradox state", {"traces"},
       traces_embedding_dependence},
      {"traces.norm_reduction", "Trel of |h_N,h_M;1><j_N,j_M;1| is 1/|G| or 0", {"traces"},
       traces_norm_reduction},
      {"paradox.frame_invariance", "traces agree on Psi and Psi', the standard partial trace does not",
       {"paradox"}, paradox_frame_invariance},
      {"paradox.relational_state", "conditional state equals Pi_phys|psi><psi|Pi_phys", {"paradox"},
       paradox_relational_state},
      {"paradox.relational_expectations", "conditional state reproduces relational expectation values",
       {"paradox"}, paradox_relational_expectations},
      {"cli.deterministic_roundtrip", "seeded output is deterministic and JSON round-trips exactly", {"cli"},
       cli_roundtrip},
  };
  return checks;
}

bool selected(const Check& c, const std::string& selector) {
  if (selector == "all") return true;
  return std::find(c.selectors.begin(), c.selectors.end(), selector) != c.selectors.end();
}

}  // namespace

bool SuiteResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_selectors() {
  static const std::vector<std::string> s = {"all",       "group",     "hilbert", "sectors",
                                             "symmetry",  "invariants", "alignment", "traces",
                                             "paradox",   "cli",       "bruteforce"};
  return s;
}

Operator literal_usym_twirl(const Operator& rho, std::size_t limit) {
  const auto all = enumerate_usym(rho.space(), limit);
  Operator out = Operator::zero(rho.space());
  for (const auto& u : all) out += u.conjugate(rho);
  out.matrix() /= static_cast<double>(all.size());
  return out;
}

SuiteResult run_suite(const GroupSpec& group, int particles, const SuiteOptions& opts) {
  const auto& sel = suite_selectors();
  if (std::find(sel.begin(), sel.end(), opts.selector) == sel.end()) {
    throw StructuralError("unknown suite '" + opts.selector + "'");
  }
  if (particles < 1) throw StructuralError("need at least one particle");
  const std::size_t dim = checked_dim(group, particles, opts.max_dim);
  if (dim == 0) {
    throw DomainError("dimension |G|^N of " + group.name() + " with N=" + std::to_string(particles) +
                      " exceeds the cap of " + std::to_string(opts.max_dim));
  }
  const Ctx ctx{group, particles, SpaceLabel(group, particles), opts.seed};
  std::vector<const Check*> todo;
  for (const auto& c : registry()) {
    if (selected(c, opts.selector)) todo.push_back(&c);
  }

  SuiteResult result;
  result.group = group.name();
  result.particles = particles;
  result.selector = opts.selector;
  result.seed = opts.seed;
  result.checks.resize(todo.size());
  const auto start = std::chrono::steady_clock::now();
  std::atomic<std::size_t> next{0};
  std::mutex progress_mu;
  auto worker = [&]() {
    for (std::size_t k = next++; k < todo.size(); k = next++) {
      const Check& c = *todo[k];
      CheckResult& out = result.checks[k];
      out.name = c.name;
      out.reference = c.reference;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        const Outcome o = c.run(ctx);
        out.passed = o.passed;
        out.skipped = o.skipped;
        out.max_deviation = o.deviation;
        out.threshold = o.threshold;
        out.note = o.note;
      } catch (const std::exception& e) {
        out.passed = false;
        out.note = std::string("exception: ") + e.what();
      }
      out.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      if (opts.progress) {
        std::lock_guard lock(progress_mu);
        *opts.progress << (out.skipped ? "[skip] " : out.passed ? "[pass] " : "[FAIL] ") << out.name
                       << "  dev=" << out.max_deviation << "  " << static_cast<long>(out.runtime_ms) << " ms"
                       << (out.note.empty() ? "" : "  (" + out.note + ")") << '\n';
      }
    }
  };
  const unsigned workers = std::max(1u, opts.workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(result.checks.begin(), result.checks.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  result.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

nlohmann::json to_json(const SuiteResult& result) {
  json checks = json::array();
  for (const auto& c : result.checks) {
    checks.push_back(json{{"name", c.name},
                          {"reference", c.reference},
                          {"passed", c.passed},
                          {"skipped", c.skipped},
                          {"max_deviation", c.max_deviation},
                          {"threshold", c.threshold},
                          {"runtime_ms", c.runtime_ms},
                          {"note", c.note}});
  }
  return json{{"group", result.group},
              {"particles", result.particles},
              {"suite", result.selector},
              {"seed", result.seed},
              {"all_passed", result.all_passed()},
              {"runtime_seconds", result.runtime_seconds},
              {"checks", std::move(checks)}};
}

}  // namespace qrf
