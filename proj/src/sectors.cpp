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

#include "qrflab/sectors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "qrflab/config.hpp"

namespace qrf {
namespace {

using Index = Eigen::Index;

Index ix(std::size_t i) { return static_cast<Index>(i); }

}  // namespace

RelationTuple relation_of(const std::vector<GroupElement>& config) {
  if (config.empty()) throw StructuralError("relation_of: empty configuration");
  RelationTuple out;
  const GroupElement g1_inv = inverse(config.front());
  for (std::size_t k = 1; k < config.size(); ++k) out.relations.push_back(compose(config[k], g1_inv));
  return out;
}

std::size_t relation_index(const SpaceLabel& space, const RelationTuple& h) {
  if (h.relations.size() != static_cast<std::size_t>(space.particles() - 1)) {
    throw StructuralError("relation tuple length must be N-1");
  }
  std::size_t r = 0;
  for (const auto& g : h.relations) r = r * space.local_dim() + space.group().index_of(g);
  return r;
}

RelationTuple relation_tuple(const SpaceLabel& space, std::size_t index) {
  const std::size_t n = space.local_dim();
  RelationTuple out;
  out.relations.resize(static_cast<std::size_t>(space.particles() - 1), space.group().identity());
  for (std::size_t k = out.relations.size(); k-- > 0;) {
    out.relations[k] = space.group().element(index % n);
    index /= n;
  }
  if (index != 0) throw StructuralError("relation index out of range");
  return out;
}

std::shared_ptr<const SectorBasis> SectorBasis::of(const SpaceLabel& space) {
  using Key = std::pair<std::vector<int>, int>;
  static std::shared_mutex mu;
  static std::map<Key, std::shared_ptr<const SectorBasis>> cache;
  Key key{space.group().moduli(), space.particles()};
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto built = std::make_shared<const SectorBasis>(space);
  std::unique_lock lock(mu);
  auto [it, inserted] = cache.emplace(key, built);
  return it->second;
}

SectorBasis::SectorBasis(const SpaceLabel& space)
    : space_(space),
      n_(space.local_dim()),
      relations_(space.dim() / space.local_dim()),
      member_(space.dim()),
      relation_(space.dim()),
      anchor_(space.dim()),
      inv_sqrt_n_(1.0 / std::sqrt(static_cast<double>(space.local_dim()))) {
  const GroupSpec& G = space.group();
  const int N = space.particles();
  std::vector<std::size_t> config(static_cast<std::size_t>(N), 0);
  for (std::size_t idx = 0; idx < space.dim(); ++idx) {
    // config holds the digits of idx; advance it like an odometer at the end.
    std::size_t r = 0;
    for (int k = 1; k < N; ++k) r = r * n_ + G.sub(config[static_cast<std::size_t>(k)], config[0]);
    relation_[idx] = r;
    anchor_[idx] = config[0];
    member_[r * n_ + config[0]] = idx;
    for (std::size_t k = config.size(); k-- > 0;) {
      if (++config[k] < n_) break;
      config[k] = 0;
    }
  }
}

std::size_t SectorBasis::relation_digit(std::size_t r, int k) const {
  const int N = space_.particles();
  if (k == 0) return 0;
  if (k < 0 || k >= N) throw StructuralError("relation_digit: k out of range");
  for (int s = N - 1; s > k; --s) r /= n_;
  return r % n_;
}

std::size_t SectorBasis::relation_from_digits(const std::vector<std::size_t>& h) const {
  if (h.size() != static_cast<std::size_t>(space_.particles() - 1)) {
    throw StructuralError("relation tuple length must be N-1");
  }
  std::size_t r = 0;
  for (std::size_t d : h) r = r * n_ + d;
  return r;
}

cplx SectorBasis::amplitude(std::size_t k, std::size_t g) const {
  return space_.group().chi(k, space_.group().neg(g)) * inv_sqrt_n_;
}

std::size_t SectorBasis::translate(std::size_t basis, std::size_t g) const {
  const GroupSpec& G = space_.group();
  std::size_t out = 0;
  std::size_t scale = 1;
  for (int k = 0; k < space_.particles(); ++k) {
    out += G.add(basis % n_, g) * scale;
    basis /= n_;
    scale *= n_;
  }
  return out;
}

StateVector sector_state(const SpaceLabel& space, const RelationTuple& h, const Character& chi) {
  if (chi.moduli() != space.group().moduli()) throw StructuralError("character of a different group");
  std::vector<long long> k(chi.index().begin(), chi.index().end());
  return sector_state(space, relation_index(space, h),
                      space.group().index_of(GroupElement(space.group(), k)));
}

StateVector sector_state(const SpaceLabel& space, std::size_t r, std::size_t k) {
  auto sb = SectorBasis::of(space);
  if (r >= sb->relations() || k >= sb->order()) throw StructuralError("sector label out of range");
  StateVector out = StateVector::zero(space);
  for (std::size_t g = 0; g < sb->order(); ++g) out.amplitudes()[ix(sb->member(r, g))] = sb->amplitude(k, g);
  return out;
}

Operator sector_projector(const SpaceLabel& space, const RelationTuple& h) {
  return sector_projector(space, relation_index(space, h));
}

Operator sector_projector(const SpaceLabel& space, std::size_t r) {
  auto sb = SectorBasis::of(space);
  if (r >= sb->relations()) throw StructuralError("relation index out of range");
  Operator out = Operator::zero(space);
  for (std::size_t g = 0; g < sb->order(); ++g) {
    Index i = ix(sb->member(r, g));
    out.matrix()(i, i) = 1.0;
  }
  return out;
}

Operator global_translation(const SpaceLabel& space, std::size_t g) {
  auto sb = SectorBasis::of(space);
  Operator out = Operator::zero(space);
  for (std::size_t i = 0; i < space.dim(); ++i) out.matrix()(ix(sb->translate(i, g)), ix(i)) = 1.0;
  return out;
}

Operator physical_projector(const SpaceLabel& space) {
  auto sb = SectorBasis::of(space);
  const double w = 1.0 / static_cast<double>(sb->order());
  Operator out = Operator::zero(space);
  for (std::size_t g = 0; g < sb->order(); ++g) {
    for (std::size_t i = 0; i < space.dim(); ++i) out.matrix()(ix(sb->translate(i, g)), ix(i)) += w;
  }
  return out;
}

Operator physical_projector_from_sectors(const SpaceLabel& space) {
  auto sb = SectorBasis::of(space);
  return from_relational_block(space, Mat::Identity(ix(sb->relations()), ix(sb->relations())));
}

Operator nontrivial_projector(const SpaceLabel& space, std::size_t r) {
  auto sb = SectorBasis::of(space);
  if (r >= sb->relations()) throw StructuralError("relation index out of range");
  Operator out = Operator::zero(space);
  Vec c = Vec::Zero(ix(sb->relations()));
  c[ix(r)] = 1.0;
  add_nontrivial(out, c);
  return out;
}

Operator change_of_basis(const SpaceLabel& space) {
  auto sb = SectorBasis::of(space);
  const std::size_t n = sb->order();
  Operator out = Operator::zero(space);
  for (std::size_t r = 0; r < sb->relations(); ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t g = 0; g < n; ++g) {
        out.matrix()(ix(sb->member(r, g)), ix(r * n + k)) = sb->amplitude(k, g);
      }
    }
  }
  return out;
}

Mat relational_block(const Operator& rho) {
  auto sb = SectorBasis::of(rho.space());
  const std::size_t n = sb->order();
  const Index R = ix(sb->relations());
  const Index d = ix(rho.space().dim());
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  Mat rows = Mat::Zero(R, d);
  for (Index h = 0; h < R; ++h) {
    for (std::size_t g = 0; g < n; ++g) rows.row(h) += rho.matrix().row(ix(sb->member(static_cast<std::size_t>(h), g)));
  }
  Mat out = Mat::Zero(R, R);
  for (Index j = 0; j < R; ++j) {
    for (std::size_t g = 0; g < n; ++g) out.col(j) += rows.col(ix(sb->member(static_cast<std::size_t>(j), g)));
  }
  return out * (s * s);
}

Vec relational_amplitudes(const StateVector& psi) {
  auto sb = SectorBasis::of(psi.space());
  const std::size_t n = sb->order();
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  Vec out = Vec::Zero(ix(sb->relations()));
  for (std::size_t r = 0; r < sb->relations(); ++r) {
    cplx acc = 0;
    for (std::size_t g = 0; g < n; ++g) acc += psi[sb->member(r, g)];
    out[ix(r)] = acc * s;
  }
  return out;
}

Operator from_relational_block(const SpaceLabel& space, const Mat& R) {
  auto sb = SectorBasis::of(space);
  const std::size_t n = sb->order();
  if (R.rows() != ix(sb->relations()) || R.cols() != R.rows()) {
    throw StructuralError("relational block has the wrong shape");
  }
  const double w = 1.0 / static_cast<double>(n);
  Operator out = Operator::zero(space);
  Mat& m = out.matrix();
  for (std::size_t i = 0; i < space.dim(); ++i) {
    const Index h = ix(sb->relation_at(i));
    for (std::size_t j = 0; j < space.dim(); ++j) m(ix(i), ix(j)) = R(h, ix(sb->relation_at(j))) * w;
  }
  return out;
}

void add_nontrivial(Operator& op, const Vec& c) {
  auto sb = SectorBasis::of(op.space());
  const std::size_t n = sb->order();
  if (c.size() != ix(sb->relations())) throw StructuralError("coefficient vector has the wrong length");
  const double w = 1.0 / static_cast<double>(n);
  Mat& m = op.matrix();
  for (std::size_t r = 0; r < sb->relations(); ++r) {
    const cplx a = c[ix(r)];
    if (a == cplx(0)) continue;
    for (std::size_t g = 0; g < n; ++g) {
      const Index i = ix(sb->member(r, g));
      for (std::size_t gp = 0; gp < n; ++gp) {
        const Index j = ix(sb->member(r, gp));
        m(i, j) += a * ((g == gp ? 1.0 : 0.0) - w);
      }
    }
  }
}

Vec nontrivial_weights(const Operator& rho) {
  auto sb = SectorBasis::of(rho.space());
  const std::size_t n = sb->order();
  const double w = 1.0 / static_cast<double>(n);
  Vec out = Vec::Zero(ix(sb->relations()));
  const Mat& m = rho.matrix();
  for (std::size_t r = 0; r < sb->relations(); ++r) {
    cplx diag = 0;
    cplx all = 0;
    for (std::size_t g = 0; g < n; ++g) {
      const Index i = ix(sb->member(r, g));
      diag += m(i, i);
      for (std::size_t gp = 0; gp < n; ++gp) all += m(i, ix(sb->member(r, gp)));
    }
    out[ix(r)] = diag - all * w;
  }
  return out;
}

Vec nontrivial_weights(const StateVector& psi) {
  auto sb = SectorBasis::of(psi.space());
  const std::size_t n = sb->order();
  Vec w = relational_amplitudes(psi);
  Vec out = Vec::Zero(ix(sb->relations()));
  for (std::size_t r = 0; r < sb->relations(); ++r) {
    double diag = 0;
    for (std::size_t g = 0; g < n; ++g) diag += std::norm(psi[sb->member(r, g)]);
    out[ix(r)] = diag - std::norm(w[ix(r)]);
  }
  return out;
}

Mat sector_diagonal(const Operator& rho) {
  auto sb = SectorBasis::of(rho.space());
  const std::size_t n = sb->order();
  Mat A(ix(n), ix(n));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t k = 0; k < n; ++k) A(ix(g), ix(k)) = sb->amplitude(k, g);
  }
  Mat out(ix(sb->relations()), ix(n));
  Mat B(ix(n), ix(n));
  for (std::size_t r = 0; r < sb->relations(); ++r) {
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t gp = 0; gp < n; ++gp) {
        B(ix(g), ix(gp)) = rho.matrix()(ix(sb->member(r, g)), ix(sb->member(r, gp)));
      }
    }
    out.row(ix(r)) = (A.adjoint() * B * A).diagonal().transpose();
  }
  return out;
}

}  // namespace qrf
