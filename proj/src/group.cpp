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

#include "qrflab/group.hpp"

#include <cctype>
#include <numbers>
#include <numeric>

#include "qrflab/config.hpp"

namespace qrf {
namespace {

constexpr std::size_t kDirectCharacterLimit = 64;

// exp(2 pi i p / q) with p already reduced into [0, q).
std::complex<double> root_of_unity(std::size_t p, std::size_t q) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(p) /
                             static_cast<double>(q));
}

int reduce(long long v, int n) {
  long long r = v % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

GroupSpec::GroupSpec(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw StructuralError("group needs at least one cyclic factor");
  for (int n : moduli_) {
    if (n < 2) throw StructuralError("cyclic factor orders must be at least 2");
  }
  strides_.assign(moduli_.size(), 1);
  for (std::size_t j = moduli_.size(); j-- > 0;) {
    strides_[j] = order_;
    order_ *= static_cast<std::size_t>(moduli_[j]);
  }
  for (int n : moduli_) exponent_ = std::lcm(exponent_, static_cast<std::size_t>(n));
  for (int n : moduli_) phase_weights_.push_back(exponent_ / static_cast<std::size_t>(n));
  if (order_ > kDirectCharacterLimit) {
    auto table = std::make_shared<std::vector<std::complex<double>>>(exponent_);
    for (std::size_t p = 0; p < exponent_; ++p) (*table)[p] = root_of_unity(p, exponent_);
    roots_ = std::move(table);
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<int> moduli;
  std::size_t pos = 0;
  auto fail = [&]() -> GroupSpec {
    throw StructuralError("cannot parse group spec '" + std::string(text) + "'");
  };
  while (true) {
    if (pos >= text.size() || std::tolower(static_cast<unsigned char>(text[pos])) != 'z') fail();
    ++pos;
    std::size_t start = pos;
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > (1LL << 30)) fail();
      ++pos;
    }
    if (pos == start) fail();
    moduli.push_back(static_cast<int>(value));
    if (pos == text.size()) break;
    if (std::tolower(static_cast<unsigned char>(text[pos])) != 'x') fail();
    ++pos;
  }
  return GroupSpec(std::move(moduli));
}

std::string GroupSpec::name() const {
  std::string out;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    if (j) out += 'x';
    out += 'Z' + std::to_string(moduli_[j]);
  }
  return out;
}

GroupElement GroupSpec::identity() const { return element(0); }

GroupElement GroupSpec::element(std::size_t index) const {
  if (index >= order_) throw StructuralError("group element index out of range");
  std::vector<long long> r(moduli_.size());
  for (std::size_t j = 0; j < moduli_.size(); ++j) r[j] = digit(index, j);
  return GroupElement(*this, std::move(r));
}

std::size_t GroupSpec::index_of(const GroupElement& g) const {
  if (g.moduli() != moduli_) throw StructuralError("element belongs to a different group");
  std::size_t idx = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    idx += static_cast<std::size_t>(g.residues()[j]) * strides_[j];
  }
  return idx;
}

Character GroupSpec::character(std::size_t index) const {
  if (index >= order_) throw StructuralError("character index out of range");
  std::vector<long long> k(moduli_.size());
  for (std::size_t j = 0; j < moduli_.size(); ++j) k[j] = digit(index, j);
  return Character(*this, std::move(k));
}

int GroupSpec::digit(std::size_t g, std::size_t j) const {
  return static_cast<int>((g / strides_[j]) % static_cast<std::size_t>(moduli_[j]));
}

std::size_t GroupSpec::add(std::size_t a, std::size_t b) const {
  if (moduli_.size() == 1) return (a + b) % order_;
  std::size_t out = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    auto n = static_cast<std::size_t>(moduli_[j]);
    out += ((a / strides_[j] + b / strides_[j]) % n) * strides_[j];
  }
  return out;
}

std::size_t GroupSpec::neg(std::size_t a) const {
  if (moduli_.size() == 1) return (order_ - a) % order_;
  std::size_t out = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    auto n = static_cast<std::size_t>(moduli_[j]);
    out += ((n - (a / strides_[j]) % n) % n) * strides_[j];
  }
  return out;
}

std::complex<double> GroupSpec::chi(std::size_t k, std::size_t g) const {
  std::size_t p = 0;
  for (std::size_t j = 0; j < moduli_.size(); ++j) {
    auto n = static_cast<std::size_t>(moduli_[j]);
    std::size_t kj = (k / strides_[j]) % n;
    std::size_t gj = (g / strides_[j]) % n;
    p = (p + (kj * gj % n) * phase_weights_[j]) % exponent_;
  }
  if (roots_) return (*roots_)[p];
  return root_of_unity(p, exponent_);
}

GroupElement::GroupElement(const GroupSpec& spec, std::vector<long long> residues)
    : GroupElement(spec.moduli(), std::move(residues)) {}

GroupElement::GroupElement(std::vector<int> moduli, std::vector<long long> residues)
    : moduli_(std::move(moduli)) {
  for (int n : moduli_) {
    if (n < 2) throw StructuralError("cyclic factor orders must be at least 2");
  }
  if (residues.size() != moduli_.size()) {
    throw StructuralError("element has wrong number of residues");
  }
  residues_.resize(residues.size());
  for (std::size_t j = 0; j < residues.size(); ++j) residues_[j] = reduce(residues[j], moduli_[j]);
}

Character::Character(const GroupSpec& spec, std::vector<long long> index)
    : moduli_(spec.moduli()) {
  if (index.size() != moduli_.size()) throw StructuralError("character has wrong index length");
  index_.resize(index.size());
  for (std::size_t j = 0; j < index.size(); ++j) index_[j] = reduce(index[j], moduli_[j]);
}

bool Character::is_trivial() const {
  for (int k : index_) {
    if (k != 0) return false;
  }
  return true;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  if (a.moduli() != b.moduli()) throw StructuralError("compose: elements of different groups");
  std::vector<long long> r(a.residues().size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    r[j] = static_cast<long long>(a.residues()[j]) + b.residues()[j];
  }
  return GroupElement(a.moduli(), std::move(r));
}

GroupElement inverse(const GroupElement& a) {
  std::vector<long long> r(a.residues().size());
  for (std::size_t j = 0; j < r.size(); ++j) r[j] = -static_cast<long long>(a.residues()[j]);
  return GroupElement(a.moduli(), std::move(r));
}

std::complex<double> eval_character(const Character& chi, const GroupElement& g) {
  if (chi.moduli() != g.moduli()) {
    throw StructuralError("eval_character: character and element of different groups");
  }
  double phase = 0.0;
  for (std::size_t j = 0; j < g.moduli().size(); ++j) {
    phase += static_cast<double>(static_cast<long long>(chi.index()[j]) * g.residues()[j] %
                                 g.moduli()[j]) /
             g.moduli()[j];
  }
  return std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi * phase));
}

std::vector<GroupElement> enumerate_elements(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  out.reserve(spec.order());
  for (std::size_t i = 0; i < spec.order(); ++i) out.push_back(spec.element(i));
  return out;
}

std::vector<Character> enumerate_characters(const GroupSpec& spec) {
  std::vector<Character> out;
  out.reserve(spec.order());
  for (std::size_t i = 0; i < spec.order(); ++i) out.push_back(spec.character(i));
  return out;
}

}  // namespace qrf
