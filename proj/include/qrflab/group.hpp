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

/// @file group.hpp
/// Finite Abelian groups presented as products of cyclic factors Z_{n_1} x ... x Z_{n_k}.
///
/// Elements and characters are indexed by a fixed mixed-radix order with the
/// last factor fastest; index 0 is the identity (resp. the trivial character).
/// Every other module addresses group elements through these indices.

#include <complex>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace qrf {

class GroupElement;
class Character;

class GroupSpec {
 public:
  /// Throws StructuralError on an empty list or any modulus below 2.
  explicit GroupSpec(std::vector<int> moduli);

  /// Parses "Z6", "z2xZ3", ... (case-insensitive, 'x' separated).
  static GroupSpec parse(std::string_view text);

  const std::vector<int>& moduli() const { return moduli_; }
  std::size_t order() const { return order_; }
  std::size_t factors() const { return moduli_.size(); }
  bool is_cyclic() const { return moduli_.size() == 1; }
  std::string name() const;

  GroupElement identity() const;
  GroupElement element(std::size_t index) const;
  std::size_t index_of(const GroupElement& g) const;
  Character character(std::size_t index) const;

  // Index-level arithmetic.
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t neg(std::size_t a) const;
  std::size_t sub(std::size_t a, std::size_t b) const { return add(a, neg(b)); }

  /// chi_k(g) for character index k and element index g.
  std::complex<double> chi(std::size_t k, std::size_t g) const;

  /// Residue of element index g in factor j.
  int digit(std::size_t g, std::size_t j) const;

  bool operator==(const GroupSpec& other) const { return moduli_ == other.moduli_; }
  bool operator!=(const GroupSpec& other) const { return !(*this == other); }

 private:
  std::vector<int> moduli_;
  std::vector<std::size_t> strides_;
  std::vector<std::size_t> phase_weights_;  // lcm / n_j
  std::size_t order_ = 1;
  std::size_t exponent_ = 1;  // lcm of the moduli
  std::shared_ptr<const std::vector<std::complex<double>>> roots_;
};

class GroupElement {
 public:
  /// Residues are reduced into [0, n_j); negative input is allowed.
  GroupElement(const GroupSpec& spec, std::vector<long long> residues);
  GroupElement(std::vector<int> moduli, std::vector<long long> residues);

  const std::vector<int>& residues() const { return residues_; }
  const std::vector<int>& moduli() const { return moduli_; }

  bool operator==(const GroupElement& other) const {
    return moduli_ == other.moduli_ && residues_ == other.residues_;
  }
  bool operator!=(const GroupElement& other) const { return !(*this == other); }

 private:
  std::vector<int> moduli_;
  std::vector<int> residues_;
};

class Character {
 public:
  Character(const GroupSpec& spec, std::vector<long long> index);

  const std::vector<int>& index() const { return index_; }
  const std::vector<int>& moduli() const { return moduli_; }
  bool is_trivial() const;

  bool operator==(const Character& other) const {
    return moduli_ == other.moduli_ && index_ == other.index_;
  }

 private:
  std::vector<int> moduli_;
  std::vector<int> index_;
};

GroupElement compose(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& a);
std::complex<double> eval_character(const Character& chi, const GroupElement& g);
std::vector<GroupElement> enumerate_elements(const GroupSpec& spec);
std::vector<Character> enumerate_characters(const GroupSpec& spec);

}  // namespace qrf
