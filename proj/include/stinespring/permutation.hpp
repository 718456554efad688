// Copyright 2026 The Stinespring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "stinespring/types.hpp"

namespace stinespring {

/// Element of S_n in one-line notation: mapping()[k] is the image of k.
///
/// Composition follows functions: (a * b)(k) = a(b(k)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `mapping` is a bijection on {0..n-1}.
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int n);
  /// The transposition exchanging k and k+1.
  static Permutation adjacent(int n, int k);

  int size() const { return static_cast<int>(map_.size()); }
  int operator()(int k) const { return map_[k]; }
  const std::vector<int>& mapping() const { return map_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Cycle lengths sorted in nonincreasing order (fixed points included).
  std::vector<int> cycle_type() const;
  int cycle_count() const;

  /// Indices k_1..k_m with *this = s_{k_1} s_{k_2} ... s_{k_m}, obtained by
  /// bubble-sorting the one-line notation.
  std::vector<int> adjacent_decomposition() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> map_;
};

/// All of S_n in lexicographic one-line order. This enumeration is shared by
/// every module that labels a register by group elements.
std::vector<Permutation> all_permutations(int n);

/// Position of `p` in all_permutations(p.size()).
std::size_t lexicographic_rank(const Permutation& p);

/// For each flattened basis index x of (C^d)^{⊗n}, the index of U_σ|x>.
/// U_σ moves the content of slot k to slot σ(k):
///   |i_1 … i_n> ↦ |i_{σ^{-1}(1)} … i_{σ^{-1}(n)}>.
std::vector<std::size_t> permutation_basis_map(const Permutation& sigma,
                                               int d);

/// The d^n × d^n permutation matrix U_σ. Satisfies U_σ U_τ = U_{στ}.
ComplexMatrix permutation_unitary(const Permutation& sigma, int d);

}  // namespace stinespring
