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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stinespring/permutation.hpp"
#include "stinespring/types.hpp"

namespace stinespring {

/// Integer partition, parts weakly decreasing. The empty partition is n = 0.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  /// Throws DomainError unless the parts are positive and nonincreasing.
  explicit Partition(std::vector<int> p);
  Partition(std::initializer_list<int> p) : Partition(std::vector<int>(p)) {}

  int n() const;
  int length() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const { return parts[i]; }
  std::string str() const;  // "(2,1)"

  auto operator<=>(const Partition&) const = default;
};

/// Partitions of n with at most max_len parts, lexicographically decreasing.
std::vector<Partition> partitions(int n, int max_len);
std::vector<Partition> partitions(int n);

/// Cycle type of a permutation as a partition.
Partition cycle_type(const Permutation& p);

/// Hook-length formula.
std::uint64_t dim_irrep_sym(const Partition& lambda);
/// Weyl dimension of the U(d) irrep λ; 0 when l(λ) > d.
std::uint64_t dim_irrep_unitary(int d, const Partition& lambda);

/// χ_λ on the class `mu`, by Murnaghan–Nakayama.
std::int64_t character(const Partition& lambda, const Partition& mu);

/// A standard Young tableau, stored as the (row, col) cell of each entry
/// 0..n-1.
struct Tableau {
  std::vector<int> row;
  std::vector<int> col;
  int content(int k) const { return col[k] - row[k]; }
  bool operator==(const Tableau&) const = default;
};

/// All standard tableaux of shape λ. Entries are placed in increasing order,
/// trying rows top to bottom, so the row-reading tableau comes first.
std::vector<Tableau> standard_tableaux(const Partition& lambda);

/// Young's orthogonal form of the irrep λ.
struct OrthogonalRep {
  Partition lambda;
  std::vector<Tableau> tableaux;
  /// generators[k] represents the transposition (k, k+1), 0-based.
  std::vector<RealMatrix> generators;

  int dim() const { return static_cast<int>(tableaux.size()); }
  RealMatrix matrix(const Permutation& sigma) const;
};

OrthogonalRep orthogonal_rep(const Partition& lambda);
RealMatrix young_orthogonal_matrix(const Partition& lambda, const Permutation& sigma);

/// Σ_σ c[σ] U_σ on (C^d)^{⊗n}, with c indexed by all_permutations(n).
ComplexMatrix permutation_sum(const std::vector<Complex>& coeffs, int n, int d);

/// Π_λ = (dim[λ]/n!) Σ_σ χ_λ(σ) U_σ on (C^d)^{⊗n}.
ComplexMatrix isotypical_projector(const Partition& lambda, int d);

/// Wg on the class `mu` at dimension d, from the character expansion over
/// λ ⊢ n with l(λ) ≤ d.
double weingarten(const Partition& mu, int d);

/// Wg(·, d) on S_n tabulated per conjugacy class.
struct WeingartenTable {
  int n = 0;
  int d = 0;
  std::map<Partition, double> values;

  WeingartenTable(int n, int d);
  double operator()(const Permutation& sigma) const;
  /// Wg(τ⁻¹σ) for all pairs, indexed like all_permutations(n).
  RealMatrix pair_matrix() const;
};

/// E_U[U^{⊗n} a U^{†⊗n}] = Σ_{σ,τ} Wg(τ⁻¹σ) Tr[U_σ† a] U_τ.
ComplexMatrix haar_twirl(const ComplexMatrix& a, int d, int n);

/// E_U[(1 ⊗ U^{⊗n}) x (1 ⊗ U^{†⊗n})] where U acts on the listed factors of
/// `shape`, all of the same dimension.
ComplexMatrix partial_haar_twirl(const ComplexMatrix& x, const SystemShape& shape,
                                 const std::vector<int>& twirled);

}  // namespace stinespring
