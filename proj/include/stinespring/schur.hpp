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

#include <vector>

#include "stinespring/symrep.hpp"
#include "stinespring/types.hpp"

namespace stinespring {

/// Schur basis of (C^d)^{⊗n}. Labels run over λ ⊢ n with l(λ) ≤ d in
/// partitions() order, then row i of the S_n irrep, then multiplicity index α;
/// the column of (λ, i, α) is offset(λ) + i·dim 𝒰 + α.
struct SchurBasis {
  struct Label {
    Partition lambda;
    int i;
    int alpha;
  };
  struct Block {
    Partition lambda;
    int dim_sym;
    int dim_unitary;
    std::size_t offset;
  };

  int d = 0;
  int n = 0;
  std::vector<Label> labels;
  std::vector<Block> blocks;
  ComplexMatrix u_schur;

  /// ⊕_λ R_λ(σ) ⊗ 1, the image of U_σ in the Schur basis.
  RealMatrix block_action(const Permutation& sigma) const;
};

/// Multiplicity vectors come from Gram–Schmidt over the columns of the matrix
/// unit E^λ_{11}, so the U(d) gauge is fixed but arbitrary.
SchurBasis schur_transform(int d, int n);

/// Label basis of C^{n!}: (λ, i, j) for λ ⊢ n in partitions() order.
struct SnFourierBasis {
  struct Label {
    Partition lambda;
    int i;
    int j;
  };
  int n = 0;
  std::vector<Label> labels;
};
SnFourierBasis sn_fourier_basis(int n);

/// <λ,i,j|QFT|σ> = sqrt(dim[λ]/n!) R_λ(σ)_{ij}; columns follow
/// all_permutations(n).
ComplexMatrix sn_qft(int n);

/// Σ_σ |σ><σ| ⊗ U_σ (or U_σ† when `inverse`) on C^{n!} ⊗ (C^d)^{⊗n}, control
/// register first.
ComplexMatrix controlled_permutation(int d, int n, bool inverse);

}  // namespace stinespring
