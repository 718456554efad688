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
#include <span>
#include <vector>

#include "stinespring/permutation.hpp"
#include "stinespring/types.hpp"

namespace stinespring {

ComplexMatrix identity(std::size_t d);

/// Kronecker product; result dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron_all(std::span<const ComplexMatrix> factors);
/// `m` tensored with itself `copies` times.
ComplexMatrix kron_power(const ComplexMatrix& m, int copies);

/// Trace over the listed factors of a square operator on `shape`.
ComplexMatrix partial_trace(const ComplexMatrix& m, const SystemShape& shape,
                            std::vector<int> traced);

/// Index map of a factor reordering: entry j is the old flattened index of
/// the new basis vector j, where new factor k is old factor order[k].
std::vector<std::size_t> factor_reorder_map(const SystemShape& shape,
                                            std::span<const int> order);
SystemShape reorder_shape(const SystemShape& shape, std::span<const int> order);

/// Reorders the tensor factors of a square operator: new factor k is old
/// factor order[k] (on rows and columns).
ComplexMatrix permute_factors(const ComplexMatrix& m, const SystemShape& shape,
                              std::span<const int> order);
/// Reorders only the row factors (for isometries and kets).
ComplexMatrix permute_row_factors(const ComplexMatrix& m,
                                  const SystemShape& shape,
                                  std::span<const int> order);

/// (1/n!) Σ_π P_π m P_π^† where P_π permutes the n blocks jointly.
/// `blocks` lists n congruent groups of factor indices covering the shape.
ComplexMatrix permutation_twirl(const ComplexMatrix& m, const SystemShape& shape,
                                const std::vector<std::vector<int>>& blocks);

// Small numerical helpers used throughout.

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& m, double tol);
/// max |U†U − 1| entrywise.
double isometry_defect(const ComplexMatrix& v);

/// Eigenvalues of (m + m†)/2 in increasing order.
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m);
double min_eigenvalue(const ComplexMatrix& m);
/// Number of eigenvalues of a Hermitian matrix above rel_tol * max |λ|.
int hermitian_rank(const ComplexMatrix& m, double rel_tol = 1e-8);

/// Hermitian square root. Eigenvalues in [-clip, 0) are set to zero; more
/// negative ones raise DomainError.
ComplexMatrix hermitian_sqrt(const ComplexMatrix& m, double clip = 1e-12);
/// Hermitian inverse square root of a positive definite matrix.
ComplexMatrix hermitian_inv_sqrt(const ComplexMatrix& m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);
double operator_norm(const ComplexMatrix& m);

/// Column-major vectorization: vec(X)[p + q·rows] = X(p, q).
ComplexVector vectorize(const ComplexMatrix& x);
ComplexMatrix unvectorize(const ComplexVector& v, std::size_t rows,
                          std::size_t cols);

}  // namespace stinespring
