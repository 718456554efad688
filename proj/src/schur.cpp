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

#include "stinespring/schur.hpp"

#include <cmath>

#include "stinespring/errors.hpp"
#include "stinespring/tensor.hpp"

namespace stinespring {

namespace {

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

RealMatrix SchurBasis::block_action(const Permutation& sigma) const {
  const auto dim = static_cast<Eigen::Index>(labels.size());
  RealMatrix out = RealMatrix::Zero(dim, dim);
  for (const auto& b : blocks) {
    const RealMatrix r = young_orthogonal_matrix(b.lambda, sigma);
    for (int i = 0; i < b.dim_sym; ++i) {
      for (int j = 0; j < b.dim_sym; ++j) {
        for (int a = 0; a < b.dim_unitary; ++a) {
          out(b.offset + i * b.dim_unitary + a, b.offset + j * b.dim_unitary + a) = r(i, j);
        }
      }
    }
  }
  return out;
}

SchurBasis schur_transform(int d, int n) {
  if (d < 1 || n < 1) throw DomainError("schur_transform needs d, n >= 1");
  const std::size_t dim = checked_pow(d, n);
  require_entries(dim, dim, "Schur transform");
  SchurBasis sb;
  sb.d = d;
  sb.n = n;
  sb.u_schur = ComplexMatrix::Zero(dim, dim);
  const auto perms = all_permutations(n);
  std::size_t offset = 0;

  for (const auto& lambda : partitions(n, d)) {
    const OrthogonalRep rep = orthogonal_rep(lambda);
    const int ds = rep.dim();
    const int du = static_cast<int>(dim_irrep_unitary(d, lambda));
    std::vector<RealMatrix> r;
    for (const auto& p : perms) r.push_back(rep.matrix(p));

    // E_{i1} for every row i.
    std::vector<ComplexMatrix> e;
    const double scale = ds / factorial(n);
    for (int i = 0; i < ds; ++i) {
      std::vector<Complex> c(perms.size());
      for (std::size_t s = 0; s < perms.size(); ++s) c[s] = scale * r[s](i, 0);
      e.push_back(permutation_sum(c, n, d));
    }

    std::vector<ComplexVector> mult;
    for (Eigen::Index col = 0; col < e[0].cols() && static_cast<int>(mult.size()) < du; ++col) {
      ComplexVector v = e[0].col(col);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : mult) v -= q * q.dot(v);
      }
      const double nv = v.norm();
      if (nv > 1e-8) mult.push_back(v / nv);
    }
    if (static_cast<int>(mult.size()) != du) {
      throw Error("Schur transform: multiplicity space of " + lambda.str() +
                  " has wrong dimension");
    }

    sb.blocks.push_back({lambda, ds, du, offset});
    for (int i = 0; i < ds; ++i) {
      for (int a = 0; a < du; ++a) {
        sb.u_schur.col(offset + i * du + a) = e[i] * mult[a];
        sb.labels.push_back({lambda, i, a});
      }
    }
    offset += static_cast<std::size_t>(ds) * du;
  }
  if (offset != dim) throw Error("Schur transform: blocks do not fill the space");
  return sb;
}

SnFourierBasis sn_fourier_basis(int n) {
  SnFourierBasis b;
  b.n = n;
  for (const auto& lambda : partitions(n)) {
    const int ds = static_cast<int>(dim_irrep_sym(lambda));
    for (int i = 0; i < ds; ++i) {
      for (int j = 0; j < ds; ++j) b.labels.push_back({lambda, i, j});
    }
  }
  return b;
}

ComplexMatrix sn_qft(int n) {
  if (n < 1) throw DomainError("sn_qft needs n >= 1");
  const auto perms = all_permutations(n);
  const auto m = perms.size();
  require_entries(m, m, "S_n Fourier transform");
  ComplexMatrix q(m, m);
  std::size_t row = 0;
  for (const auto& lambda : partitions(n)) {
    const OrthogonalRep rep = orthogonal_rep(lambda);
    const int ds = rep.dim();
    const double scale = std::sqrt(ds / factorial(n));
    for (std::size_t s = 0; s < m; ++s) {
      const RealMatrix r = rep.matrix(perms[s]);
      for (int i = 0; i < ds; ++i) {
        for (int j = 0; j < ds; ++j) q(row + i * ds + j, s) = scale * r(i, j);
      }
    }
    row += static_cast<std::size_t>(ds) * ds;
  }
  return q;
}

ComplexMatrix controlled_permutation(int d, int n, bool inverse) {
  const auto perms = all_permutations(n);
  const std::size_t block = checked_pow(d, n);
  const std::size_t dim = checked_mul(perms.size(), block);
  require_entries(dim, dim, "controlled permutation");
  ComplexMatrix c = ComplexMatrix::Zero(dim, dim);
  for (std::size_t s = 0; s < perms.size(); ++s) {
    const auto map = permutation_basis_map(inverse ? perms[s].inverse() : perms[s], d);
    for (std::size_t x = 0; x < block; ++x) c(s * block + map[x], s * block + x) = 1.0;
  }
  return c;
}

}  // namespace stinespring
