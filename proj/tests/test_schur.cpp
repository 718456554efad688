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

#include <catch_amalgamated.hpp>

#include <cmath>

#include "stinespring/errors.hpp"
#include "stinespring/haar.hpp"
#include "stinespring/schur.hpp"
#include "stinespring/tensor.hpp"

using namespace stinespring;

namespace {

double fact(int n) { return n <= 1 ? 1.0 : n * fact(n - 1); }

// Left-regular representation on C^{n!}: |τ> ↦ |στ>.
ComplexMatrix left_regular(const Permutation& s) {
  const auto perms = all_permutations(s.size());
  ComplexMatrix m = ComplexMatrix::Zero(perms.size(), perms.size());
  for (std::size_t t = 0; t < perms.size(); ++t) m(lexicographic_rank(s * perms[t]), t) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("two-qubit Schur basis") {
  const SchurBasis sb = schur_transform(2, 2);
  REQUIRE(sb.labels.size() == 4);
  for (int k = 0; k < 3; ++k) CHECK(sb.labels[k].lambda == Partition{2});
  CHECK(sb.labels[3].lambda == Partition{1, 1});
  const ComplexMatrix swap = permutation_unitary(Permutation({1, 0}), 2);
  const ComplexMatrix d = sb.u_schur.adjoint() * swap * sb.u_schur;
  ComplexMatrix want = identity(4);
  want(3, 3) = -1.0;
  CHECK(max_abs_diff(d, want) < 1e-14);
  // The singlet.
  const double s = 1 / std::sqrt(2.0);
  CHECK(std::abs(std::abs(sb.u_schur(1, 3)) - s) < 1e-14);
  CHECK(std::abs(sb.u_schur(1, 3) + sb.u_schur(2, 3)) < 1e-14);
}

TEST_CASE("single system Schur transform is the identity") {
  for (int d : {2, 3, 4}) CHECK(max_abs_diff(schur_transform(d, 1).u_schur, identity(d)) < 1e-15);
}

TEST_CASE("Schur block sizes") {
  const SchurBasis sb = schur_transform(2, 3);
  REQUIRE(sb.blocks.size() == 2);
  CHECK(sb.blocks[0].lambda == Partition{3});
  CHECK(sb.blocks[0].dim_sym * sb.blocks[0].dim_unitary == 4);
  CHECK(sb.blocks[1].lambda == Partition{2, 1});
  CHECK(sb.blocks[1].dim_sym == 2);
  CHECK(sb.blocks[1].dim_unitary == 2);
}

TEST_CASE("Schur transform intertwines permutations") {
  for (int d : {2, 3})
    for (int n = 1; n <= 4; ++n) {
      const SchurBasis sb = schur_transform(d, n);
      INFO("d=" << d << " n=" << n);
      CHECK(isometry_defect(sb.u_schur) <= 1e-10);
      for (int k = 0; k + 1 < n; ++k) {
        const Permutation s = Permutation::adjacent(n, k);
        const ComplexMatrix lhs = sb.u_schur.adjoint() * permutation_unitary(s, d) * sb.u_schur;
        CHECK(max_abs_diff(lhs, sb.block_action(s).cast<Complex>()) <= 1e-9);
      }
      // Π_λ U_σ in the Schur basis is R_λ(σ) ⊗ 1 on the λ block only.
      if (n == 3) {
        const Permutation sigma({2, 0, 1});
        for (const auto& b : sb.blocks) {
          const ComplexMatrix lhs =
              sb.u_schur.adjoint() * isotypical_projector(b.lambda, d) * permutation_unitary(sigma, d) * sb.u_schur;
          RealMatrix want = RealMatrix::Zero(lhs.rows(), lhs.cols());
          const RealMatrix r = young_orthogonal_matrix(b.lambda, sigma);
          for (int i = 0; i < b.dim_sym; ++i)
            for (int j = 0; j < b.dim_sym; ++j)
              for (int a = 0; a < b.dim_unitary; ++a)
                want(b.offset + i * b.dim_unitary + a, b.offset + j * b.dim_unitary + a) = r(i, j);
          CHECK(max_abs_diff(lhs, want.cast<Complex>()) <= 1e-9);
        }
      }
    }
}

TEST_CASE("Schur transform commutes with collective unitaries blockwise") {
  // U^{⊗n} in the Schur basis is ⊕ 1 ⊗ q_λ(U): no coupling between rows i.
  Rng rng(4);
  const int d = 2, n = 3;
  const SchurBasis sb = schur_transform(d, n);
  const ComplexMatrix u = kron_power(haar_unitary(d, rng), n);
  const ComplexMatrix m = sb.u_schur.adjoint() * u * sb.u_schur;
  for (std::size_t a = 0; a < sb.labels.size(); ++a)
    for (std::size_t b = 0; b < sb.labels.size(); ++b) {
      const auto& la = sb.labels[a];
      const auto& lb = sb.labels[b];
      if (la.lambda != lb.lambda || la.i != lb.i) CHECK(std::abs(m(a, b)) < 1e-12);
    }
  // Same q_λ(U) for every row i.
  const auto& blk = sb.blocks[1];
  const auto q0 = m.block(blk.offset, blk.offset, blk.dim_unitary, blk.dim_unitary);
  const auto q1 = m.block(blk.offset + blk.dim_unitary, blk.offset + blk.dim_unitary, blk.dim_unitary, blk.dim_unitary);
  CHECK(max_abs_diff(q0, q1) < 1e-12);
}

TEST_CASE("S_2 Fourier transform") {
  const ComplexMatrix q = sn_qft(2);
  const double s = 1 / std::sqrt(2.0);
  ComplexMatrix want(2, 2);
  want << s, s, s, -s;
  CHECK(max_abs_diff(q, want) < 1e-15);
}

TEST_CASE("S_n Fourier transform") {
  for (int n = 1; n <= 4; ++n) {
    const ComplexMatrix q = sn_qft(n);
    CHECK(isometry_defect(q) <= 1e-10);
    const auto fb = sn_fourier_basis(n);
    CHECK(fb.labels.size() == static_cast<std::size_t>(fact(n)));
    const ComplexVector uniform = ComplexVector::Constant(q.cols(), 1 / std::sqrt(fact(n)));
    const ComplexVector img = q * uniform;
    CHECK(std::abs(img[0] - 1.0) < 1e-12);
    CHECK(img.tail(img.size() - 1).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(fb.labels[0].lambda == Partition{n});

    // QFT L(σ) QFT† = ⊕_λ R_λ(σ) ⊗ 1 in (λ, i, j) order.
    for (const auto& s : all_permutations(n)) {
      const ComplexMatrix got = q * left_regular(s) * q.adjoint();
      ComplexMatrix want = ComplexMatrix::Zero(q.rows(), q.cols());
      std::size_t off = 0;
      for (const auto& l : partitions(n)) {
        const RealMatrix r = young_orthogonal_matrix(l, s);
        const int ds = static_cast<int>(r.rows());
        want.block(off, off, ds * ds, ds * ds) = kron(r.cast<Complex>(), identity(ds));
        off += ds * ds;
      }
      REQUIRE(max_abs_diff(got, want) <= 1e-10);
    }
  }
}

TEST_CASE("controlled permutation") {
  const int d = 2, n = 2;
  const ComplexMatrix c = controlled_permutation(d, n, false);
  const ComplexMatrix ci = controlled_permutation(d, n, true);
  CHECK(max_abs_diff(c * ci, identity(8)) == 0.0);
  CHECK(max_abs_diff(c.block(0, 0, 4, 4), identity(4)) == 0.0);
  CHECK(max_abs_diff(c.block(4, 4, 4, 4), permutation_unitary(Permutation({1, 0}), 2)) == 0.0);
  CHECK(max_abs(c.block(0, 4, 4, 4)) == 0.0);
  // Control order follows all_permutations, shared with the Fourier transform.
  const int m = 3;
  const auto perms = all_permutations(m);
  const ComplexMatrix c3 = controlled_permutation(2, m, false);
  for (std::size_t s = 0; s < perms.size(); ++s)
    CHECK(max_abs_diff(c3.block(s * 8, s * 8, 8, 8), permutation_unitary(perms[s], 2)) == 0.0);
  CHECK(max_abs_diff(c3 * controlled_permutation(2, m, true), identity(48)) == 0.0);
}
