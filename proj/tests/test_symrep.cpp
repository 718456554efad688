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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "stinespring/errors.hpp"
#include "stinespring/haar.hpp"
#include "stinespring/montecarlo.hpp"
#include "stinespring/symrep.hpp"
#include "stinespring/tensor.hpp"

using namespace stinespring;

namespace {

// All weakly decreasing sequences summing to n, found by filtering every
// composition of n.
std::vector<std::vector<int>> partitions_by_filter(int n, int max_len) {
  std::vector<std::vector<int>> out;
  if (n == 0) return {{}};
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts{1};
    for (int k = 0; k < n - 1; ++k) {
      if (mask >> k & 1) parts.push_back(1);
      else ++parts.back();
    }
    if (std::is_sorted(parts.rbegin(), parts.rend()) && static_cast<int>(parts.size()) <= max_len) out.push_back(parts);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Fillings of λ by 1..n with increasing rows and columns, by trying every
// permutation of the entries.
int count_tableaux_brute(const Partition& l) {
  const int n = l.n();
  std::vector<int> fill(n);
  std::iota(fill.begin(), fill.end(), 0);
  int count = 0;
  do {
    bool ok = true;
    int pos = 0;
    std::vector<std::vector<int>> grid;
    for (int p : l.parts) {
      grid.emplace_back(fill.begin() + pos, fill.begin() + pos + p);
      pos += p;
    }
    for (std::size_t r = 0; r < grid.size() && ok; ++r)
      for (std::size_t c = 0; c < grid[r].size() && ok; ++c) {
        if (c > 0 && grid[r][c] < grid[r][c - 1]) ok = false;
        if (r > 0 && grid[r][c] < grid[r - 1][c]) ok = false;
      }
    count += ok;
  } while (std::next_permutation(fill.begin(), fill.end()));
  return count;
}

double fact(int n) { return n <= 1 ? 1.0 : n * fact(n - 1); }

Eigen::MatrixXd gram(int n, int d) {
  const auto perms = all_permutations(n);
  Eigen::MatrixXd g(perms.size(), perms.size());
  for (std::size_t s = 0; s < perms.size(); ++s)
    for (std::size_t t = 0; t < perms.size(); ++t)
      g(s, t) = std::pow(double(d), (perms[s].inverse() * perms[t]).cycle_count());
  return g;
}

}  // namespace

TEST_CASE("partitions") {
  CHECK(partitions(3, 3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions(3, 2) == std::vector<Partition>{{3}, {2, 1}});
  CHECK(partitions(0, 2) == std::vector<Partition>{Partition{}});
  for (int n = 1; n <= 8; ++n)
    for (int len = 1; len <= n; ++len) {
      const auto got = partitions(n, len);
      const auto want = partitions_by_filter(n, len);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].parts == want[i]);
    }
  CHECK_THROWS_AS(Partition({1, 2}), DomainError);
}

TEST_CASE("irrep dimensions") {
  CHECK(dim_irrep_sym(Partition{5}) == 1);
  CHECK(dim_irrep_sym(Partition{2, 1}) == 2);
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t sum = 0;
    for (const auto& l : partitions(n)) {
      CHECK(dim_irrep_sym(l) == static_cast<std::uint64_t>(count_tableaux_brute(l)));
      CHECK(standard_tableaux(l).size() == dim_irrep_sym(l));
      sum += dim_irrep_sym(l) * dim_irrep_sym(l);
    }
    CHECK(sum == static_cast<std::uint64_t>(fact(n)));
  }
  CHECK(dim_irrep_unitary(2, Partition{2}) == 3);
  CHECK(dim_irrep_unitary(2, Partition{1, 1}) == 1);
  CHECK(dim_irrep_unitary(2, Partition{1, 1, 1}) == 0);
  // Schur–Weyl count.
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 4; ++d) {
      std::uint64_t total = 0;
      for (const auto& l : partitions(n, d)) total += dim_irrep_sym(l) * dim_irrep_unitary(d, l);
      CHECK(total == static_cast<std::uint64_t>(std::pow(d, n) + 0.5));
    }
}

TEST_CASE("Young orthogonal generators") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions(n)) {
      const OrthogonalRep rep = orthogonal_rep(l);
      const RealMatrix one = RealMatrix::Identity(rep.dim(), rep.dim());
      for (std::size_t k = 0; k < rep.generators.size(); ++k) {
        const RealMatrix& g = rep.generators[k];
        CHECK((g - g.transpose()).cwiseAbs().maxCoeff() < 1e-15);
        CHECK((g * g - one).cwiseAbs().maxCoeff() < 1e-12);
        if (k + 1 < rep.generators.size()) {
          const RealMatrix& h = rep.generators[k + 1];
          CHECK((g * h * g - h * g * h).cwiseAbs().maxCoeff() < 1e-12);
        }
        for (std::size_t j = k + 2; j < rep.generators.size(); ++j)
          CHECK((g * rep.generators[j] - rep.generators[j] * g).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
}

TEST_CASE("Young orthogonal matrices form a representation") {
  CHECK((young_orthogonal_matrix(Partition{2, 1}, Permutation::identity(3)) - RealMatrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() == 0.0);
  const RealMatrix s = young_orthogonal_matrix(Partition{2, 1}, Permutation::adjacent(3, 0));
  CHECK((s * s - RealMatrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-15);
  CHECK(std::abs(s.trace()) < 1e-15);

  Rng rng(1);
  for (int n = 2; n <= 5; ++n) {
    const auto perms = all_permutations(n);
    std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
    for (const auto& l : partitions(n)) {
      const OrthogonalRep rep = orthogonal_rep(l);
      for (int t = 0; t < 100; ++t) {
        const auto& a = perms[pick(rng)];
        const auto& b = perms[pick(rng)];
        const RealMatrix ab = rep.matrix(a * b);
        REQUIRE((ab - rep.matrix(a) * rep.matrix(b)).cwiseAbs().maxCoeff() <= 1e-12);
        const RealMatrix ma = rep.matrix(a);
        REQUIRE((ma * ma.transpose() - RealMatrix::Identity(rep.dim(), rep.dim())).cwiseAbs().maxCoeff() <= 1e-12);
      }
    }
  }
}

TEST_CASE("characters") {
  CHECK(character(Partition{1, 1}, Partition{2}) == -1);
  CHECK(character(Partition{2}, Partition{2}) == 1);
  CHECK_THROWS_AS(character(Partition{2}, Partition{3}), DomainError);
  for (int n = 1; n <= 5; ++n) {
    for (const auto& l : partitions(n)) {
      CHECK(character(l, Partition(std::vector<int>(n, 1))) == static_cast<std::int64_t>(dim_irrep_sym(l)));
      const OrthogonalRep rep = orthogonal_rep(l);
      for (const auto& p : all_permutations(n)) {
        REQUIRE(std::abs(rep.matrix(p).trace() - character(l, cycle_type(p))) <= 1e-10);
      }
    }
  }
}

TEST_CASE("character table orthogonality at n = 4") {
  // Column orthogonality Σ_λ χ_λ(μ)χ_λ(ν) = δ_μν n!/|class μ|, class sizes counted directly.
  const int n = 4;
  std::map<Partition, int> size;
  for (const auto& p : all_permutations(n)) ++size[cycle_type(p)];
  for (const auto& mu : partitions(n))
    for (const auto& nu : partitions(n)) {
      double s = 0;
      for (const auto& l : partitions(n)) s += double(character(l, mu)) * character(l, nu);
      CHECK(s == (mu == nu ? fact(n) / size[mu] : 0.0));
    }
}

TEST_CASE("isotypical projectors") {
  const ComplexMatrix swap = permutation_unitary(Permutation({1, 0}), 2);
  CHECK(max_abs_diff(isotypical_projector(Partition{2}, 2), (identity(4) + swap) / 2.0) < 1e-15);
  CHECK(max_abs_diff(isotypical_projector(Partition{1, 1}, 2), (identity(4) - swap) / 2.0) < 1e-15);
  CHECK(hermitian_rank(isotypical_projector(Partition{2}, 2)) == 3);
  CHECK(max_abs(isotypical_projector(Partition{1, 1, 1}, 2)) == 0.0);

  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 3; ++d) {
      const std::size_t dim = std::pow(d, n) + 0.5;
      ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
      const auto ls = partitions(n);
      std::vector<ComplexMatrix> pis;
      for (const auto& l : ls) pis.push_back(isotypical_projector(l, d));
      for (std::size_t a = 0; a < ls.size(); ++a) {
        const auto& p = pis[a];
        sum += p;
        CHECK(max_abs_diff(p * p, p) < 1e-10);
        CHECK(is_hermitian(p, 1e-14));
        const int want = static_cast<int>(dim_irrep_sym(ls[a]) * dim_irrep_unitary(d, ls[a]));
        CHECK(std::abs(p.trace().real() - want) < 1e-10);
        if (want > 0) CHECK(hermitian_rank(p) == want);
        for (std::size_t b = a + 1; b < ls.size(); ++b) CHECK(max_abs(p * pis[b]) < 1e-10);
      }
      CHECK(max_abs_diff(sum, identity(dim)) < 1e-10);
    }
}

TEST_CASE("Weingarten values") {
  for (int d = 1; d <= 5; ++d) CHECK(std::abs(weingarten(Partition{1}, d) - 1.0 / d) < 1e-15);
  for (int d = 2; d <= 5; ++d) {
    const double dd = d;
    CHECK(std::abs(weingarten(Partition{1, 1}, d) - 1 / (dd * dd - 1)) < 1e-14);
    CHECK(std::abs(weingarten(Partition{2}, d) + 1 / (dd * (dd * dd - 1))) < 1e-14);
  }
}

TEST_CASE("Weingarten matrix is the Gram pseudo-inverse") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 1; d <= 4; ++d) {
      const Eigen::MatrixXd g = gram(n, d);
      const Eigen::MatrixXd w = WeingartenTable(n, d).pair_matrix();
      const Eigen::MatrixXd pinv = g.completeOrthogonalDecomposition().pseudoInverse();
      INFO("n=" << n << " d=" << d);
      CHECK((w - pinv).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((g * w * g - g).cwiseAbs().maxCoeff() <= 1e-9 * g.cwiseAbs().maxCoeff());
      if (d >= n) CHECK((w * g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("Haar twirl exact properties") {
  Rng rng(2);
  for (auto [n, d] : {std::pair{1, 3}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    const std::size_t dim = std::pow(d, n) + 0.5;
    CHECK(max_abs_diff(haar_twirl(identity(dim), d, n), identity(dim)) < 1e-12);
    for (const auto& p : all_permutations(n)) {
      const ComplexMatrix u = permutation_unitary(p, d);
      CHECK(max_abs_diff(haar_twirl(u, d, n), u) < 1e-12);
    }
    const ComplexMatrix a = ginibre(dim, dim, rng);
    const ComplexMatrix t = haar_twirl(a, d, n);
    CHECK(max_abs_diff(haar_twirl(t, d, n), t) < 1e-12);
    const ComplexMatrix un = kron_power(haar_unitary(d, rng), n);
    CHECK(max_abs_diff(un * t, t * un) < 1e-9);
    for (const auto& p : all_permutations(n)) {
      const ComplexMatrix u = permutation_unitary(p, d);
      CHECK(max_abs_diff(haar_twirl(u * a * u.adjoint(), d, n), u * t * u.adjoint()) < 1e-12);
    }
  }
}

TEST_CASE("Haar twirl against Monte-Carlo") {
  ComplexMatrix a = ComplexMatrix::Zero(4, 4);
  a(0, 1) = 1.0;  // |00><01|
  const ComplexMatrix exact = haar_twirl(a, 2, 2);
  const McEstimate est = monte_carlo_mean(100000, 17, [&](Rng& rng) {
    const ComplexMatrix u = kron_power(haar_unitary(2, rng), 2);
    return ComplexMatrix(u * a * u.adjoint());
  });
  const McComparison cmp = compare_to_estimate(exact, est, family_sigmas(exact.size()));
  INFO("max z " << cmp.max_z);
  CHECK(cmp.pass());
}

TEST_CASE("partial Haar twirl") {
  Rng rng(3);
  // No spectators reduces to the full twirl.
  const ComplexMatrix a = ginibre(9, 9, rng);
  CHECK(max_abs_diff(partial_haar_twirl(a, {3, 3}, {0, 1}), haar_twirl(a, 3, 2)) < 1e-13);
  // Invariant block.
  const ComplexMatrix y = ginibre(2, 2, rng);
  const ComplexMatrix yi = kron(y, identity(9));
  CHECK(max_abs_diff(partial_haar_twirl(yi, {2, 3, 3}, {1, 2}), yi) < 1e-13);
  // Γ twirled on one side gives 1/d.
  for (int d : {2, 3}) {
    ComplexVector g = ComplexVector::Zero(d * d);
    for (int i = 0; i < d; ++i) g[i * d + i] = 1.0;
    CHECK(max_abs_diff(partial_haar_twirl(g * g.adjoint(), {d, d}, {1}), identity(d * d) / double(d)) < 1e-14);
  }
  // Spectator in the middle, twirled factors out of order, against Monte-Carlo.
  const SystemShape shape{2, 3, 2};
  const ComplexMatrix x = ginibre(12, 12, rng);
  const ComplexMatrix exact = partial_haar_twirl(x, shape, {2, 0});
  const McEstimate est = monte_carlo_mean(20000, 5, [&](Rng& r) {
    const ComplexMatrix u = haar_unitary(2, r);
    const ComplexMatrix w = kron(kron(u, identity(3)), u);
    return ComplexMatrix(w * x * w.adjoint());
  });
  CHECK(compare_to_estimate(exact, est, family_sigmas(exact.size())).pass());
  CHECK_THROWS_AS(partial_haar_twirl(x, shape, {0, 1}), ShapeMismatch);
}
