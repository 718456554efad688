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
#include "stinespring/superchannel.hpp"
#include "stinespring/symrep.hpp"
#include "stinespring/tensor.hpp"

using namespace stinespring;

namespace {

ComplexVector gamma_vec(int d) {
  ComplexVector g = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) g[i * d + i] = 1.0;
  return g;
}

// E_U[((1 ⊗ U) ψ_ρ (1 ⊗ U†))^{⊗n}] using the twirl on the purifying factors.
ComplexMatrix twirled_purification(const ComplexMatrix& rho, int n) {
  const int d = static_cast<int>(rho.rows());
  const ComplexVector psi = kron(hermitian_sqrt(rho), identity(d)) * gamma_vec(d);
  std::vector<int> b;
  for (int k = 0; k < n; ++k) b.push_back(2 * k + 1);
  return partial_haar_twirl(kron_power(psi * psi.adjoint(), n), SystemShape::uniform(d, 2 * n), b);
}

}  // namespace

TEST_CASE("R_n operator") {
  CHECK(max_abs_diff(r_n_operator({2, 1}), identity(4) / 2.0) < 1e-14);
  for (int n = 1; n <= 3; ++n) {
    const ComplexMatrix r = r_n_operator({2, n});
    CHECK(min_eigenvalue(r) >= -1e-10);
    CHECK(is_hermitian(r, 1e-13));
    std::vector<std::vector<int>> pairs;
    for (int k = 0; k < n; ++k) pairs.push_back({k, n + k});
    CHECK(max_abs_diff(permutation_twirl(r, SystemShape::uniform(2, 2 * n), pairs), r) <= 1e-10);
  }
}

TEST_CASE("R_n against Monte-Carlo") {
  const int d = 2, n = 2;
  const ComplexMatrix exact = r_n_operator({d, n});
  const ComplexMatrix g = gamma_vec(d) * gamma_vec(d).adjoint();
  const std::vector<int> order{0, 2, 1, 3};
  const McEstimate est = monte_carlo_mean(10000, 3, [&](Rng& rng) {
    const ComplexMatrix w = kron(identity(d), haar_unitary(d, rng));
    const ComplexMatrix one = w * g * w.adjoint();
    return permute_factors(kron(one, one), SystemShape::uniform(d, 4), order);
  });
  const McComparison c = compare_to_estimate(exact, est, family_sigmas(exact.size()));
  INFO("max z " << c.max_z << " outside " << c.outside);
  CHECK(c.pass());
}

TEST_CASE("random purification channel") {
  ComplexMatrix zero = ComplexMatrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  CHECK(max_abs_diff(random_purification_apply({2, 1}, zero), kron(zero, identity(2) / 2.0)) < 1e-14);

  Rng rng(1);
  for (int n = 1; n <= 3; ++n) {
    const PurificationSpec spec{2, n};
    const ComplexMatrix sr = hermitian_sqrt(r_n_operator(spec));
    const int dim = 1 << n;
    for (int t = 0; t < 20; ++t) {
      const ComplexMatrix x = ginibre(dim, dim, rng);
      CHECK(std::abs(random_purification_apply(spec, sr, x).trace() - x.trace()) <= 1e-10);
    }
    for (int t = 0; t < 3; ++t) {
      const ComplexMatrix rho = random_density_matrix(2, 2, rng);
      CHECK(max_abs_diff(random_purification_apply(spec, sr, kron_power(rho, n)), twirled_purification(rho, n)) <= 1e-9);
    }
  }
  CHECK_THROWS_AS(random_purification_apply({2, 2}, identity(2)), ShapeMismatch);
}

TEST_CASE("random purification of the maximally mixed state agrees with Monte-Carlo") {
  const int d = 2, n = 2;
  const ComplexMatrix exact = random_purification_apply({d, n}, identity(4) / 4.0);
  const ComplexVector psi = gamma_vec(d) / std::sqrt(2.0);
  const McEstimate est = monte_carlo_mean(10000, 8, [&](Rng& rng) {
    const ComplexVector v = kron(identity(d), haar_unitary(d, rng)) * psi;
    const ComplexMatrix one = v * v.adjoint();
    return ComplexMatrix(kron(one, one));
  });
  CHECK(compare_to_estimate(exact, est, family_sigmas(exact.size())).pass());
}

TEST_CASE("dilation powers regroup rows into B^n E^n") {
  Rng rng(2);
  const StinespringIsometry v = kraus_to_stinespring(random_channel(2, 3, 2, rng));
  const ComplexMatrix u = haar_unitary(2, rng);
  const ComplexMatrix w = rotate_environment(v, u).v;
  const ComplexMatrix wn = dilation_power(v, u, 2);
  for (int b1 = 0; b1 < 3; ++b1)
    for (int b2 = 0; b2 < 3; ++b2)
      for (int e1 = 0; e1 < 2; ++e1)
        for (int e2 = 0; e2 < 2; ++e2)
          for (int a1 = 0; a1 < 2; ++a1)
            for (int a2 = 0; a2 < 2; ++a2) {
              const Complex want = w(b1 * 2 + e1, a1) * w(b2 * 2 + e2, a2);
              REQUIRE(std::abs(wn(((b1 * 3 + b2) * 2 + e1) * 2 + e2, a1 * 2 + a2) - want) == 0.0);
            }
}

TEST_CASE("Monte-Carlo superchannel") {
  Rng rng(3);
  // r = 1: the environment unitary is a phase and every sample is identical.
  const KrausChannel u = unitary_channel(haar_unitary(2, rng));
  const StinespringIsometry vu = kraus_to_stinespring(u);
  const McEstimate e1 = stinespring_rand_isometry_mc(vu, 2, 50, 1);
  CHECK(e1.std_error.maxCoeff() < 1e-12);
  const ComplexMatrix w = kron_power(vu.v, 2);
  CHECK(max_abs_diff(e1.mean, kron(w.conjugate(), w)) < 1e-12);

  // n = 1: tracing E gives Φ on every single sample.
  const KrausChannel ch = random_channel(2, 2, 2, rng);
  const StinespringIsometry v = kraus_to_stinespring(ch);
  const Superoperator phi = kraus_to_superoperator(ch);
  for (int s = 0; s < 5; ++s) {
    const McEstimate one = stinespring_rand_isometry_mc(v, 1, 1, 100 + s);
    CHECK(max_abs_diff(trace_output_factors(mc_superoperator(v, 1, one), {1}).matrix, phi.matrix) < 1e-12);
  }

  // Bit-identical results for any thread count.
  const McEstimate a = stinespring_rand_isometry_mc(v, 2, 300, 9, 1);
  const McEstimate b = stinespring_rand_isometry_mc(v, 2, 300, 9, 3);
  CHECK((a.mean.array() == b.mean.array()).all());
  CHECK((a.std_error.array() == b.std_error.array()).all());
}

TEST_CASE("closed form against Monte-Carlo at n = 1") {
  Rng rng(4);
  const KrausChannel ch = random_channel(2, 2, 2, rng);
  const Superoperator omega = omega_explicit(ch, 1, 2);
  const McEstimate est = stinespring_rand_isometry_mc(kraus_to_stinespring(ch), 1, 10000, 21);
  CHECK(compare_to_estimate(omega.matrix, est, family_sigmas(omega.matrix.size())).pass());
  // n = 1 is conjugation by V followed by a full twirl on E.
  const StinespringIsometry v = kraus_to_stinespring(ch);
  ComplexMatrix s(16, 4);
  for (int c = 0; c < 4; ++c) {
    ComplexMatrix e = ComplexMatrix::Zero(2, 2);
    e(c % 2, c / 2) = 1.0;
    s.col(c) = vectorize(partial_haar_twirl(v.v * e * v.v.adjoint(), {2, 2}, {1}));
  }
  CHECK(max_abs_diff(omega.matrix, s) < 1e-12);
}

TEST_CASE("circuit equals closed form") {
  Rng rng(5);
  for (auto [n, da, db, r] : {std::array{1, 2, 2, 2}, {1, 3, 2, 2}, {2, 2, 2, 2}, {2, 2, 3, 1}, {2, 3, 2, 2}, {3, 2, 2, 2}}) {
    const KrausChannel ch = random_channel(da, db, r, rng);
    const Superoperator a = omega_explicit(ch, n, r);
    const Superoperator b = circuit_superchannel(ch, n, r);
    INFO(n << da << db << r);
    CHECK(max_abs_diff(a.matrix, b.matrix) <= (n == 1 ? 1e-12 : 1e-9));
    CHECK(a.out_shape == (SystemShape{std::vector<int>(n, db)}.concat(SystemShape::uniform(r, n))));
  }
  // Unitary channel, r = 1.
  const KrausChannel u = unitary_channel(haar_unitary(2, rng));
  CHECK(max_abs_diff(omega_explicit(u, 2, 1).matrix, circuit_superchannel(u, 2, 1).matrix) <= 1e-9);
  // With r = 1 the environment ends in |0...0><0...0|: Ω is V^{⊗n} conjugation.
  const ComplexMatrix un = kron_power(u[0], 2);
  CHECK(max_abs_diff(omega_explicit(u, 2, 1).matrix, kron(un.conjugate(), un)) < 1e-12);
}

TEST_CASE("rank padding") {
  Rng rng(6);
  const KrausChannel ch = random_channel(2, 2, 1, rng);
  const Superoperator a = omega_explicit(ch, 2, 3);
  CHECK(max_abs_diff(a.matrix, circuit_superchannel(ch, 2, 3).matrix) <= 1e-9);
  CHECK(max_abs_diff(a.matrix, omega_explicit(pad_kraus(ch, 3), 2, 3).matrix) == 0.0);
  CHECK_THROWS_AS(omega_explicit(random_channel(2, 2, 3, rng), 2, 2), DomainError);
  CHECK_THROWS_AS(omega_explicit(ch, 2, 5), DomainError);
}

TEST_CASE("structural laws of the closed form") {
  Rng rng(7);
  for (auto [n, da, db, r] : {std::array{1, 2, 3, 2}, {2, 2, 2, 2}, {2, 3, 2, 2}, {3, 2, 2, 1}, {3, 2, 2, 2}}) {
    const KrausChannel ch = random_channel(da, db, r, rng);
    const SuperchannelSpec spec{n, da, db, r};
    const Superoperator omega = omega_explicit(ch, n, r);
    INFO(n << da << db << r);
    CHECK(marginal_check(omega, ch, n).pass());
    CHECK(covariance_check(omega, spec).pass());
    CHECK(environment_twirl_check(omega, spec).pass());
    const CptpReport cp = superoperator_cptp(omega);
    CHECK(cp.min_eigenvalue >= -1e-9);
    CHECK(cp.tp_deviation <= 1e-10);
  }
}

TEST_CASE("covariance check notices a broken map") {
  Rng rng(8);
  const KrausChannel ch = random_channel(2, 2, 2, rng);
  Superoperator omega = omega_explicit(ch, 2, 2);
  omega.matrix(5, 3) += 1e-3;
  CHECK_FALSE(covariance_check(omega, {2, 2, 2, 2}).pass());
}

TEST_CASE("Choi consistency with the purification channel") {
  CHECK(choi_consistency_check(identity_channel(2), 1).max_deviation <= 1e-10);
  Rng rng(9);
  CHECK(choi_consistency_check(random_channel(2, 2, 3, rng), 1).pass());
  CHECK(choi_consistency_check(depolarizing_channel(2, 0.4), 2).pass());
  CHECK(choi_consistency_check(random_channel(2, 2, 2, rng), 2).pass());
}

TEST_CASE("gauge independence and non-symmetric inputs") {
  Rng rng(10);
  const KrausChannel ch = random_channel(2, 2, 2, rng);
  const StinespringIsometry v2 = rotate_environment(kraus_to_stinespring(ch), haar_unitary(2, rng));
  const Superoperator a = omega_explicit(ch, 2, 2);
  CHECK(max_abs_diff(a.matrix, omega_explicit(stinespring_to_kraus(v2), 2, 2).matrix) <= 1e-9);

  // ρ⊗σ is not mapped like its symmetrization.
  const ComplexMatrix rho = random_density_matrix(2, 2, rng), sigma = random_density_matrix(2, 2, rng);
  const ComplexMatrix x = kron(rho, sigma), xs = 0.5 * (kron(rho, sigma) + kron(sigma, rho));
  CHECK(max_abs_diff(apply_superoperator(a, x), apply_superoperator(a, xs)) > 1e-3);
  const Superoperator b = circuit_superchannel(ch, 2, 2);
  CHECK(max_abs_diff(apply_superoperator(a, x), apply_superoperator(b, x)) <= 1e-9);
}

TEST_CASE("statement check against Monte-Carlo") {
  Rng rng(11);
  const KrausChannel ch = random_channel(2, 2, 2, rng);
  const StatementReport rep = random_isometry_statement_check(ch, 2, 2, 3, 10000, 12);
  INFO("max z " << rep.outputs.max_z << " outside " << rep.outputs.outside << " of " << rep.outputs.entries);
  CHECK(rep.gauge.pass());
  CHECK(rep.pass());
}

TEST_CASE("entry cap") {
  const std::size_t old = max_entries();
  set_max_entries(1000);
  Rng rng(12);
  const KrausChannel ch = random_channel(2, 2, 2, rng);
  CHECK_THROWS_AS(omega_explicit(ch, 2, 2), InstanceTooLarge);
  set_max_entries(old);
}

TEST_CASE("family-wise Monte-Carlo gate") {
  CHECK(std::abs(family_sigmas(1, 2 * 0.0013498980316301) - 3.0) < 1e-9);
  CHECK(family_sigmas(256) > family_sigmas(16));
  CHECK(std::abs(family_sigmas(100, 0.05) - family_sigmas(1, 0.0005)) < 1e-12);
  CHECK_THROWS_AS(family_sigmas(0), DomainError);
}
