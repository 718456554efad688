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

#include <cstdint>
#include <vector>

#include "stinespring/channel.hpp"
#include "stinespring/haar.hpp"
#include "stinespring/montecarlo.hpp"
#include "stinespring/types.hpp"

namespace stinespring {

/// n parallel queries of a channel d_a → d_b with Choi rank at most r.
struct SuperchannelSpec {
  int n = 1;
  int d_a = 2;
  int d_b = 2;
  int r = 1;

  /// Throws DomainError on non-positive entries or r > d_a·d_b.
  void validate() const;
  SystemShape input_shape() const { return SystemShape::uniform(d_a, n); }
  /// B^n then E^n.
  SystemShape output_shape() const;
};

/// n copies of a d-dimensional system, purified by a register of the same
/// dimension.
struct PurificationSpec {
  int d = 2;
  int n = 1;
};

/// R_n = E_U[((1 ⊗ U) Γ (1 ⊗ U†))^{⊗n}] in grouped order A^n B^n.
ComplexMatrix r_n_operator(const PurificationSpec& spec);

/// √R_n (x ⊗ 1_{B^n}) √R_n for x on A^n. Output factors are interleaved:
/// A_1 B_1 … A_n B_n.
ComplexMatrix random_purification_apply(const PurificationSpec& spec, const ComplexMatrix& x);
/// Same, reusing a precomputed √R_n.
ComplexMatrix random_purification_apply(const PurificationSpec& spec, const ComplexMatrix& sqrt_r,
                                        const ComplexMatrix& x);

/// ((1 ⊗ U) V)^{⊗n} with rows regrouped to B^n E^n.
ComplexMatrix dilation_power(const StinespringIsometry& v, const ComplexMatrix& u, int n);

/// Monte-Carlo estimate of the superoperator of
/// X ↦ E_U[W^{⊗n} X W^{†⊗n}], W = (1_B ⊗ U) V, U Haar on E.
McEstimate stinespring_rand_isometry_mc(const StinespringIsometry& v, int n,
                                        std::size_t samples, std::uint64_t seed,
                                        unsigned threads = 0);
/// The superoperator part of the estimate, with shapes attached.
Superoperator mc_superoperator(const StinespringIsometry& v, int n, const McEstimate& est);

/// Closed-form Ω from the Weingarten expansion:
/// Σ_σ [U_σ Φ^{⊗n}(U_σ† X)] ⊗ [U_σ Σ_λ dim[λ]/(n! dim 𝒰_{r,λ}) Π_λ].
/// The channel is padded with zero Kraus operators up to r.
Superoperator omega_explicit(const KrausChannel& ch, int n, int r);

/// The encoder / Φ^{⊗n} / decoder / 𝒯 / Schur circuit, composed exactly.
Superoperator circuit_superchannel(const KrausChannel& ch, int n, int r);

/// Superoperator of Φ^{⊗n}.
Superoperator tensor_power_superoperator(const KrausChannel& ch, int n);

/// Generic outcome of a deterministic identity check.
struct CheckReport {
  double max_deviation = 0;
  double tolerance = 0;
  bool pass() const { return max_deviation <= tolerance; }
};

/// Choi operator of omega_explicit(ch, n, d_a·d_b) against the random
/// purification channel applied to (J^Φ)^{⊗n}.
CheckReport choi_consistency_check(const KrausChannel& ch, int n, double tol = 1e-9);

/// Tracing E^n off Ω gives Φ^{⊗n}.
CheckReport marginal_check(const Superoperator& omega, const KrausChannel& ch, int n,
                           double tol = 1e-10);
/// Ω ∘ Ad(U_π) = Ad(U_π ⊗ U_π) ∘ Ω for every π ∈ S_n.
CheckReport covariance_check(const Superoperator& omega, const SuperchannelSpec& spec,
                             double tol = 1e-9);
/// A further Haar twirl on E^n leaves the Choi operator of Ω fixed.
CheckReport environment_twirl_check(const Superoperator& omega, const SuperchannelSpec& spec,
                                    double tol = 1e-9);
/// CPTP audit via the Choi operator.
CptpReport superoperator_cptp(const Superoperator& s);

/// Circuit outputs against a Monte-Carlo average over a re-gauged dilation
/// of the same channel, on random inputs (product, non-symmetric product and
/// entangled).
struct StatementReport {
  CheckReport gauge;           // omega_explicit under two Kraus gauges
  McComparison outputs;        // circuit vs Monte-Carlo, per output entry
  std::size_t trials = 0;
  std::size_t samples = 0;
  bool pass() const { return gauge.pass() && outputs.pass(); }
};
StatementReport random_isometry_statement_check(const KrausChannel& ch, int n, int r, int trials,
                                         std::size_t samples, std::uint64_t seed,
                                         unsigned threads = 0);

}  // namespace stinespring
