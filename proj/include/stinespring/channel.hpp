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

#include "stinespring/haar.hpp"
#include "stinespring/types.hpp"

namespace stinespring {

/// Channel given by Kraus operators K_i : C^{d_in} → C^{d_out}.
class KrausChannel {
 public:
  /// Throws NotAChannel if Σ K_i†K_i deviates from 1 by more than `tp_tol`.
  KrausChannel(int d_in, int d_out, std::vector<ComplexMatrix> kraus,
               double tp_tol = 1e-9);

  int d_in() const { return d_in_; }
  int d_out() const { return d_out_; }
  int size() const { return static_cast<int>(kraus_.size()); }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  const ComplexMatrix& operator[](int i) const { return kraus_[i]; }

  /// max |Σ K_i†K_i − 1|.
  double tp_deviation() const;

 private:
  int d_in_;
  int d_out_;
  std::vector<ComplexMatrix> kraus_;
};

/// Unnormalized Choi operator J = Σ_ij |i><j|_{A'} ⊗ Φ(|i><j|), factor order
/// A' then B; Tr J = d_in.
struct ChoiMatrix {
  int d_in;
  int d_out;
  ComplexMatrix matrix;
};

/// Isometry V : C^{d_in} → C^{d_out} ⊗ C^{d_env}, factor order B then E.
struct StinespringIsometry {
  int d_in;
  int d_out;
  int d_env;
  ComplexMatrix v;
};

/// Matrix of a linear map on operators acting on column-major vectorized
/// inputs: vec(Φ(X)) = matrix · vec(X).
struct Superoperator {
  SystemShape in_shape;
  SystemShape out_shape;
  ComplexMatrix matrix;

  std::size_t d_in() const { return in_shape.total(); }
  std::size_t d_out() const { return out_shape.total(); }
};

// Standard channels.
KrausChannel identity_channel(int d);
KrausChannel unitary_channel(const ComplexMatrix& u);
/// ρ ↦ (1−p)ρ + p Tr(ρ) 1/d, via d² Weyl–Heisenberg Kraus operators.
KrausChannel depolarizing_channel(int d, double p);
KrausChannel amplitude_damping_channel(double gamma);
/// Qubit X flip with probability p.
KrausChannel bit_flip_channel(double p);
/// Channel with `r` Kraus operators read off a Haar-random isometry
/// C^{d_in} → C^{d_out} ⊗ C^r. Requires r·d_out ≥ d_in.
KrausChannel random_channel(int d_in, int d_out, int r, Rng& rng);

/// Appends zero Kraus operators up to `r`; throws DomainError if the channel
/// already has more than `r`.
KrausChannel pad_kraus(const KrausChannel& ch, int r);

/// Kraus operators of Φ^{⊗n}: all products K_{i_1} ⊗ … ⊗ K_{i_n}, with i_1
/// the most significant index.
std::vector<ComplexMatrix> kraus_tensor_power(const KrausChannel& ch, int n);

/// Σ_i K_i X K_i† for any (not necessarily Hermitian) X.
ComplexMatrix apply_kraus(const KrausChannel& ch, const ComplexMatrix& x);

ChoiMatrix kraus_to_choi(const KrausChannel& ch);
/// Eigendecomposition; keeps eigenvalues above tol·λ_max. Each Kraus operator
/// has its largest-magnitude entry made real positive.
KrausChannel choi_to_kraus(const ChoiMatrix& j, double tol = 1e-8);
int choi_rank(const ChoiMatrix& j, double tol = 1e-8);

StinespringIsometry kraus_to_stinespring(const KrausChannel& ch);
/// Kraus operators (1_B ⊗ <e|) V.
KrausChannel stinespring_to_kraus(const StinespringIsometry& v);
/// Superoperator of ρ ↦ Tr_E[V ρ V†]. Throws NotAChannel if V†V ≠ 1.
Superoperator stinespring_to_channel(const StinespringIsometry& v,
                                     double tol = 1e-9);

Superoperator kraus_to_superoperator(const KrausChannel& ch);
/// Superoperator of X ↦ W X W† for any W.
Superoperator conjugation_superoperator(const ComplexMatrix& w,
                                        const SystemShape& in_shape,
                                        const SystemShape& out_shape);
ComplexMatrix apply_superoperator(const Superoperator& s, const ComplexMatrix& x);
ChoiMatrix superoperator_to_choi(const Superoperator& s);
/// The superoperator S' = S followed by tracing the listed output factors.
Superoperator trace_output_factors(const Superoperator& s,
                                   const std::vector<int>& traced);

/// Outcome of a complete-positivity / trace-preservation audit.
struct CptpReport {
  double min_eigenvalue;
  double tp_deviation;  // max |Tr_B J − 1|
  bool pass(double psd_tol, double tp_tol) const {
    return min_eigenvalue >= -psd_tol && tp_deviation <= tp_tol;
  }
};
CptpReport check_cptp(const ChoiMatrix& j);

/// (1/(2 d_in)) ‖J1 − J2‖_1.
double choi_trace_distance(const ChoiMatrix& j1, const ChoiMatrix& j2);

/// min_U ‖(1_B ⊗ U) V1 − V2‖_F over unitaries on E, in closed form.
struct DilationDistance {
  double frobenius;
  /// ‖(1_B ⊗ U*) V1 − V2‖ (operator norm) at the Frobenius optimizer; an upper
  /// bound on the operator-norm infimum.
  double operator_norm;
  ComplexMatrix unitary;
};
DilationDistance procrustes_dilation_distance(const StinespringIsometry& v1,
                                              const StinespringIsometry& v2);

/// (1_B ⊗ U) V.
StinespringIsometry rotate_environment(const StinespringIsometry& v,
                                       const ComplexMatrix& u);

}  // namespace stinespring
