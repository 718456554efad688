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
#include <functional>

#include "stinespring/haar.hpp"
#include "stinespring/types.hpp"

namespace stinespring {

/// Entrywise sample mean and standard error of the mean,
/// se = sqrt(Σ|x − x̄|² / (N(N−1))).
struct McEstimate {
  ComplexMatrix mean;
  RealMatrix std_error;
  std::size_t samples = 0;
};

/// Sample k is drawn with substream(seed, k). Samples are reduced in fixed
/// chunks combined pairwise, so the result is bit-identical for any thread
/// count. threads = 0 uses the hardware concurrency.
McEstimate monte_carlo_mean(std::size_t samples, std::uint64_t seed,
                            const std::function<ComplexMatrix(Rng&)>& draw,
                            unsigned threads = 0);

/// Entrywise comparison of an exact value against an estimate with the gate
/// |exact − mean| ≤ sigmas·se + floor.
struct McComparison {
  double max_deviation = 0;
  double max_z = 0;  // largest |diff|/se over entries with se > 0
  std::size_t entries = 0;
  std::size_t outside = 0;
  double sigmas = 3;
  double floor = 1e-9;
  bool pass() const { return outside == 0; }
};
McComparison compare_to_estimate(const ComplexMatrix& exact, const McEstimate& est,
                                 double sigmas = 3.0, double floor = 1e-9);

/// Per-entry gate in standard errors that keeps the chance of any false
/// alarm among `comparisons` Gaussian entries below `family_alpha`
/// (Bonferroni, two-sided).
double family_sigmas(std::size_t comparisons, double family_alpha = 1e-3);

}  // namespace stinespring
