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
#include <random>

#include "stinespring/types.hpp"

namespace stinespring {

using Rng = std::mt19937_64;

/// SplitMix64 mix of (master, stream); used to give every Monte-Carlo sample
/// or task its own independent generator.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);
Rng substream(std::uint64_t master, std::uint64_t stream);

/// Matrix of i.i.d. standard complex Gaussians (E|z|^2 = 1).
ComplexMatrix ginibre(int rows, int cols, Rng& rng);

/// Haar-distributed d×d unitary: QR of a Ginibre matrix, with the phases of
/// diag(R) absorbed so that R has a positive diagonal.
ComplexMatrix haar_unitary(int d, Rng& rng);

/// First `cols` columns of a Haar unitary of size `rows`.
ComplexMatrix haar_isometry(int rows, int cols, Rng& rng);

/// Haar-random pure state of dimension d.
ComplexVector haar_state(int d, Rng& rng);

/// Random density matrix of the given rank (Ginibre ensemble).
ComplexMatrix random_density_matrix(int d, int rank, Rng& rng);

}  // namespace stinespring
