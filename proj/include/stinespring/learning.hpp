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
#include <optional>

#include "stinespring/channel.hpp"

namespace stinespring {

/// Single-copy tomography of the Choi state of the superchannel's output
/// isometry.
struct TomographyConfig {
  /// Parallel queries per superchannel round; each round yields this many
  /// copies of the same isometry's Choi state.
  int n_queries = 1;
  /// Shots per basis. 0 selects exact expectations.
  std::uint64_t shots = 0;
  /// Number of Haar-random measurement bases; at least (d_a d_b r)^2.
  int bases = 0;
  std::uint64_t seed = 0;
  /// Seed of the environment unitary; defaults to `seed`.
  std::optional<std::uint64_t> env_seed;
};

struct LearnResult {
  KrausChannel estimate;
  StinespringIsometry dilation;
  double choi_distance = 0;
  double dilation_distance = 0;
  std::uint64_t shots_used = 0;
  std::uint64_t rounds = 0;
};

/// Minimum number of bases accepted for Choi dimension D = d_a·d_b·r.
int minimum_bases(int d_a, int d_b, int r);

LearnResult learn_channel(const KrausChannel& truth, int r, const TomographyConfig& cfg);

}  // namespace stinespring
