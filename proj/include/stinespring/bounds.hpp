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

#include <boost/multiprecision/cpp_int.hpp>

namespace stinespring {

using BigInt = boost::multiprecision::cpp_int;

/// Number of size-n multisets over D symbols, C(n+D−1, n).
BigInt sym_multiset_count(int D, int n);

/// log2 of a positive big integer, accurate to double precision.
double log2_big(const BigInt& x);

/// (1/2) log2 M ≤ log2 C(n+D−1, n) with D = r·d_a·d_b, decided exactly as
/// M ≤ C². n_min is the least n for which it holds (absent when D = 1 and
/// M > 1).
struct BoundReport {
  int D = 0;
  int n = 0;
  BigInt M;
  BigInt sym_count;
  double lhs = 0;  // (1/2) log2 M
  double rhs = 0;  // log2 C(n+D−1, n)
  bool pass = false;
  std::optional<int> n_min;
};
BoundReport distinguishing_bound_check(const BigInt& M, int n, int d_a, int d_b, int r);

/// g(x) = (1+x) log2(1+x) − x log2 x for x > 0.
double bosonic_entropy(double x);
/// The x > 0 with g(x) = c, by bisection.
double invert_bosonic_entropy(double c);

/// Least n with g(n/(D−1)) ≥ c, i.e. ceil(g⁻¹(c)(D−1)) without rounding
/// error; 0 for D = 1. Any n with log2 C(n+D−1, n) ≥ c(D−1) is at least this.
int query_lower_bound(double c, int D);

/// Least n with log2 C(n+D−1, n) ≥ c(D−1), decided exactly as C^q ≥ 2^p
/// where c(D−1) = p/q; q must be a power of two no larger than 64.
int exact_query_threshold(double c, int D);

/// Log-cardinality interval of an ε-packing of channels with Choi rank r.
struct PackingReport {
  std::int64_t dimension_count = 0;  // 2 r d_a d_b − d_a² − r²
  double lower = 0;
  double upper = 0;
  bool sandwich = false;  // (3/4) r d_a d_b ≤ count ≤ 2 r d_a d_b
};
PackingReport packing_log_cardinality(int d_a, int d_b, int r, double epsilon, double c_lower,
                                      double c_upper);

}  // namespace stinespring
