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

#include "stinespring/bounds.hpp"

#include <cmath>
#include <string>

#include "stinespring/errors.hpp"

namespace stinespring {

BigInt sym_multiset_count(int D, int n) {
  if (D < 1 || n < 0) throw DomainError("multiset count needs D >= 1 and n >= 0");
  // C(n+D−1, n) = Π_{k=1..n} (D−1+k)/k, exact at every step.
  BigInt c = 1;
  for (int k = 1; k <= n; ++k) c = c * (D - 1 + k) / k;
  return c;
}

double log2_big(const BigInt& x) {
  if (x <= 0) throw DomainError("log2 of a non-positive integer");
  const auto top = static_cast<long>(boost::multiprecision::msb(x));
  if (top < 63) return std::log2(x.convert_to<double>());
  const BigInt head = x >> (top - 62);
  return std::log2(head.convert_to<double>()) + static_cast<double>(top - 62);
}

BoundReport distinguishing_bound_check(const BigInt& M, int n, int d_a, int d_b, int r) {
  if (M < 1 || n < 0 || d_a < 1 || d_b < 1 || r < 1) {
    throw DomainError("bound check needs M >= 1, n >= 0 and positive dimensions");
  }
  BoundReport rep;
  rep.D = r * d_a * d_b;
  rep.n = n;
  rep.M = M;
  rep.sym_count = sym_multiset_count(rep.D, n);
  rep.lhs = 0.5 * log2_big(M);
  rep.rhs = log2_big(rep.sym_count);
  rep.pass = rep.sym_count * rep.sym_count >= M;
  if (M == 1) {
    rep.n_min = 0;
  } else if (rep.D > 1) {
    int k = 0;
    BigInt c = 1;
    while (c * c < M) {
      ++k;
      c = c * (rep.D - 1 + k) / k;
    }
    rep.n_min = k;
  }
  return rep;
}

namespace {

double g_at(double x) { return x == 0.0 ? 0.0 : bosonic_entropy(x); }

}  // namespace

double bosonic_entropy(double x) {
  if (!(x > 0)) throw DomainError("bosonic entropy needs x > 0");
  return (1 + x) * std::log2(1 + x) - x * std::log2(x);
}

double invert_bosonic_entropy(double c) {
  if (!(c > 0)) throw DomainError("inverse bosonic entropy needs c > 0");
  double lo = 0, hi = 1;
  while (bosonic_entropy(hi) < c) hi *= 2;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (bosonic_entropy(mid) < c ? lo : hi) = mid;
  }
  return hi;
}

int query_lower_bound(double c, int D) {
  if (!(c > 0) || D < 1) throw DomainError("query bound needs c > 0 and D >= 1");
  if (D == 1) return 0;
  const double dm1 = D - 1;
  int n = static_cast<int>(std::ceil(invert_bosonic_entropy(c) * dm1));
  while (n > 0 && g_at((n - 1) / dm1) >= c) --n;
  while (g_at(n / dm1) < c) ++n;
  return n;
}

int exact_query_threshold(double c, int D) {
  if (!(c > 0) || D < 1) throw DomainError("query threshold needs c > 0 and D >= 1");
  if (D == 1) throw DomainError("no n satisfies the inequality when D = 1");
  const double t = c * (D - 1);
  int q = 1;
  while (q <= 64 && std::floor(t * q) != t * q) q *= 2;
  if (q > 64) throw DomainError("c(D-1) must be a dyadic rational with denominator <= 64");
  const auto p = static_cast<unsigned>(t * q);
  const BigInt target = BigInt(1) << p;
  for (int n = 0;; ++n) {
    if (boost::multiprecision::pow(sym_multiset_count(D, n), q) >= target) return n;
  }
}

PackingReport packing_log_cardinality(int d_a, int d_b, int r, double epsilon, double c_lower,
                                      double c_upper) {
  if (d_b < 2) throw DomainError("packing bound assumes d_b >= 2");
  if (d_a < 1 || r < 1) throw DomainError("d_a and r must be positive");
  if (!(epsilon > 0 && epsilon < 1)) throw DomainError("epsilon must lie in (0, 1)");
  PackingReport rep;
  const std::int64_t rab = std::int64_t{r} * d_a * d_b;
  rep.dimension_count = 2 * rab - std::int64_t{d_a} * d_a - std::int64_t{r} * r;
  const double l = std::log2(1 / epsilon);
  rep.lower = c_lower * static_cast<double>(rep.dimension_count) * l;
  rep.upper = c_upper * static_cast<double>(2 * rab) * l;
  rep.sandwich = 3 * rab <= 4 * rep.dimension_count && rep.dimension_count <= 2 * rab;
  return rep;
}

}  // namespace stinespring
