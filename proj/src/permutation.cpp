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

#include "stinespring/permutation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "stinespring/errors.hpp"

namespace stinespring {

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  std::vector<bool> seen(map_.size(), false);
  for (int v : map_) {
    if (v < 0 || v >= size() || seen[v]) {
      throw DomainError("permutation mapping is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::adjacent(int n, int k) {
  if (k < 0 || k + 1 >= n) throw DomainError("adjacent transposition index");
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  std::swap(m[k], m[k + 1]);
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (int k = 0; k < size(); ++k) inv[map_[k]] = k;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (int k = 0; k < size(); ++k) {
    if (map_[k] != k) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(map_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (int k = start; !seen[k]; k = map_[k]) {
      seen[k] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

int Permutation::cycle_count() const {
  return static_cast<int>(cycle_type().size());
}

std::vector<int> Permutation::adjacent_decomposition() const {
  // Right-multiplying by s_k swaps positions k, k+1 of the one-line array.
  // Sorting gives σ s_{j_1} … s_{j_m} = id, hence σ = s_{j_m} … s_{j_1}.
  std::vector<int> a = map_;
  std::vector<int> swaps;
  for (int pass = 0; pass < size(); ++pass) {
    for (int k = 0; k + 1 < size(); ++k) {
      if (a[k] > a[k + 1]) {
        std::swap(a[k], a[k + 1]);
        swaps.push_back(k);
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw ShapeMismatch("composing S_n and S_m");
  std::vector<int> m(a.size());
  for (int k = 0; k < a.size(); ++k) m[k] = a(b(k));
  return Permutation(std::move(m));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

std::size_t lexicographic_rank(const Permutation& p) {
  // Lehmer code.
  const int n = p.size();
  std::size_t rank = 0;
  for (int k = 0; k < n; ++k) {
    std::size_t smaller = 0;
    for (int j = k + 1; j < n; ++j) {
      if (p(j) < p(k)) ++smaller;
    }
    rank = rank * static_cast<std::size_t>(n - k) + smaller;
  }
  return rank;
}

std::vector<std::size_t> permutation_basis_map(const Permutation& sigma,
                                               int d) {
  const int n = sigma.size();
  const std::size_t total = checked_pow(static_cast<std::size_t>(d), n);
  require_entries(total, 1, "permutation basis map");
  // place[k] = d^{n-1-k}, weight of slot k in the flattened index.
  std::vector<std::size_t> place(n);
  std::size_t w = 1;
  for (int k = n - 1; k >= 0; --k) {
    place[k] = w;
    w *= static_cast<std::size_t>(d);
  }
  std::vector<std::size_t> out(total);
  std::vector<int> digits(n, 0);
  for (std::size_t x = 0; x < total; ++x) {
    std::size_t y = 0;
    for (int k = 0; k < n; ++k) y += digits[k] * place[sigma(k)];
    out[x] = y;
    for (int k = n - 1; k >= 0; --k) {
      if (++digits[k] < d) break;
      digits[k] = 0;
    }
  }
  return out;
}

ComplexMatrix permutation_unitary(const Permutation& sigma, int d) {
  const auto map = permutation_basis_map(sigma, d);
  const auto dim = map.size();
  require_entries(dim, dim, "permutation unitary");
  ComplexMatrix u = ComplexMatrix::Zero(dim, dim);
  for (std::size_t x = 0; x < dim; ++x) u(map[x], x) = 1.0;
  return u;
}

}  // namespace stinespring
