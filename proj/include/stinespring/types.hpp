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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace stinespring {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major. Carrier for states, unitaries,
/// isometries and superoperators alike.
using ComplexMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ComplexVector = Eigen::Matrix<Complex, Eigen::Dynamic, 1>;
using RealMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Local dimensions of the tensor factors of a space, first factor most
/// significant in the flattened index (Kronecker order).
struct SystemShape {
  std::vector<int> dims;

  SystemShape() = default;
  SystemShape(std::initializer_list<int> d) : dims(d) {}
  explicit SystemShape(std::vector<int> d) : dims(std::move(d)) {}

  /// `copies` repetitions of a factor of dimension `d`.
  static SystemShape uniform(int d, int copies);

  std::size_t factors() const { return dims.size(); }
  std::size_t total() const;
  int operator[](std::size_t k) const { return dims[k]; }

  SystemShape concat(const SystemShape& other) const;
  bool operator==(const SystemShape&) const = default;
};

// Every materialized matrix is checked against a process-wide cap on its
// number of entries (rows * cols). Default 2^20.
std::size_t max_entries();
void set_max_entries(std::size_t cap);

/// Throws InstanceTooLarge when rows * cols (computed without overflow)
/// exceeds the cap.
void require_entries(std::size_t rows, std::size_t cols, std::string_view what);

/// Integer power with overflow detection; saturates to SIZE_MAX.
std::size_t checked_pow(std::size_t base, int exp);
std::size_t checked_mul(std::size_t a, std::size_t b);

}  // namespace stinespring
