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

#include "stinespring/json_io.hpp"

#include "stinespring/errors.hpp"

namespace stinespring {

Json matrix_to_json(const ComplexMatrix& m, const std::optional<SystemShape>& shape) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  if (shape) {
    if (shape->total() != static_cast<std::size_t>(m.rows())) {
      throw ShapeMismatch("shape does not match matrix rows");
    }
    j["shape"] = shape->dims;
  }
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      data.push_back({m(r, c).real(), m(r, c).imag()});
    }
  }
  j["data"] = std::move(data);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<Eigen::Index>();
  const auto cols = j.at("cols").get<Eigen::Index>();
  if (rows < 1 || cols < 1) throw ShapeMismatch("matrix dimensions must be positive");
  const auto& data = j.at("data");
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols) {
    throw ShapeMismatch("data length is not rows*cols");
  }
  require_entries(rows, cols, "matrix");
  ComplexMatrix m(rows, cols);
  for (Eigen::Index k = 0; k < rows * cols; ++k) {
    const auto& z = data[k];
    if (!z.is_array() || z.size() != 2) throw ShapeMismatch("entry is not [re, im]");
    m(k / cols, k % cols) = Complex(z[0].get<double>(), z[1].get<double>());
  }
  return m;
}

std::optional<SystemShape> shape_from_json(const Json& j) {
  if (!j.contains("shape")) return std::nullopt;
  return SystemShape(j.at("shape").get<std::vector<int>>());
}

Json channel_to_json(const KrausChannel& ch) {
  Json j;
  j["d_in"] = ch.d_in();
  j["d_out"] = ch.d_out();
  j["kraus"] = Json::array();
  for (const auto& k : ch.kraus()) j["kraus"].push_back(matrix_to_json(k));
  return j;
}

KrausChannel channel_from_json(const Json& j) {
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  return KrausChannel(j.at("d_in").get<int>(), j.at("d_out").get<int>(), std::move(kraus));
}

}  // namespace stinespring
