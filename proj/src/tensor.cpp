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

#include "stinespring/tensor.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <string>

#include "stinespring/errors.hpp"

namespace stinespring {

namespace {
std::atomic<std::size_t> g_max_entries{std::size_t{1} << 20};
}  // namespace

SystemShape SystemShape::uniform(int d, int copies) {
  return SystemShape(std::vector<int>(static_cast<std::size_t>(copies), d));
}

std::size_t SystemShape::total() const {
  std::size_t t = 1;
  for (int d : dims) t = checked_mul(t, static_cast<std::size_t>(d));
  return t;
}

SystemShape SystemShape::concat(const SystemShape& other) const {
  SystemShape s = *this;
  s.dims.insert(s.dims.end(), other.dims.begin(), other.dims.end());
  return s;
}

std::size_t max_entries() { return g_max_entries.load(); }
void set_max_entries(std::size_t cap) { g_max_entries.store(cap); }

std::size_t checked_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

std::size_t checked_pow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) r = checked_mul(r, base);
  return r;
}

void require_entries(std::size_t rows, std::size_t cols, std::string_view what) {
  const std::size_t entries = checked_mul(rows, cols);
  if (entries > max_entries()) {
    throw InstanceTooLarge(std::string(what), entries, max_entries());
  }
}

ComplexMatrix identity(std::size_t d) {
  require_entries(d, d, "identity");
  return ComplexMatrix::Identity(d, d);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rows = checked_mul(a.rows(), b.rows());
  const std::size_t cols = checked_mul(a.cols(), b.cols());
  require_entries(rows, cols, "kron");
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron_all(std::span<const ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::Ones(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

ComplexMatrix kron_power(const ComplexMatrix& m, int copies) {
  ComplexMatrix out = ComplexMatrix::Ones(1, 1);
  for (int k = 0; k < copies; ++k) out = kron(out, m);
  return out;
}

std::vector<std::size_t> factor_reorder_map(const SystemShape& shape,
                                            std::span<const int> order) {
  const std::size_t nf = shape.factors();
  if (order.size() != nf) throw ShapeMismatch("factor order length");
  std::vector<bool> seen(nf, false);
  for (int f : order) {
    if (f < 0 || static_cast<std::size_t>(f) >= nf || seen[f]) {
      throw ShapeMismatch("factor order is not a permutation of the factors");
    }
    seen[f] = true;
  }
  std::vector<std::size_t> old_place(nf);
  std::size_t w = 1;
  for (std::size_t k = nf; k-- > 0;) {
    old_place[k] = w;
    w *= static_cast<std::size_t>(shape[k]);
  }
  const std::size_t total = shape.total();
  std::vector<std::size_t> map(total);
  std::vector<int> digits(nf, 0);  // digits in the new ordering
  for (std::size_t j = 0; j < total; ++j) {
    std::size_t old = 0;
    for (std::size_t k = 0; k < nf; ++k) old += digits[k] * old_place[order[k]];
    map[j] = old;
    for (std::size_t k = nf; k-- > 0;) {
      if (++digits[k] < shape[order[k]]) break;
      digits[k] = 0;
    }
  }
  return map;
}

SystemShape reorder_shape(const SystemShape& shape, std::span<const int> order) {
  SystemShape s;
  for (int f : order) s.dims.push_back(shape[f]);
  return s;
}

ComplexMatrix permute_factors(const ComplexMatrix& m, const SystemShape& shape,
                              std::span<const int> order) {
  const auto total = shape.total();
  if (static_cast<std::size_t>(m.rows()) != total ||
      static_cast<std::size_t>(m.cols()) != total) {
    throw ShapeMismatch("operator does not match system shape");
  }
  const auto map = factor_reorder_map(shape, order);
  ComplexMatrix out(total, total);
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) out(i, j) = m(map[i], map[j]);
  }
  return out;
}

ComplexMatrix permute_row_factors(const ComplexMatrix& m,
                                  const SystemShape& shape,
                                  std::span<const int> order) {
  const auto total = shape.total();
  if (static_cast<std::size_t>(m.rows()) != total) {
    throw ShapeMismatch("row count does not match system shape");
  }
  const auto map = factor_reorder_map(shape, order);
  ComplexMatrix out(total, m.cols());
  for (std::size_t i = 0; i < total; ++i) out.row(i) = m.row(map[i]);
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, const SystemShape& shape,
                            std::vector<int> traced) {
  const auto total = shape.total();
  if (m.rows() != m.cols() || static_cast<std::size_t>(m.rows()) != total) {
    throw ShapeMismatch("operator does not match system shape");
  }
  std::sort(traced.begin(), traced.end());
  traced.erase(std::unique(traced.begin(), traced.end()), traced.end());
  std::vector<int> order;
  std::size_t kept_dim = 1, traced_dim = 1;
  for (std::size_t f = 0; f < shape.factors(); ++f) {
    if (!std::binary_search(traced.begin(), traced.end(), static_cast<int>(f))) {
      order.push_back(static_cast<int>(f));
      kept_dim *= shape[f];
    }
  }
  for (int f : traced) {
    if (f < 0 || static_cast<std::size_t>(f) >= shape.factors()) {
      throw ShapeMismatch("traced factor index out of range");
    }
    order.push_back(f);
    traced_dim *= shape[f];
  }
  const auto map = factor_reorder_map(shape, order);
  ComplexMatrix out = ComplexMatrix::Zero(kept_dim, kept_dim);
  for (std::size_t i = 0; i < kept_dim; ++i) {
    for (std::size_t j = 0; j < kept_dim; ++j) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t) {
        acc += m(map[i * traced_dim + t], map[j * traced_dim + t]);
      }
      out(i, j) = acc;
    }
  }
  return out;
}

ComplexMatrix permutation_twirl(const ComplexMatrix& m, const SystemShape& shape,
                                const std::vector<std::vector<int>>& blocks) {
  const int n = static_cast<int>(blocks.size());
  if (n == 0) throw ShapeMismatch("twirl needs at least one block");
  std::vector<int> order;
  for (const auto& b : blocks) {
    if (b.size() != blocks[0].size()) throw ShapeMismatch("incongruent blocks");
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (b[k] < 0 || static_cast<std::size_t>(b[k]) >= shape.factors() ||
          shape[b[k]] != shape[blocks[0][k]]) {
        throw ShapeMismatch("incongruent blocks");
      }
      order.push_back(b[k]);
    }
  }
  if (order.size() != shape.factors()) {
    throw ShapeMismatch("blocks must cover every factor exactly once");
  }
  int block_dim = 1;
  for (int f : blocks[0]) block_dim *= shape[f];

  // Bring blocks together in block order, average, and undo the reordering.
  const ComplexMatrix grouped = permute_factors(m, shape, order);
  const auto dim = static_cast<std::size_t>(grouped.rows());
  ComplexMatrix acc = ComplexMatrix::Zero(dim, dim);
  const auto perms = all_permutations(n);
  for (const auto& pi : perms) {
    const auto map = permutation_basis_map(pi, block_dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) acc(map[i], map[j]) += grouped(i, j);
    }
  }
  acc /= static_cast<double>(perms.size());

  std::vector<int> inverse(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) inverse[order[k]] = static_cast<int>(k);
  return permute_factors(acc, reorder_shape(shape, order), inverse);
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("comparing matrices of different sizes");
  }
  return max_abs(a - b);
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && max_abs(m - m.adjoint()) <= tol;
}

double isometry_defect(const ComplexMatrix& v) {
  const ComplexMatrix g = v.adjoint() * v;
  return max_abs(g - ComplexMatrix::Identity(g.rows(), g.cols()));
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("eigenvalues of non-square");
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& m) {
  return hermitian_eigenvalues(m).minCoeff();
}

int hermitian_rank(const ComplexMatrix& m, double rel_tol) {
  const auto ev = hermitian_eigenvalues(m);
  const double scale = ev.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0;
  int r = 0;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev[k] > rel_tol * scale) ++r;
  }
  return r;
}

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m, double clip) {
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev[k] < -clip) {
      throw DomainError("square root of a matrix with eigenvalue " +
                        std::to_string(ev[k]));
    }
    ev[k] = std::sqrt(std::max(ev[k], 0.0));
  }
  const Eigen::MatrixXcd s =
      es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  return s;
}

ComplexMatrix hermitian_inv_sqrt(const ComplexMatrix& m) {
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  Eigen::VectorXd ev = es.eigenvalues();
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    if (ev[k] <= 0.0) throw DomainError("inverse square root of a singular matrix");
    ev[k] = 1.0 / std::sqrt(ev[k]);
  }
  const Eigen::MatrixXcd s =
      es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  return s;
}

double trace_norm(const ComplexMatrix& m) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd{Eigen::MatrixXcd(m)};
  return svd.singularValues().sum();
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd{Eigen::MatrixXcd(m)};
  return svd.singularValues()(0);
}

ComplexVector vectorize(const ComplexMatrix& x) {
  ComplexVector v(x.size());
  for (Eigen::Index q = 0; q < x.cols(); ++q) {
    for (Eigen::Index p = 0; p < x.rows(); ++p) v[p + q * x.rows()] = x(p, q);
  }
  return v;
}

ComplexMatrix unvectorize(const ComplexVector& v, std::size_t rows,
                          std::size_t cols) {
  if (static_cast<std::size_t>(v.size()) != rows * cols) {
    throw ShapeMismatch("vector length does not match matrix size");
  }
  ComplexMatrix x(rows, cols);
  for (std::size_t q = 0; q < cols; ++q) {
    for (std::size_t p = 0; p < rows; ++p) x(p, q) = v[p + q * rows];
  }
  return x;
}

}  // namespace stinespring
