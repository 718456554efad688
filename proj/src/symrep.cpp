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

#include "stinespring/symrep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

#include "stinespring/errors.hpp"
#include "stinespring/tensor.hpp"

namespace stinespring {

using boost::multiprecision::cpp_int;

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw DomainError("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw DomainError("partition parts must be nonincreasing");
  }
}

int Partition::n() const {
  int s = 0;
  for (int p : parts) s += p;
  return s;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions(int n, int max_len) {
  if (n < 0 || max_len < 1) throw DomainError("partitions needs n >= 0 and max_len >= 1");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_len) return;
    for (int p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Partition> partitions(int n) { return partitions(n, std::max(n, 1)); }

Partition cycle_type(const Permutation& p) { return Partition(p.cycle_type()); }

namespace {

std::vector<int> conjugate(const Partition& l) {
  std::vector<int> c(l.length() ? l[0] : 0, 0);
  for (int p : l.parts) {
    for (int j = 0; j < p; ++j) ++c[j];
  }
  return c;
}

cpp_int hook_product(const Partition& l) {
  const auto c = conjugate(l);
  cpp_int h = 1;
  for (int i = 0; i < l.length(); ++i) {
    for (int j = 0; j < l[i]; ++j) h *= l[i] - j + c[j] - i - 1;
  }
  return h;
}

std::uint64_t to_u64(const cpp_int& v) {
  if (v > cpp_int(std::numeric_limits<std::uint64_t>::max())) {
    throw DomainError("dimension does not fit in 64 bits");
  }
  return v.convert_to<std::uint64_t>();
}

std::int64_t mn_rec(std::vector<int> beta, std::vector<int> mu) {
  if (mu.empty()) return 1;
  const int k = mu.back();
  mu.pop_back();
  std::int64_t total = 0;
  for (std::size_t b = 0; b < beta.size(); ++b) {
    const int x = beta[b], y = x - k;
    if (y < 0 || std::find(beta.begin(), beta.end(), y) != beta.end()) continue;
    int between = 0;
    for (int z : beta) between += (z > y && z < x);
    auto next = beta;
    next[b] = y;
    const std::int64_t sub = mn_rec(std::move(next), mu);
    total += (between % 2 ? -sub : sub);
  }
  return total;
}

}  // namespace

std::uint64_t dim_irrep_sym(const Partition& lambda) {
  cpp_int f = 1;
  for (int i = 2; i <= lambda.n(); ++i) f *= i;
  return to_u64(f / hook_product(lambda));
}

std::uint64_t dim_irrep_unitary(int d, const Partition& lambda) {
  if (lambda.length() > d) return 0;
  cpp_int num = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) num *= d + j - i;
  }
  return to_u64(num / hook_product(lambda));
}

std::int64_t character(const Partition& lambda, const Partition& mu) {
  if (lambda.n() != mu.n()) throw DomainError("character: partitions of different n");
  const int len = lambda.length();
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + len - 1 - i;
  return mn_rec(beta, mu.parts);
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
  const int n = lambda.n();
  std::vector<Tableau> out;
  std::vector<int> filled(lambda.length(), 0);
  Tableau cur{std::vector<int>(n), std::vector<int>(n)};
  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      out.push_back(cur);
      return;
    }
    for (int r = 0; r < lambda.length(); ++r) {
      if (filled[r] == lambda[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      cur.row[k] = r;
      cur.col[k] = filled[r]++;
      rec(k + 1);
      --filled[r];
    }
  };
  rec(0);
  return out;
}

OrthogonalRep orthogonal_rep(const Partition& lambda) {
  OrthogonalRep rep{lambda, standard_tableaux(lambda), {}};
  const int n = lambda.n(), dim = rep.dim();
  std::map<std::vector<int>, int> index;
  for (int t = 0; t < dim; ++t) index[rep.tableaux[t].row] = t;
  for (int k = 0; k + 1 < n; ++k) {
    RealMatrix g = RealMatrix::Zero(dim, dim);
    for (int t = 0; t < dim; ++t) {
      const Tableau& tab = rep.tableaux[t];
      if (tab.row[k] == tab.row[k + 1]) {
        g(t, t) = 1.0;
      } else if (tab.col[k] == tab.col[k + 1]) {
        g(t, t) = -1.0;
      } else {
        const double rho = tab.content(k + 1) - tab.content(k);
        auto swapped = tab.row;
        std::swap(swapped[k], swapped[k + 1]);
        g(t, t) = 1.0 / rho;
        g(index.at(swapped), t) = std::sqrt(1.0 - 1.0 / (rho * rho));
      }
    }
    rep.generators.push_back(std::move(g));
  }
  return rep;
}

RealMatrix OrthogonalRep::matrix(const Permutation& sigma) const {
  if (sigma.size() != lambda.n()) throw DomainError("permutation size does not match partition");
  RealMatrix m = RealMatrix::Identity(dim(), dim());
  for (int k : sigma.adjacent_decomposition()) m = m * generators[k];
  return m;
}

RealMatrix young_orthogonal_matrix(const Partition& lambda, const Permutation& sigma) {
  return orthogonal_rep(lambda).matrix(sigma);
}

ComplexMatrix permutation_sum(const std::vector<Complex>& coeffs, int n, int d) {
  const auto perms = all_permutations(n);
  if (coeffs.size() != perms.size()) throw ShapeMismatch("one coefficient per permutation expected");
  const std::size_t dim = checked_pow(d, n);
  require_entries(dim, dim, "permutation operator");
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (std::size_t s = 0; s < perms.size(); ++s) {
    if (coeffs[s] == Complex(0.0)) continue;
    const auto map = permutation_basis_map(perms[s], d);
    for (std::size_t x = 0; x < dim; ++x) out(map[x], x) += coeffs[s];
  }
  return out;
}

ComplexMatrix isotypical_projector(const Partition& lambda, int d) {
  const int n = lambda.n();
  const auto perms = all_permutations(n);
  std::vector<Complex> c(perms.size(), 0.0);
  if (lambda.length() <= d) {
    double fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    const double scale = static_cast<double>(dim_irrep_sym(lambda)) / fact;
    std::map<Partition, std::int64_t> chi;
    for (std::size_t s = 0; s < perms.size(); ++s) {
      const auto mu = cycle_type(perms[s]);
      if (!chi.count(mu)) chi[mu] = character(lambda, mu);
      c[s] = scale * static_cast<double>(chi[mu]);
    }
  }
  return permutation_sum(c, n, d);
}

double weingarten(const Partition& mu, int d) {
  if (d < 1) throw DomainError("weingarten needs d >= 1");
  const int n = mu.n();
  double fact = 1;
  for (int i = 2; i <= n; ++i) fact *= i;
  double sum = 0;
  for (const auto& lambda : partitions(n, d)) {
    const double dl = static_cast<double>(dim_irrep_sym(lambda));
    sum += dl * dl / static_cast<double>(dim_irrep_unitary(d, lambda)) *
           static_cast<double>(character(lambda, mu));
  }
  return sum / (fact * fact);
}

WeingartenTable::WeingartenTable(int n_, int d_) : n(n_), d(d_) {
  for (const auto& mu : partitions(n)) values[mu] = weingarten(mu, d);
}

double WeingartenTable::operator()(const Permutation& sigma) const {
  return values.at(cycle_type(sigma));
}

RealMatrix WeingartenTable::pair_matrix() const {
  const auto perms = all_permutations(n);
  const auto m = static_cast<Eigen::Index>(perms.size());
  RealMatrix w(m, m);
  for (Eigen::Index s = 0; s < m; ++s) {
    for (Eigen::Index t = 0; t < m; ++t) w(s, t) = (*this)(perms[t].inverse() * perms[s]);
  }
  return w;
}

ComplexMatrix haar_twirl(const ComplexMatrix& a, int d, int n) {
  const std::size_t dim = checked_pow(d, n);
  if (static_cast<std::size_t>(a.rows()) != dim || static_cast<std::size_t>(a.cols()) != dim) {
    throw ShapeMismatch("haar_twirl input is not d^n x d^n");
  }
  const auto perms = all_permutations(n);
  const RealMatrix w = WeingartenTable(n, d).pair_matrix();
  std::vector<Complex> t(perms.size(), 0.0), c(perms.size(), 0.0);
  for (std::size_t s = 0; s < perms.size(); ++s) {
    const auto map = permutation_basis_map(perms[s], d);
    for (std::size_t x = 0; x < dim; ++x) t[s] += a(map[x], x);
  }
  for (std::size_t tau = 0; tau < perms.size(); ++tau) {
    for (std::size_t s = 0; s < perms.size(); ++s) c[tau] += w(s, tau) * t[s];
  }
  return permutation_sum(c, n, d);
}

ComplexMatrix partial_haar_twirl(const ComplexMatrix& x, const SystemShape& shape,
                                 const std::vector<int>& twirled) {
  const int nf = static_cast<int>(shape.factors());
  if (static_cast<std::size_t>(x.rows()) != shape.total() || x.rows() != x.cols()) {
    throw ShapeMismatch("operator does not match shape");
  }
  if (twirled.empty()) throw ShapeMismatch("no factors to twirl");
  std::vector<bool> used(nf, false);
  for (int f : twirled) {
    if (f < 0 || f >= nf || used[f]) throw ShapeMismatch("bad twirled factor list");
    used[f] = true;
  }
  const int d = shape[twirled[0]];
  for (int f : twirled) {
    if (shape[f] != d) throw ShapeMismatch("twirled factors differ in dimension");
  }
  const int n = static_cast<int>(twirled.size());
  std::vector<int> order;
  for (int f = 0; f < nf; ++f) {
    if (!used[f]) order.push_back(f);
  }
  order.insert(order.end(), twirled.begin(), twirled.end());
  const ComplexMatrix xr = permute_factors(x, shape, order);
  const std::size_t tdim = checked_pow(d, n);
  const std::size_t sdim = shape.total() / tdim;

  const auto perms = all_permutations(n);
  const RealMatrix w = WeingartenTable(n, d).pair_matrix();
  std::vector<std::vector<std::size_t>> maps;
  for (const auto& p : perms) maps.push_back(permutation_basis_map(p, d));

  std::vector<ComplexMatrix> y(perms.size(), ComplexMatrix::Zero(sdim, sdim));
  for (std::size_t s = 0; s < perms.size(); ++s) {
    for (std::size_t a = 0; a < sdim; ++a) {
      for (std::size_t b = 0; b < sdim; ++b) {
        Complex acc = 0.0;
        for (std::size_t t = 0; t < tdim; ++t) acc += xr(a * tdim + maps[s][t], b * tdim + t);
        y[s](a, b) = acc;
      }
    }
  }
  ComplexMatrix out = ComplexMatrix::Zero(xr.rows(), xr.cols());
  for (std::size_t tau = 0; tau < perms.size(); ++tau) {
    ComplexMatrix z = ComplexMatrix::Zero(sdim, sdim);
    for (std::size_t s = 0; s < perms.size(); ++s) {
      if (w(s, tau) != 0.0) z += w(s, tau) * y[s];
    }
    for (std::size_t a = 0; a < sdim; ++a) {
      for (std::size_t b = 0; b < sdim; ++b) {
        for (std::size_t t = 0; t < tdim; ++t) out(a * tdim + maps[tau][t], b * tdim + t) += z(a, b);
      }
    }
  }
  std::vector<int> back(nf);
  for (int k = 0; k < nf; ++k) back[order[k]] = k;
  return permute_factors(out, reorder_shape(shape, order), back);
}

}  // namespace stinespring
