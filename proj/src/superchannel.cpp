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

#include "stinespring/superchannel.hpp"

#include <map>
#include <string>

#include "stinespring/errors.hpp"
#include "stinespring/schur.hpp"
#include "stinespring/symrep.hpp"
#include "stinespring/tensor.hpp"

namespace stinespring {

namespace {

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// order[k] for regrouping n interleaved (X_k Y_k) pairs into X^n Y^n.
std::vector<int> group_order(int n) {
  std::vector<int> order;
  for (int k = 0; k < n; ++k) order.push_back(2 * k);
  for (int k = 0; k < n; ++k) order.push_back(2 * k + 1);
  return order;
}

// The inverse: X^n Y^n back to interleaved pairs.
std::vector<int> interleave_order(int n) {
  std::vector<int> order;
  for (int k = 0; k < n; ++k) {
    order.push_back(k);
    order.push_back(n + k);
  }
  return order;
}

SystemShape paired_shape(int dx, int dy, int n) {
  SystemShape s;
  for (int k = 0; k < n; ++k) {
    s.dims.push_back(dx);
    s.dims.push_back(dy);
  }
  return s;
}

std::vector<ComplexMatrix> nonzero_kraus_power(const KrausChannel& ch, int n) {
  std::vector<ComplexMatrix> out;
  for (auto& k : kraus_tensor_power(ch, n)) {
    if (max_abs(k) > 0.0) out.push_back(std::move(k));
  }
  return out;
}

SuperchannelSpec spec_of(const KrausChannel& ch, int n, int r) {
  SuperchannelSpec s{n, ch.d_in(), ch.d_out(), r};
  s.validate();
  return s;
}

void require_superop(const SuperchannelSpec& s) {
  const std::size_t out = checked_pow(static_cast<std::size_t>(s.d_b) * s.r, s.n);
  const std::size_t in = checked_pow(s.d_a, s.n);
  require_entries(checked_mul(out, out), checked_mul(in, in), "superchannel superoperator");
}

}  // namespace

void SuperchannelSpec::validate() const {
  if (n < 1 || d_a < 1 || d_b < 1 || r < 1) {
    throw DomainError("n, d_a, d_b and r must be positive");
  }
  if (r > d_a * d_b) throw DomainError("r must not exceed d_a*d_b");
}

SystemShape SuperchannelSpec::output_shape() const {
  return SystemShape::uniform(d_b, n).concat(SystemShape::uniform(r, n));
}

ComplexMatrix r_n_operator(const PurificationSpec& spec) {
  const int d = spec.d, n = spec.n;
  if (d < 1 || n < 1) throw DomainError("purification needs d, n >= 1");
  const std::size_t dim = checked_pow(static_cast<std::size_t>(d) * d, n);
  require_entries(dim, dim, "R_n");
  ComplexVector g = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) g[i * d + i] = 1.0;
  const ComplexMatrix gamma = g * g.adjoint();
  const auto order = group_order(n);
  const ComplexMatrix grouped =
      permute_factors(kron_power(gamma, n), paired_shape(d, d, n), order);
  std::vector<int> b_factors;
  for (int k = 0; k < n; ++k) b_factors.push_back(n + k);
  return partial_haar_twirl(grouped, SystemShape::uniform(d, 2 * n), b_factors);
}

ComplexMatrix random_purification_apply(const PurificationSpec& spec, const ComplexMatrix& x) {
  return random_purification_apply(spec, hermitian_sqrt(r_n_operator(spec)), x);
}

ComplexMatrix random_purification_apply(const PurificationSpec& spec, const ComplexMatrix& sqrt_r,
                                        const ComplexMatrix& x) {
  const std::size_t da = checked_pow(spec.d, spec.n);
  if (static_cast<std::size_t>(x.rows()) != da || static_cast<std::size_t>(x.cols()) != da) {
    throw ShapeMismatch("input is not d^n x d^n");
  }
  if (static_cast<std::size_t>(sqrt_r.rows()) != da * da) throw ShapeMismatch("sqrt(R_n) size");
  const ComplexMatrix y = sqrt_r * kron(x, identity(da)) * sqrt_r;
  return permute_factors(y, SystemShape::uniform(spec.d, 2 * spec.n), interleave_order(spec.n));
}

ComplexMatrix dilation_power(const StinespringIsometry& v, const ComplexMatrix& u, int n) {
  const ComplexMatrix w = rotate_environment(v, u).v;
  require_entries(checked_pow(w.rows(), n), checked_pow(w.cols(), n), "dilation power");
  return permute_row_factors(kron_power(w, n), paired_shape(v.d_out, v.d_env, n), group_order(n));
}

McEstimate stinespring_rand_isometry_mc(const StinespringIsometry& v, int n,
                                        std::size_t samples, std::uint64_t seed,
                                        unsigned threads) {
  const std::size_t out = checked_pow(static_cast<std::size_t>(v.d_out) * v.d_env, n);
  const std::size_t in = checked_pow(v.d_in, n);
  require_entries(checked_mul(out, out), checked_mul(in, in), "Monte-Carlo superoperator");
  const double defect = isometry_defect(v.v);
  if (defect > 1e-9) throw NotAChannel("not an isometry");
  return monte_carlo_mean(
      samples, seed,
      [&](Rng& rng) {
        const ComplexMatrix w = dilation_power(v, haar_unitary(v.d_env, rng), n);
        return ComplexMatrix(kron(w.conjugate(), w));
      },
      threads);
}

Superoperator mc_superoperator(const StinespringIsometry& v, int n, const McEstimate& est) {
  return {SystemShape::uniform(v.d_in, n),
          SystemShape::uniform(v.d_out, n).concat(SystemShape::uniform(v.d_env, n)), est.mean};
}

Superoperator tensor_power_superoperator(const KrausChannel& ch, int n) {
  const std::size_t in = checked_pow(ch.d_in(), n), out = checked_pow(ch.d_out(), n);
  require_entries(checked_mul(out, out), checked_mul(in, in), "tensor power superoperator");
  ComplexMatrix s = ComplexMatrix::Zero(out * out, in * in);
  for (const auto& k : nonzero_kraus_power(ch, n)) s += kron(k.conjugate(), k);
  return {SystemShape::uniform(ch.d_in(), n), SystemShape::uniform(ch.d_out(), n), s};
}

Superoperator omega_explicit(const KrausChannel& ch, int n, int r) {
  const SuperchannelSpec spec = spec_of(ch, n, r);
  require_superop(spec);
  const KrausChannel padded = pad_kraus(ch, r);
  const auto kn = nonzero_kraus_power(padded, n);
  const std::size_t da = checked_pow(spec.d_a, n), db = checked_pow(spec.d_b, n);
  const std::size_t de = checked_pow(r, n), dout = db * de;

  ComplexMatrix m = ComplexMatrix::Zero(de, de);
  for (const auto& lambda : partitions(n, r)) {
    const double w = static_cast<double>(dim_irrep_sym(lambda)) /
                     (factorial(n) * static_cast<double>(dim_irrep_unitary(r, lambda)));
    m += w * isotypical_projector(lambda, r);
  }
  const auto perms = all_permutations(n);
  std::vector<ComplexMatrix> env;
  std::vector<std::vector<std::size_t>> inv_a, map_b;
  for (const auto& p : perms) {
    env.push_back(permutation_unitary(p, r) * m);
    inv_a.push_back(permutation_basis_map(p.inverse(), spec.d_a));
    map_b.push_back(permutation_basis_map(p, spec.d_b));
  }

  ComplexMatrix s(dout * dout, da * da);
  ComplexMatrix y(db, db), z(db, db);
  for (std::size_t b = 0; b < da; ++b) {
    for (std::size_t a = 0; a < da; ++a) {
      ComplexMatrix out = ComplexMatrix::Zero(dout, dout);
      for (std::size_t p = 0; p < perms.size(); ++p) {
        const std::size_t ap = inv_a[p][a];
        y.setZero();
        for (const auto& k : kn) y += k.col(ap) * k.col(b).adjoint();
        for (std::size_t i = 0; i < db; ++i) z.row(map_b[p][i]) = y.row(i);
        out += kron(z, env[p]);
      }
      s.col(a + b * da) = vectorize(out);
    }
  }
  return {spec.input_shape(), spec.output_shape(), s};
}

Superoperator circuit_superchannel(const KrausChannel& ch, int n, int r) {
  const SuperchannelSpec spec = spec_of(ch, n, r);
  require_superop(spec);
  const KrausChannel padded = pad_kraus(ch, r);
  const auto kn = nonzero_kraus_power(padded, n);
  const std::size_t da = checked_pow(spec.d_a, n), db = checked_pow(spec.d_b, n);
  const std::size_t de = checked_pow(r, n), dout = db * de;

  const ComplexMatrix qft = sn_qft(n);
  const std::size_t nf = static_cast<std::size_t>(qft.rows());
  const ComplexMatrix uniform = qft.adjoint().col(0);
  // Encoder: uniform superposition on the group register, then Cπ on A^n.
  const ComplexMatrix enc = controlled_permutation(spec.d_a, n, false) * kron(uniform, identity(da));
  // Decoder: Cπ† on B^n, then the Fourier transform on the group register.
  const ComplexMatrix dec = kron(qft, identity(db)) * controlled_permutation(spec.d_b, n, true);
  std::vector<ComplexMatrix> lk;
  for (const auto& k : kn) lk.push_back(dec * (kron(identity(nf), k) * enc));

  const SnFourierBasis fourier = sn_fourier_basis(n);
  const SchurBasis schur = schur_transform(r, n);
  std::map<Partition, const SchurBasis::Block*> block_of;
  for (const auto& blk : schur.blocks) block_of[blk.lambda] = &blk;
  const ComplexMatrix qe = kron(schur.u_schur, identity(db));

  std::vector<int> to_be;
  for (int k = 0; k < n; ++k) to_be.push_back(n + k);
  for (int k = 0; k < n; ++k) to_be.push_back(k);
  const SystemShape eb_shape = SystemShape::uniform(r, n).concat(SystemShape::uniform(spec.d_b, n));

  ComplexMatrix s(dout * dout, da * da);
  ComplexMatrix x3(nf * db, nf * db);
  for (std::size_t b = 0; b < da; ++b) {
    for (std::size_t a = 0; a < da; ++a) {
      x3.setZero();
      for (const auto& l : lk) x3 += l.col(a) * l.col(b).adjoint();
      // 𝒯 on the group register, written in the Schur-label basis of E^n.
      ComplexMatrix t = ComplexMatrix::Zero(dout, dout);
      for (std::size_t l1 = 0; l1 < nf; ++l1) {
        const auto& f1 = fourier.labels[l1];
        for (std::size_t l2 = 0; l2 < nf; ++l2) {
          const auto& f2 = fourier.labels[l2];
          if (f1.lambda != f2.lambda || f1.i != f2.i) continue;
          const auto blk = block_of.find(f1.lambda);
          if (blk != block_of.end()) {
            const auto& bk = *blk->second;
            const double w = 1.0 / bk.dim_unitary;
            for (int al = 0; al < bk.dim_unitary; ++al) {
              const std::size_t e1 = bk.offset + f1.j * bk.dim_unitary + al;
              const std::size_t e2 = bk.offset + f2.j * bk.dim_unitary + al;
              t.block(e1 * db, e2 * db, db, db) += w * x3.block(l1 * db, l2 * db, db, db);
            }
          } else if (f1.j == f2.j) {
            const double w = 1.0 / static_cast<double>(de);
            for (std::size_t e = 0; e < de; ++e) {
              t.block(e * db, e * db, db, db) += w * x3.block(l1 * db, l2 * db, db, db);
            }
          }
        }
      }
      const ComplexMatrix rotated = qe * t * qe.adjoint();
      s.col(a + b * da) = vectorize(permute_factors(rotated, eb_shape, to_be));
    }
  }
  return {spec.input_shape(), spec.output_shape(), s};
}

CheckReport choi_consistency_check(const KrausChannel& ch, int n, double tol) {
  const int da = ch.d_in(), db = ch.d_out(), r = da * db;
  const Superoperator omega = omega_explicit(ch, n, r);
  const ChoiMatrix j = superoperator_to_choi(omega);
  const SystemShape shape = SystemShape::uniform(da, n)
                                .concat(SystemShape::uniform(db, n))
                                .concat(SystemShape::uniform(r, n));
  std::vector<int> order;
  for (int k = 0; k < n; ++k) {
    order.push_back(k);
    order.push_back(n + k);
    order.push_back(2 * n + k);
  }
  const ComplexMatrix lhs = permute_factors(j.matrix, shape, order);
  const ComplexMatrix jn = kron_power(kraus_to_choi(ch).matrix, n);
  const ComplexMatrix rhs = random_purification_apply(PurificationSpec{da * db, n}, jn);
  return {max_abs_diff(lhs, rhs), tol};
}

CheckReport marginal_check(const Superoperator& omega, const KrausChannel& ch, int n,
                           double tol) {
  std::vector<int> env;
  for (int k = 0; k < n; ++k) env.push_back(n + k);
  const Superoperator marg = trace_output_factors(omega, env);
  return {max_abs_diff(marg.matrix, tensor_power_superoperator(ch, n).matrix), tol};
}

CheckReport covariance_check(const Superoperator& omega, const SuperchannelSpec& spec,
                             double tol) {
  const int n = spec.n;
  const std::size_t da = checked_pow(spec.d_a, n), db = checked_pow(spec.d_b, n);
  const std::size_t de = checked_pow(spec.r, n), dout = db * de;
  if (static_cast<std::size_t>(omega.matrix.rows()) != dout * dout ||
      static_cast<std::size_t>(omega.matrix.cols()) != da * da) {
    throw ShapeMismatch("superoperator does not match the instance");
  }
  double worst = 0;
  for (const auto& p : all_permutations(n)) {
    const auto ma = permutation_basis_map(p, spec.d_a);
    const auto ib = permutation_basis_map(p.inverse(), spec.d_b);
    const auto ie = permutation_basis_map(p.inverse(), spec.r);
    std::vector<std::size_t> w_inv(dout);
    for (std::size_t pb = 0; pb < db; ++pb) {
      for (std::size_t pe = 0; pe < de; ++pe) w_inv[pb * de + pe] = ib[pb] * de + ie[pe];
    }
    for (std::size_t b = 0; b < da; ++b) {
      for (std::size_t a = 0; a < da; ++a) {
        const auto lhs_col = ma[a] + ma[b] * da, rhs_col = a + b * da;
        for (std::size_t q = 0; q < dout; ++q) {
          for (std::size_t pp = 0; pp < dout; ++pp) {
            const Complex lhs = omega.matrix(pp + q * dout, lhs_col);
            const Complex rhs = omega.matrix(w_inv[pp] + w_inv[q] * dout, rhs_col);
            worst = std::max(worst, std::abs(lhs - rhs));
          }
        }
      }
    }
  }
  return {worst, tol};
}

CheckReport environment_twirl_check(const Superoperator& omega, const SuperchannelSpec& spec,
                                    double tol) {
  const ChoiMatrix j = superoperator_to_choi(omega);
  const SystemShape shape = spec.input_shape().concat(spec.output_shape());
  std::vector<int> env;
  for (int k = 0; k < spec.n; ++k) env.push_back(2 * spec.n + k);
  return {max_abs_diff(partial_haar_twirl(j.matrix, shape, env), j.matrix), tol};
}

CptpReport superoperator_cptp(const Superoperator& s) {
  return check_cptp(superoperator_to_choi(s));
}

StatementReport random_isometry_statement_check(const KrausChannel& ch, int n, int r, int trials,
                                                std::size_t samples, std::uint64_t seed,
                                                unsigned threads) {
  const SuperchannelSpec spec = spec_of(ch, n, r);
  if (trials < 1) throw DomainError("trials must be positive");
  const KrausChannel padded = pad_kraus(ch, r);
  Rng rng = substream(seed, std::uint64_t{1} << 62);

  // A second dilation of the same channel, in a different environment gauge.
  const StinespringIsometry v = kraus_to_stinespring(padded);
  const StinespringIsometry v2 = rotate_environment(v, haar_unitary(r, rng));
  const KrausChannel ch2 = stinespring_to_kraus(v2);

  StatementReport rep;
  rep.trials = static_cast<std::size_t>(trials);
  rep.samples = samples;
  const Superoperator omega = omega_explicit(padded, n, r);
  rep.gauge = {max_abs_diff(omega.matrix, omega_explicit(ch2, n, r).matrix), 1e-9};

  const std::size_t da = checked_pow(spec.d_a, n);
  std::vector<ComplexMatrix> inputs;
  for (int t = 0; t < trials; ++t) {
    if (t % 3 == 0) {
      inputs.push_back(kron_power(random_density_matrix(spec.d_a, spec.d_a, rng), n));
    } else if (t % 3 == 1) {
      std::vector<ComplexMatrix> f;
      for (int k = 0; k < n; ++k) f.push_back(random_density_matrix(spec.d_a, spec.d_a, rng));
      inputs.push_back(kron_all(f));
    } else {
      const ComplexVector psi = haar_state(static_cast<int>(da), rng);
      inputs.push_back(psi * psi.adjoint());
    }
  }
  const Superoperator circuit = circuit_superchannel(padded, n, r);
  const std::size_t dout = circuit.d_out();
  ComplexMatrix exact(dout, dout * trials);
  for (int t = 0; t < trials; ++t) {
    exact.middleCols(t * dout, dout) = apply_superoperator(circuit, inputs[t]);
  }
  const McEstimate est = monte_carlo_mean(
      samples, seed,
      [&](Rng& g) {
        const ComplexMatrix w = dilation_power(v2, haar_unitary(r, g), n);
        ComplexMatrix out(dout, dout * trials);
        for (int t = 0; t < trials; ++t) {
          out.middleCols(t * dout, dout) = w * inputs[t] * w.adjoint();
        }
        return out;
      },
      threads);
  rep.outputs = compare_to_estimate(exact, est);
  return rep;
}

}  // namespace stinespring
