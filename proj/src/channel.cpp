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

#include "stinespring/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stinespring/errors.hpp"
#include "stinespring/tensor.hpp"

namespace stinespring {

KrausChannel::KrausChannel(int d_in, int d_out, std::vector<ComplexMatrix> kraus,
                           double tp_tol)
    : d_in_(d_in), d_out_(d_out), kraus_(std::move(kraus)) {
  if (d_in < 1 || d_out < 1) throw DomainError("channel dimensions must be positive");
  if (kraus_.empty()) throw DomainError("Kraus list is empty");
  for (const auto& k : kraus_) {
    if (k.rows() != d_out || k.cols() != d_in) {
      throw ShapeMismatch("Kraus operator is not d_out × d_in");
    }
  }
  const double dev = tp_deviation();
  if (dev > tp_tol) {
    throw NotAChannel("trace-preservation violated (max deviation " +
                      std::to_string(dev) + ")");
  }
}

double KrausChannel::tp_deviation() const {
  ComplexMatrix s = ComplexMatrix::Zero(d_in_, d_in_);
  for (const auto& k : kraus_) s += k.adjoint() * k;
  return max_abs(s - ComplexMatrix::Identity(d_in_, d_in_));
}

KrausChannel identity_channel(int d) {
  return KrausChannel(d, d, {ComplexMatrix::Identity(d, d)});
}

KrausChannel unitary_channel(const ComplexMatrix& u) {
  return KrausChannel(static_cast<int>(u.cols()), static_cast<int>(u.rows()), {u});
}

KrausChannel depolarizing_channel(int d, double p) {
  const double d2 = static_cast<double>(d) * d;
  const double w0 = 1.0 - p + p / d2;
  if (w0 < 0.0 || p < 0.0) throw DomainError("depolarizing parameter out of range");
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi / d);
  std::vector<ComplexMatrix> kraus;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      // X^a Z^b
      ComplexMatrix w = ComplexMatrix::Zero(d, d);
      for (int j = 0; j < d; ++j) w((j + a) % d, j) = std::pow(omega, j * b);
      const double weight = (a == 0 && b == 0) ? w0 : p / d2;
      kraus.push_back(std::sqrt(weight) * w);
    }
  }
  return KrausChannel(d, d, std::move(kraus));
}

KrausChannel amplitude_damping_channel(double gamma) {
  ComplexMatrix k0 = ComplexMatrix::Zero(2, 2), k1 = ComplexMatrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - gamma);
  k1(0, 1) = std::sqrt(gamma);
  return KrausChannel(2, 2, {k0, k1});
}

KrausChannel bit_flip_channel(double p) {
  ComplexMatrix k0 = std::sqrt(1.0 - p) * ComplexMatrix::Identity(2, 2);
  ComplexMatrix k1 = ComplexMatrix::Zero(2, 2);
  k1(0, 1) = k1(1, 0) = std::sqrt(p);
  return KrausChannel(2, 2, {k0, k1});
}

KrausChannel random_channel(int d_in, int d_out, int r, Rng& rng) {
  if (r < 1 || r * d_out < d_in) {
    throw DomainError("no channel " + std::to_string(d_in) + "→" +
                      std::to_string(d_out) + " with " + std::to_string(r) +
                      " Kraus operators (need r·d_out ≥ d_in)");
  }
  StinespringIsometry v{d_in, d_out, r, haar_isometry(d_out * r, d_in, rng)};
  return stinespring_to_kraus(v);
}

KrausChannel pad_kraus(const KrausChannel& ch, int r) {
  if (ch.size() > r) {
    throw DomainError("channel has " + std::to_string(ch.size()) +
                      " Kraus operators, more than the promised " + std::to_string(r));
  }
  auto kraus = ch.kraus();
  while (static_cast<int>(kraus.size()) < r) {
    kraus.push_back(ComplexMatrix::Zero(ch.d_out(), ch.d_in()));
  }
  return KrausChannel(ch.d_in(), ch.d_out(), std::move(kraus));
}

std::vector<ComplexMatrix> kraus_tensor_power(const KrausChannel& ch, int n) {
  require_entries(checked_pow(ch.d_out(), n), checked_pow(ch.d_in(), n),
                  "Kraus tensor power");
  std::vector<ComplexMatrix> out{ComplexMatrix::Ones(1, 1)};
  for (int copy = 0; copy < n; ++copy) {
    std::vector<ComplexMatrix> next;
    next.reserve(out.size() * ch.kraus().size());
    for (const auto& prefix : out) {
      for (const auto& k : ch.kraus()) next.push_back(kron(prefix, k));
    }
    out = std::move(next);
  }
  return out;
}

ComplexMatrix apply_kraus(const KrausChannel& ch, const ComplexMatrix& x) {
  if (x.rows() != ch.d_in() || x.cols() != ch.d_in()) {
    throw ShapeMismatch("input is not d_in × d_in");
  }
  ComplexMatrix out = ComplexMatrix::Zero(ch.d_out(), ch.d_out());
  for (const auto& k : ch.kraus()) out += k * x * k.adjoint();
  return out;
}

ChoiMatrix kraus_to_choi(const KrausChannel& ch) {
  const int din = ch.d_in(), dout = ch.d_out();
  const int dim = din * dout;
  require_entries(dim, dim, "Choi matrix");
  ComplexMatrix j = ComplexMatrix::Zero(dim, dim);
  ComplexVector kv(dim);
  for (const auto& k : ch.kraus()) {
    for (int i = 0; i < din; ++i) {
      for (int b = 0; b < dout; ++b) kv[i * dout + b] = k(b, i);
    }
    j += kv * kv.adjoint();
  }
  return {din, dout, j};
}

KrausChannel choi_to_kraus(const ChoiMatrix& j, double tol) {
  const Eigen::MatrixXcd h = 0.5 * (j.matrix + j.matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const auto& ev = es.eigenvalues();
  const double scale = ev.cwiseAbs().maxCoeff();
  if (ev.minCoeff() < -tol * scale) {
    throw NotAChannel("not completely positive (eigenvalue " +
                      std::to_string(ev.minCoeff()) + ")");
  }
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index m = ev.size(); m-- > 0;) {
    if (ev[m] <= tol * scale) continue;
    ComplexVector v = es.eigenvectors().col(m) * std::sqrt(ev[m]);
    Eigen::Index arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    v *= std::conj(v[arg]) / std::abs(v[arg]);
    ComplexMatrix k(j.d_out, j.d_in);
    for (int i = 0; i < j.d_in; ++i) {
      for (int b = 0; b < j.d_out; ++b) k(b, i) = v[i * j.d_out + b];
    }
    kraus.push_back(std::move(k));
  }
  return KrausChannel(j.d_in, j.d_out, std::move(kraus));
}

int choi_rank(const ChoiMatrix& j, double tol) { return hermitian_rank(j.matrix, tol); }

StinespringIsometry kraus_to_stinespring(const KrausChannel& ch) {
  const int r = ch.size();
  ComplexMatrix v = ComplexMatrix::Zero(ch.d_out() * r, ch.d_in());
  for (int e = 0; e < r; ++e) {
    for (int b = 0; b < ch.d_out(); ++b) v.row(b * r + e) = ch[e].row(b);
  }
  return {ch.d_in(), ch.d_out(), r, v};
}

KrausChannel stinespring_to_kraus(const StinespringIsometry& v) {
  std::vector<ComplexMatrix> kraus;
  for (int e = 0; e < v.d_env; ++e) {
    ComplexMatrix k(v.d_out, v.d_in);
    for (int b = 0; b < v.d_out; ++b) k.row(b) = v.v.row(b * v.d_env + e);
    kraus.push_back(std::move(k));
  }
  return KrausChannel(v.d_in, v.d_out, std::move(kraus));
}

Superoperator stinespring_to_channel(const StinespringIsometry& v, double tol) {
  const double defect = isometry_defect(v.v);
  if (defect > tol) {
    throw NotAChannel("not an isometry (max |V†V − 1| = " + std::to_string(defect) + ")");
  }
  return kraus_to_superoperator(stinespring_to_kraus(v));
}

Superoperator kraus_to_superoperator(const KrausChannel& ch) {
  const std::size_t din = ch.d_in(), dout = ch.d_out();
  require_entries(dout * dout, din * din, "superoperator");
  ComplexMatrix s = ComplexMatrix::Zero(dout * dout, din * din);
  for (const auto& k : ch.kraus()) s += kron(k.conjugate(), k);
  return {SystemShape{ch.d_in()}, SystemShape{ch.d_out()}, s};
}

Superoperator conjugation_superoperator(const ComplexMatrix& w,
                                        const SystemShape& in_shape,
                                        const SystemShape& out_shape) {
  if (static_cast<std::size_t>(w.cols()) != in_shape.total() ||
      static_cast<std::size_t>(w.rows()) != out_shape.total()) {
    throw ShapeMismatch("conjugating operator does not match shapes");
  }
  return {in_shape, out_shape, kron(w.conjugate(), w)};
}

ComplexMatrix apply_superoperator(const Superoperator& s, const ComplexMatrix& x) {
  const auto din = s.d_in();
  if (static_cast<std::size_t>(x.rows()) != din || static_cast<std::size_t>(x.cols()) != din) {
    throw ShapeMismatch("input operator does not match superoperator");
  }
  const ComplexVector y = s.matrix * vectorize(x);
  return unvectorize(y, s.d_out(), s.d_out());
}

ChoiMatrix superoperator_to_choi(const Superoperator& s) {
  const auto din = s.d_in(), dout = s.d_out();
  require_entries(din * dout, din * dout, "Choi matrix");
  ComplexMatrix j(din * dout, din * dout);
  for (std::size_t i = 0; i < din; ++i) {
    for (std::size_t jj = 0; jj < din; ++jj) {
      for (std::size_t b = 0; b < dout; ++b) {
        for (std::size_t bp = 0; bp < dout; ++bp) {
          j(i * dout + b, jj * dout + bp) = s.matrix(b + bp * dout, i + jj * din);
        }
      }
    }
  }
  return {static_cast<int>(din), static_cast<int>(dout), j};
}

Superoperator trace_output_factors(const Superoperator& s,
                                   const std::vector<int>& traced) {
  SystemShape kept;
  for (std::size_t f = 0; f < s.out_shape.factors(); ++f) {
    bool drop = false;
    for (int t : traced) drop = drop || t == static_cast<int>(f);
    if (!drop) kept.dims.push_back(s.out_shape[f]);
  }
  const auto dout = s.d_out(), dk = kept.total();
  ComplexMatrix m(dk * dk, s.matrix.cols());
  for (Eigen::Index c = 0; c < s.matrix.cols(); ++c) {
    const ComplexMatrix out = unvectorize(s.matrix.col(c), dout, dout);
    m.col(c) = vectorize(partial_trace(out, s.out_shape, traced));
  }
  return {s.in_shape, kept, m};
}

CptpReport check_cptp(const ChoiMatrix& j) {
  const ComplexMatrix tb =
      partial_trace(j.matrix, SystemShape{j.d_in, j.d_out}, {1});
  return {min_eigenvalue(j.matrix),
          max_abs(tb - ComplexMatrix::Identity(j.d_in, j.d_in))};
}

double choi_trace_distance(const ChoiMatrix& j1, const ChoiMatrix& j2) {
  if (j1.d_in != j2.d_in || j1.d_out != j2.d_out) {
    throw ShapeMismatch("Choi matrices of different channels shapes");
  }
  const auto ev = hermitian_eigenvalues(j1.matrix - j2.matrix);
  return ev.cwiseAbs().sum() / (2.0 * j1.d_in);
}

StinespringIsometry rotate_environment(const StinespringIsometry& v,
                                       const ComplexMatrix& u) {
  if (u.rows() != v.d_env || u.cols() != v.d_env) {
    throw ShapeMismatch("environment unitary size");
  }
  const ComplexMatrix full = kron(ComplexMatrix::Identity(v.d_out, v.d_out), u);
  return {v.d_in, v.d_out, v.d_env, full * v.v};
}

DilationDistance procrustes_dilation_distance(const StinespringIsometry& v1,
                                              const StinespringIsometry& v2) {
  if (v1.d_in != v2.d_in || v1.d_out != v2.d_out || v1.d_env != v2.d_env) {
    throw ShapeMismatch("dilations of different shapes");
  }
  const int r = v1.d_env;
  // Re Tr[V2† (1⊗U) V1] = Re Tr[U M], M_{e'e} = Σ_{b,i} V1[(b,e'),i] conj(V2[(b,e),i]).
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(r, r);
  for (int b = 0; b < v1.d_out; ++b) {
    for (int ep = 0; ep < r; ++ep) {
      for (int e = 0; e < r; ++e) {
        m(ep, e) += (v1.v.row(b * r + ep).array() *
                     v2.v.row(b * r + e).conjugate().array()).sum();
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const ComplexMatrix u = svd.matrixV() * svd.matrixU().adjoint();
  const ComplexMatrix diff = rotate_environment(v1, u).v - v2.v;
  return {diff.norm(), operator_norm(diff), u};
}

}  // namespace stinespring
