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

#include "stinespring/learning.hpp"

#include <cmath>
#include <random>
#include <string>

#include "stinespring/errors.hpp"
#include "stinespring/haar.hpp"
#include "stinespring/tensor.hpp"

namespace stinespring {

int minimum_bases(int d_a, int d_b, int r) {
  const int dim = d_a * d_b * r;
  return dim * dim;
}

namespace {

// Multinomial draw by a chain of binomials.
std::vector<std::uint64_t> multinomial(std::uint64_t shots, const Eigen::VectorXd& p, Rng& rng) {
  std::vector<std::uint64_t> counts(p.size(), 0);
  std::uint64_t left = shots;
  double mass = 1.0;
  for (Eigen::Index m = 0; m + 1 < p.size() && left > 0; ++m) {
    const double q = mass > 0 ? std::clamp(p[m] / mass, 0.0, 1.0) : 0.0;
    std::binomial_distribution<std::uint64_t> bin(left, q);
    counts[m] = bin(rng);
    left -= counts[m];
    mass -= p[m];
  }
  counts.back() += left;
  return counts;
}

}  // namespace

LearnResult learn_channel(const KrausChannel& truth, int r, const TomographyConfig& cfg) {
  if (cfg.n_queries < 1) throw DomainError("n_queries must be positive");
  const int da = truth.d_in(), db = truth.d_out();
  const int dim = da * db * r;
  require_entries(static_cast<std::size_t>(dim) * dim, static_cast<std::size_t>(dim) * dim,
                  "tomography frame operator");
  if (cfg.bases < minimum_bases(da, db, r)) {
    throw FrameIncomplete("need at least " + std::to_string(minimum_bases(da, db, r)) +
                          " bases, got " + std::to_string(cfg.bases));
  }
  const KrausChannel padded = pad_kraus(truth, r);
  const StinespringIsometry v = kraus_to_stinespring(padded);
  Rng env_rng = substream(cfg.env_seed.value_or(cfg.seed), 0);
  const StinespringIsometry w = rotate_environment(v, haar_unitary(r, env_rng));

  // Normalized Choi vector on A' ⊗ B ⊗ E.
  const int dbe = db * r;
  ComplexVector psi(dim);
  for (int i = 0; i < da; ++i) psi.segment(i * dbe, dbe) = w.v.col(i) / std::sqrt(double(da));

  const int d2 = dim * dim;
  Eigen::MatrixXcd frame = Eigen::MatrixXcd::Zero(d2, d2);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(d2);
  for (int k = 0; k < cfg.bases; ++k) {
    Rng basis_rng = substream(cfg.seed, 1 + static_cast<std::uint64_t>(k));
    const ComplexMatrix u = haar_unitary(dim, basis_rng);
    const ComplexVector amp = u.adjoint() * psi;
    Eigen::VectorXd p = amp.cwiseAbs2();
    p /= p.sum();
    Eigen::VectorXd f = p;
    if (cfg.shots > 0) {
      Rng shot_rng = substream(cfg.seed, 1 + static_cast<std::uint64_t>(cfg.bases) + k);
      const auto counts = multinomial(cfg.shots, p, shot_rng);
      for (int m = 0; m < dim; ++m) f[m] = static_cast<double>(counts[m]) / cfg.shots;
    }
    for (int m = 0; m < dim; ++m) {
      const ComplexVector col = u.col(m);
      const ComplexVector pv = vectorize(col * col.adjoint());
      frame += pv * pv.adjoint();
      rhs += f[m] * pv;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> fes(frame);
  const auto& fev = fes.eigenvalues();
  if (fev.minCoeff() <= 1e-10 * fev.maxCoeff()) {
    throw FrameIncomplete("frame operator is singular");
  }
  const Eigen::VectorXcd x =
      fes.eigenvectors() * (fev.cwiseInverse().asDiagonal() * (fes.eigenvectors().adjoint() * rhs));
  ComplexMatrix rho = unvectorize(x, dim, dim);
  rho = 0.5 * (rho + rho.adjoint()).eval();

  // Nearest PSD unit-trace state, then its leading eigenvector.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> res{Eigen::MatrixXcd(rho)};
  const Eigen::VectorXd lam = res.eigenvalues().cwiseMax(0.0);
  if (lam.sum() <= 0) throw Error("reconstructed state vanishes");
  const ComplexVector lead = res.eigenvectors().col(dim - 1);

  ComplexMatrix what(dbe, da);
  for (int i = 0; i < da; ++i) what.col(i) = std::sqrt(double(da)) * lead.segment(i * dbe, dbe);
  const ComplexMatrix s = what.adjoint() * what;
  const ComplexMatrix wproj = what * hermitian_inv_sqrt(s);

  const StinespringIsometry est_v{da, db, r, wproj};
  LearnResult out{KrausChannel(da, db, stinespring_to_kraus(est_v).kraus(), 1e-8), est_v};
  out.choi_distance = choi_trace_distance(kraus_to_choi(out.estimate), kraus_to_choi(padded));
  out.dilation_distance = procrustes_dilation_distance(est_v, v).frobenius;
  out.shots_used = cfg.shots * static_cast<std::uint64_t>(cfg.bases);
  out.rounds = (out.shots_used + cfg.n_queries - 1) / cfg.n_queries;
  return out;
}

}  // namespace stinespring
