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

#include "stinespring/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include <boost/math/special_functions/erf.hpp>

#include "stinespring/errors.hpp"

namespace stinespring {

namespace {

constexpr std::size_t kChunk = 128;

// Running (count, mean, M2) per entry; M2 accumulates |x − mean|².
struct Moments {
  std::size_t count = 0;
  ComplexMatrix mean;
  RealMatrix m2;
};

void push(Moments& m, const ComplexMatrix& x) {
  if (m.count == 0) {
    m.mean = ComplexMatrix::Zero(x.rows(), x.cols());
    m.m2 = RealMatrix::Zero(x.rows(), x.cols());
  } else if (x.rows() != m.mean.rows() || x.cols() != m.mean.cols()) {
    throw ShapeMismatch("Monte-Carlo samples differ in shape");
  }
  ++m.count;
  const ComplexMatrix delta = x - m.mean;
  m.mean += delta / static_cast<double>(m.count);
  m.m2.array() += (delta.array().conjugate() * (x - m.mean).array()).real();
}

Moments merge(const Moments& a, const Moments& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  Moments out;
  out.count = a.count + b.count;
  const double na = static_cast<double>(a.count), nb = static_cast<double>(b.count);
  const ComplexMatrix delta = b.mean - a.mean;
  out.mean = a.mean + delta * (nb / out.count);
  out.m2 = a.m2 + b.m2 + delta.cwiseAbs2() * (na * nb / out.count);
  return out;
}

}  // namespace

McEstimate monte_carlo_mean(std::size_t samples, std::uint64_t seed,
                            const std::function<ComplexMatrix(Rng&)>& draw,
                            unsigned threads) {
  if (samples == 0) throw DomainError("Monte-Carlo needs at least one sample");
  const std::size_t chunks = (samples + kChunk - 1) / kChunk;
  std::vector<Moments> parts(chunks);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (std::size_t c = next++; c < chunks; c = next++) {
        const std::size_t end = std::min(samples, (c + 1) * kChunk);
        for (std::size_t k = c * kChunk; k < end; ++k) {
          Rng rng = substream(seed, k);
          push(parts[c], draw(rng));
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = chunks;
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Pairwise tree reduction in chunk order.
  while (parts.size() > 1) {
    std::vector<Moments> level;
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) level.push_back(merge(parts[i], parts[i + 1]));
    if (parts.size() % 2) level.push_back(std::move(parts.back()));
    parts = std::move(level);
  }
  McEstimate est;
  est.samples = samples;
  est.mean = parts[0].mean;
  if (samples > 1) {
    est.std_error = (parts[0].m2 / (static_cast<double>(samples) * (samples - 1))).cwiseSqrt();
  } else {
    est.std_error = RealMatrix::Zero(est.mean.rows(), est.mean.cols());
  }
  return est;
}

McComparison compare_to_estimate(const ComplexMatrix& exact, const McEstimate& est,
                                 double sigmas, double floor) {
  if (exact.rows() != est.mean.rows() || exact.cols() != est.mean.cols()) {
    throw ShapeMismatch("exact value and estimate differ in shape");
  }
  McComparison c;
  c.sigmas = sigmas;
  c.floor = floor;
  c.entries = static_cast<std::size_t>(exact.size());
  for (Eigen::Index i = 0; i < exact.rows(); ++i) {
    for (Eigen::Index j = 0; j < exact.cols(); ++j) {
      const double diff = std::abs(exact(i, j) - est.mean(i, j));
      const double se = est.std_error(i, j);
      c.max_deviation = std::max(c.max_deviation, diff);
      if (se > 0) c.max_z = std::max(c.max_z, diff / se);
      if (diff > sigmas * se + floor) ++c.outside;
    }
  }
  return c;
}

double family_sigmas(std::size_t comparisons, double family_alpha) {
  if (comparisons == 0 || !(family_alpha > 0 && family_alpha < 1)) {
    throw DomainError("family_sigmas needs comparisons > 0 and alpha in (0, 1)");
  }
  return std::sqrt(2.0) * boost::math::erfc_inv(family_alpha / static_cast<double>(comparisons));
}

}  // namespace stinespring
