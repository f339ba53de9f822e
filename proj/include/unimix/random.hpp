// Copyright 2026 The unimix developers
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

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "unimix/matrix.hpp"

namespace unimix {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seeded random stream. Identical seeds produce identical sample sequences.
/// A source is single-owner mutable state; for parallel or order-independent
/// sampling, derive(i) yields an independent child stream per index.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed)
      : seed_(seed), engine_(splitmix64(seed)) {}

  [[nodiscard]] std::uint64_t seed() const { return seed_; }

  [[nodiscard]] RandomSource derive(std::uint64_t index) const {
    return RandomSource(splitmix64(seed_ ^ (0x9E3779B97F4A7C15ULL * (index + 1))));
  }

  /// Uniform double in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard complex Gaussian via Box-Muller; real and imaginary parts
  /// are independent N(0, 1).
  Complex complex_gaussian() {
    const double u1 =
        (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
  }

  double gaussian() { return complex_gaussian().real(); }

  /// Exponential(1) variate, used for simplex-uniform weights.
  double exponential() {
    const double u =
        (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; // (0, 1]
    return -std::log(u);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Matrix of independent standard complex Gaussians, filled row-major.
inline CMatrix ginibre(Index rows, Index cols, RandomSource& rng) {
  CMatrix g(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j)
      g(i, j) = rng.complex_gaussian();
  return g;
}

inline CMatrix random_hermitian(Index d, RandomSource& rng) {
  const CMatrix g = ginibre(d, d, rng);
  return 0.5 * (g + g.adjoint());
}

/// Haar-distributed unitary: QR of a Ginibre matrix with the Q columns
/// rescaled by the phases of R's diagonal. The phase fix is required; plain
/// QR is not Haar.
inline CMatrix haar_unitary(Index d, RandomSource& rng) {
  if (d < 1) throw DimensionError("haar_unitary: d must be positive");
  const CMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  const CVector diag = qr.matrixQR().diagonal();
  for (Index i = 0; i < d; ++i) {
    const double mag = std::abs(diag(i));
    q.col(i) *= (mag > 0.0) ? diag(i) / mag : Complex{1.0, 0.0};
  }
  return q;
}

} // namespace unimix
