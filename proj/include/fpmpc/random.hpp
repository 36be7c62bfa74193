// Copyright 2026 The fpmpc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FPMPC_RANDOM_HPP_
#define FPMPC_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "fpmpc/core.hpp"
#include "fpmpc/errors.hpp"

namespace fpmpc {

// Splittable counter-style generator built on the splitmix64 state advance and
// finalizer.  A (seed, stream) pair fully determines the draw sequence: the
// state transition uses only 64-bit integer adds, xors, shifts, and multiplies,
// so the u64 stream is identical on every conforming platform.  The uniform
// double mapping takes the top 53 bits, which is likewise exact; normal
// variates apply Box-Muller through libm and are reproducible per platform.
class RandomSource {
 public:
  explicit RandomSource(uint64_t seed, uint64_t stream = 0)
      : state_(mix(seed + kGolden) ^ mix(stream + 0x6A09E667F3BCC909ULL)) {}

  // A derived, statistically independent stream with the same seed lineage.
  RandomSource split(uint64_t substream) const {
    RandomSource r(0, 0);
    r.state_ = mix(state_ + kGolden) ^ mix(substream + 0x3C6EF372FE94F82BULL);
    return r;
  }

  uint64_t next_u64() {
    state_ += kGolden;
    return mix(state_);
  }

  // Uniform on [0, 1) with 53 random mantissa bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on [-half_width, half_width] via (2u - 1) * half_width; the
  // endpoint behaviour is immaterial at measure zero.
  double uniform(double half_width) {
    return (next_double() * 2.0 - 1.0) * half_width;
  }

  double normal() {
    // Box-Muller; u1 is kept away from zero so the log is finite.
    const double u1 = 1.0 - next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  std::vector<Index> permutation(Index n) {
    std::vector<Index> p(static_cast<size_t>(n));
    for (Index i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
    for (Index i = n - 1; i > 0; --i) {
      const Index j =
          static_cast<Index>(next_u64() % static_cast<uint64_t>(i + 1));
      std::swap(p[static_cast<size_t>(i)], p[static_cast<size_t>(j)]);
    }
    return p;
  }

 private:
  static constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static uint64_t mix(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t state_;
};

// Every entry i.i.d. uniform on [-half_width, half_width], row-major fill.
inline Matrix uniform_matrix(Index rows, Index cols, double half_width,
                             RandomSource& rng) {
  if (!(half_width > 0)) {
    throw InvalidArgument("uniform: half-width must be positive");
  }
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = rng.uniform(half_width);
  }
  return m;
}

inline Matrix normal_matrix(Index rows, Index cols, RandomSource& rng) {
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = rng.normal();
  }
  return m;
}

}  // namespace fpmpc

#endif  // FPMPC_RANDOM_HPP_
