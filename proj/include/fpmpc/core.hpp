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

#ifndef FPMPC_CORE_HPP_
#define FPMPC_CORE_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "fpmpc/errors.hpp"

namespace fpmpc {

// All tensors are dense double-precision matrices in row-major storage; the
// row-major layout is what every serialization format in this project assumes.
// Vectors are n-by-1 matrices.
using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

inline void check_same_shape(const Matrix& a, const Matrix& b,
                             const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shapes " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

inline void check_inner_dims(const Matrix& a, const Matrix& b,
                             const char* what) {
  if (a.cols() != b.rows()) {
    throw ShapeError(std::string(what) + ": inner dimensions " +
                     std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()));
  }
}

// Matrix product with an explicit shape check (Eigen alone would assert).
inline Matrix matmul(const Matrix& a, const Matrix& b) {
  check_inner_dims(a, b, "matmul");
  return a * b;
}

// Full linear convolution of two sequences (column vectors), output length
// len(a) + len(b) - 1, accumulated in ascending index order.
inline Matrix conv(const Matrix& a, const Matrix& b) {
  if (a.cols() != 1 || b.cols() != 1) {
    throw ShapeError("conv: inputs must be column vectors");
  }
  const Index la = a.rows(), lb = b.rows();
  Matrix out = Matrix::Zero(la + lb - 1, 1);
  for (Index i = 0; i < la; ++i) {
    for (Index j = 0; j < lb; ++j) {
      out(i + j, 0) += a(i, 0) * b(j, 0);
    }
  }
  return out;
}

inline bool all_finite(const Matrix& m) { return m.allFinite(); }

inline void ensure_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw NumericFailure(std::string(what) + ": non-finite entries");
  }
}

inline double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

}  // namespace fpmpc

#endif  // FPMPC_CORE_HPP_
