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

#include "fpmpc/beaver.hpp"

namespace fpmpc {

namespace {

void check_unconsumed(BeaverTriple& triple, TripleKind kind) {
  if (triple.consumed) {
    throw ReuseError("Beaver triple already consumed");
  }
  if (triple.kind != kind) {
    throw ShapeError("Beaver triple kind mismatch");
  }
  triple.consumed = true;
}

// The generic product ledger.  `product` is matmul, hadamard, or convolution;
// all three share the same masking algebra.
template <typename ProductFn>
SecretTensor product_ledger(const SecretTensor& u, const SecretTensor& x,
                            BeaverTriple& triple, AllReduce& net,
                            uint64_t tag0, TripleKind kind,
                            ProductFn&& product) {
  check_same_session(u, x, "beaver product");
  check_unconsumed(triple, kind);
  check_same_shape(u.share, triple.p_share, "beaver product: P");
  check_same_shape(x.share, triple.r_share, "beaver product: R");

  // Local masked differences, published via all-reduce: the sums over the
  // parties are U-P and X-R, each still hidden by the dealer's fresh mask.
  const Matrix u_minus_p = net.sum(u.share - triple.p_share, tag0);
  const Matrix x_minus_r = net.sum(x.share - triple.r_share, tag0 + 1);

  const double inv_n = 1.0 / static_cast<double>(u.n_parties);
  Matrix out = triple.t_share + product(u_minus_p, triple.r_share) +
               product(triple.p_share, x_minus_r) +
               product(u_minus_p, x_minus_r) * inv_n;
  return {std::move(out), u.party_id, u.n_parties, u.session_id};
}

}  // namespace

SecretTensor beaver_mul(const SecretTensor& u, const SecretTensor& x,
                        BeaverTriple& triple, AllReduce& net, uint64_t tag0) {
  check_inner_dims(u.share, x.share, "beaver_mul");
  return product_ledger(u, x, triple, net, tag0, TripleKind::kMul,
                        [](const Matrix& a, const Matrix& b) { return a * b; });
}

SecretTensor beaver_hadamard(const SecretTensor& u, const SecretTensor& x,
                             BeaverTriple& triple, AllReduce& net,
                             uint64_t tag0) {
  check_same_shape(u.share, x.share, "beaver_hadamard");
  return product_ledger(u, x, triple, net, tag0, TripleKind::kHadamard,
                        [](const Matrix& a, const Matrix& b) {
                          return a.cwiseProduct(b);
                        });
}

SecretTensor beaver_conv(const SecretTensor& u, const SecretTensor& x,
                         BeaverTriple& triple, AllReduce& net, uint64_t tag0) {
  if (u.share.cols() != 1 || x.share.cols() != 1) {
    throw ShapeError("beaver_conv: inputs must be column vectors");
  }
  return product_ledger(u, x, triple, net, tag0, TripleKind::kConv,
                        [](const Matrix& a, const Matrix& b) {
                          return conv(a, b);
                        });
}

SecretTensor beaver_square(const SecretTensor& x, BeaverTriple& triple,
                           AllReduce& net, uint64_t tag0) {
  check_unconsumed(triple, TripleKind::kSquare);
  check_same_shape(x.share, triple.p_share, "beaver_square: P");

  const Matrix x_minus_p = net.sum(x.share - triple.p_share, tag0);

  const double inv_n = 1.0 / static_cast<double>(x.n_parties);
  Matrix out = triple.t_share +
               triple.p_share.cwiseProduct(x_minus_p) * 2.0 +
               x_minus_p.cwiseProduct(x_minus_p) * inv_n;
  return {std::move(out), x.party_id, x.n_parties, x.session_id};
}

}  // namespace fpmpc
