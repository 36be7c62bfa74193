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

#ifndef FPMPC_BEAVER_HPP_
#define FPMPC_BEAVER_HPP_

#include <cstdint>

#include "fpmpc/allreduce.hpp"
#include "fpmpc/sharing.hpp"

namespace fpmpc {

// Beaver product and squaring ledgers as pure per-party step functions.  Each
// party runs the same function on its own shares and triple components; the
// only communication is the all-reduce that publishes the masked differences
// U-P and X-R (or X-P for squaring).
//
// The party outputs sum to the target product: for multiplication,
//   PR + (U-P)R + P(X-R) + (U-P)(X-R) = UX,
// with the public (U-P)(X-R) term split evenly across the n parties.  For
// squaring,
//   P^2 + 2P(X-P) + (X-P)^2 = X^2,
// again with the public square split across parties.  The cross term keeps
// its factor of 2 for every party count; only the division by 2 generalizes
// to division by n.
//
// Roundoff certificate: one scalar product is accurate to within
// 6 gamma^2 eps; matrix products grow by the inner dimension.

// tags: each ledger consumes tags tag0 (and tag0+1 for multiplication).
SecretTensor beaver_mul(const SecretTensor& u, const SecretTensor& x,
                        BeaverTriple& triple, AllReduce& net, uint64_t tag0);

SecretTensor beaver_hadamard(const SecretTensor& u, const SecretTensor& x,
                             BeaverTriple& triple, AllReduce& net,
                             uint64_t tag0);

SecretTensor beaver_conv(const SecretTensor& u, const SecretTensor& x,
                         BeaverTriple& triple, AllReduce& net, uint64_t tag0);

SecretTensor beaver_square(const SecretTensor& x, BeaverTriple& triple,
                           AllReduce& net, uint64_t tag0);

// Worst-case absolute roundoff per entry of one Beaver product at masking
// width gamma; inner_dim is 1 for scalar/elementwise ops.
inline double beaver_roundoff_bound(double gamma, Index inner_dim = 1) {
  constexpr double kEps = 2.220446049250313e-16;  // IEEE double machine eps
  return 6.0 * gamma * gamma * kEps * static_cast<double>(inner_dim);
}

}  // namespace fpmpc

#endif  // FPMPC_BEAVER_HPP_
