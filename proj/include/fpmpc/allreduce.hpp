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

#ifndef FPMPC_ALLREDUCE_HPP_
#define FPMPC_ALLREDUCE_HPP_

#include <cstdint>

#include "fpmpc/core.hpp"

namespace fpmpc {

// Blocking rendezvous: every party contributes a tensor under a common tag
// and receives the identical entrywise sum, accumulated in ascending
// party-id order regardless of arrival order (bit-reproducible results).
class AllReduce {
 public:
  virtual ~AllReduce() = default;
  virtual Matrix sum(const Matrix& local, uint64_t tag) = 0;
  virtual int party_id() const = 0;
  virtual int n_parties() const = 0;
};

}  // namespace fpmpc

#endif  // FPMPC_ALLREDUCE_HPP_
