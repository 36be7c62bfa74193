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

#ifndef FPMPC_ERRORS_HPP_
#define FPMPC_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fpmpc {

// Base class for all failures reported by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A parameter is outside its documented range (non-positive width, n < 2, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Tensor dimensions do not satisfy an operation's contract.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Plaintext exceeds the certified bound beta; sharing it would void the
// leakage certificate, so the operation refuses instead of clamping.
class BoundViolation : public Error {
 public:
  using Error::Error;
};

// A single-use Beaver triple was consumed twice, or a store ran dry.
class ReuseError : public Error {
 public:
  using Error::Error;
};

// Reconstruction attempted without all parties' shares, or with shares from
// different sessions or values.
class IncompleteSet : public Error {
 public:
  using Error::Error;
};

// Parties disagree on tags, sequence numbers, or message shapes.
class ProtocolDesync : public Error {
 public:
  using Error::Error;
};

// A peer could not be reached or timed out.
class PeerUnreachable : public Error {
 public:
  using Error::Error;
};

// Malformed input file (IDX, libsvm, CSV, triple store, checkpoint).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Public-mode evaluation outside the function's validated domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Numerical procedure failed to converge to the requested tolerance.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

// Training loss became non-finite.
class TrainingDiverged : public Error {
 public:
  using Error::Error;
};

}  // namespace fpmpc

#endif  // FPMPC_ERRORS_HPP_
