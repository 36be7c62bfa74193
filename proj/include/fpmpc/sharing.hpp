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

#ifndef FPMPC_SHARING_HPP_
#define FPMPC_SHARING_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "fpmpc/core.hpp"
#include "fpmpc/errors.hpp"
#include "fpmpc/random.hpp"

namespace fpmpc {

// Masking half-width gamma and certified data bound beta.  Both the roundoff
// certificate (~6 gamma^2 eps per product) and the leakage certificate
// (beta/gamma bits per masked observation) hang off this pair.
struct NoiseSpec {
  double gamma;
  double beta;

  explicit NoiseSpec(double gamma_in = 1e5, double beta_in = 1.0)
      : gamma(gamma_in), beta(beta_in) {
    if (!(beta > 0) || !(beta < gamma)) {
      throw InvalidArgument("NoiseSpec: requires 0 < beta < gamma");
    }
  }
};

// One party's additive share of a real matrix.  The shape, party count and
// session id are public; only `share` is sensitive.
struct SecretTensor {
  Matrix share;
  int party_id = 0;
  int n_parties = 2;
  uint64_t session_id = 0;

  Index rows() const { return share.rows(); }
  Index cols() const { return share.cols(); }
};

inline void check_same_session(const SecretTensor& a, const SecretTensor& b,
                               const char* what) {
  if (a.session_id != b.session_id || a.party_id != b.party_id ||
      a.n_parties != b.n_parties) {
    throw IncompleteSet(std::string(what) + ": mismatched session or party");
  }
}

// ---- Local (communication-free) share arithmetic. ----
// Addition of shares adds the underlying plaintexts; scaling by a public
// scalar scales them.  Adding a public constant is done by party 0 alone so
// the share sum moves by exactly that constant.

inline SecretTensor add(const SecretTensor& a, const SecretTensor& b) {
  check_same_session(a, b, "add");
  check_same_shape(a.share, b.share, "add");
  return {a.share + b.share, a.party_id, a.n_parties, a.session_id};
}

inline SecretTensor sub(const SecretTensor& a, const SecretTensor& b) {
  check_same_session(a, b, "sub");
  check_same_shape(a.share, b.share, "sub");
  return {a.share - b.share, a.party_id, a.n_parties, a.session_id};
}

inline SecretTensor scale(const SecretTensor& a, double s) {
  return {a.share * s, a.party_id, a.n_parties, a.session_id};
}

// ca*a + cb*b for public scalars ca, cb.
inline SecretTensor lin(double ca, const SecretTensor& a, double cb,
                        const SecretTensor& b) {
  check_same_session(a, b, "lin");
  check_same_shape(a.share, b.share, "lin");
  return {ca * a.share + cb * b.share, a.party_id, a.n_parties, a.session_id};
}

inline SecretTensor add_public(const SecretTensor& a, double c) {
  SecretTensor out = a;
  if (a.party_id == 0) out.share.array() += c;
  return out;
}

inline SecretTensor add_public(const SecretTensor& a, const Matrix& m) {
  check_same_shape(a.share, m, "add_public");
  SecretTensor out = a;
  if (a.party_id == 0) out.share += m;
  return out;
}

inline SecretTensor transpose(const SecretTensor& a) {
  return {a.share.transpose(), a.party_id, a.n_parties, a.session_id};
}

inline SecretTensor slice_rows(const SecretTensor& a,
                               const std::vector<Index>& rows) {
  Matrix out(static_cast<Index>(rows.size()), a.cols());
  for (size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Index>(i)) = a.share.row(rows[i]);
  }
  return {std::move(out), a.party_id, a.n_parties, a.session_id};
}

// ---- Sharing and reconstruction. ----

// Two-party split: party 0 holds x - Y, party 1 holds Y, with Y drawn
// uniformly on [-gamma, gamma] entrywise.  Refuses plaintext exceeding the
// certified bound beta (clamping would silently void the leakage budget).
std::pair<SecretTensor, SecretTensor> share_two(const Matrix& x,
                                                const NoiseSpec& noise,
                                                RandomSource& rng,
                                                uint64_t session_id = 0);

// Deterministic variant with an injected mask; used by tests and by callers
// that manage their own noise schedules.
std::pair<SecretTensor, SecretTensor> share_two_with_mask(
    const Matrix& x, const Matrix& mask, uint64_t session_id = 0);

// n-party chain sharing: draws iid Y_1..Y_n on [-gamma, gamma], forms
// X+Y_1-Y_2, Y_2-Y_3, ..., Y_n-Y_1, and hands them to a fresh uniformly
// random permutation of the parties.
std::vector<SecretTensor> share_n(const Matrix& x, int n_parties,
                                  const NoiseSpec& noise, RandomSource& rng,
                                  uint64_t session_id = 0);

// Injection hook: explicit masks and party permutation.
std::vector<SecretTensor> share_n_with_masks(
    const Matrix& x, const std::vector<Matrix>& masks,
    const std::vector<Index>& party_order, uint64_t session_id = 0);

// Entrywise sum in ascending party-id order (deterministic roundoff).  All n
// parties must be present exactly once with matching sessions and shapes.
Matrix reconstruct(const std::vector<SecretTensor>& shares);

// ---- Beaver triples. ----

enum class TripleKind : uint8_t {
  kMul = 1,       // matrix product P*R
  kSquare = 2,    // elementwise P^2
  kConv = 3,      // full linear convolution of column vectors
  kHadamard = 4,  // elementwise product
};

const char* triple_kind_name(TripleKind kind);

// One party's components of a dealt triple: shares of (P, R, op(P,R)), or of
// (P, P^2) for squaring.  Single use, enforced by the consuming protocol.
struct BeaverTriple {
  TripleKind kind = TripleKind::kMul;
  Matrix p_share;
  Matrix r_share;  // empty for kSquare
  Matrix t_share;
  bool consumed = false;
};

// All parties' components of one dealt triple (dealer side only).
struct DealtTriple {
  TripleKind kind = TripleKind::kMul;
  std::vector<Matrix> p_shares;
  std::vector<Matrix> r_shares;
  std::vector<Matrix> t_shares;

  BeaverTriple for_party(int party) const {
    BeaverTriple t;
    t.kind = kind;
    t.p_share = p_shares[static_cast<size_t>(party)];
    if (!r_shares.empty()) t.r_share = r_shares[static_cast<size_t>(party)];
    t.t_share = t_shares[static_cast<size_t>(party)];
    return t;
  }
};

// Draws P (and R) uniformly on [-gamma, gamma], the product mask T uniformly
// on [-gamma^2, gamma^2], and splits additively: party 0 holds the value
// minus the sum of the other parties' uniform shares.  For two parties this
// is exactly (P-Q, R-S, PR-T) vs (Q, S, T).
//
// Draw order is fixed (P, R, product, then per-party masks for P, R, T) so a
// file dealer and an in-process dealer produce identical triples from equal
// generator states.
DealtTriple deal_triple(TripleKind kind, Index u_rows, Index u_cols,
                        Index x_rows, Index x_cols, double gamma,
                        int n_parties, RandomSource& rng);

// A sequential source of single-kind triples for one party.  Streams must be
// consumed in identical order by all parties.
class TripleStream {
 public:
  virtual ~TripleStream() = default;
  virtual BeaverTriple next(TripleKind kind, Index u_rows, Index u_cols,
                            Index x_rows, Index x_cols) = 0;
  virtual double gamma() const = 0;
  virtual uint64_t consumed() const = 0;
};

// Regenerates the dealer's stream locally and keeps this party's components.
// Byte-identical to what `write_triple_file` emits from the same generator
// seed, which is what makes simulated and file-backed runs interchangeable.
std::unique_ptr<TripleStream> make_dealer_stream(TripleKind kind, double gamma,
                                                 int party, int n_parties,
                                                 RandomSource rng);

// Reads one party's pre-dealt triples from an "FPT1" file.
std::unique_ptr<TripleStream> open_triple_file(const std::string& path);

// Writes `count` triples of one kind/shape for every party under
// dir/party<i>/<name>.fpt; returns the per-party file paths.
std::vector<std::string> write_triple_files(
    const std::string& dir, const std::string& name, TripleKind kind,
    Index u_rows, Index u_cols, Index x_rows, Index x_cols, double gamma,
    uint64_t count, int n_parties, RandomSource& rng);

}  // namespace fpmpc

#endif  // FPMPC_SHARING_HPP_
