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

#include "fpmpc/sharing.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fpmpc/bytes.hpp"

namespace fpmpc {

std::pair<SecretTensor, SecretTensor> share_two(const Matrix& x,
                                                const NoiseSpec& noise,
                                                RandomSource& rng,
                                                uint64_t session_id) {
  ensure_finite(x, "share_two");
  if (max_abs(x) > noise.beta) {
    throw BoundViolation("share_two: plaintext exceeds certified bound beta");
  }
  const Matrix y = uniform_matrix(x.rows(), x.cols(), noise.gamma, rng);
  return share_two_with_mask(x, y, session_id);
}

std::pair<SecretTensor, SecretTensor> share_two_with_mask(
    const Matrix& x, const Matrix& mask, uint64_t session_id) {
  check_same_shape(x, mask, "share_two_with_mask");
  SecretTensor a{x - mask, 0, 2, session_id};
  SecretTensor b{mask, 1, 2, session_id};
  return {std::move(a), std::move(b)};
}

std::vector<SecretTensor> share_n(const Matrix& x, int n_parties,
                                  const NoiseSpec& noise, RandomSource& rng,
                                  uint64_t session_id) {
  if (n_parties < 2) throw InvalidArgument("share_n: need at least 2 parties");
  ensure_finite(x, "share_n");
  if (max_abs(x) > noise.beta) {
    throw BoundViolation("share_n: plaintext exceeds certified bound beta");
  }
  std::vector<Matrix> masks;
  masks.reserve(static_cast<size_t>(n_parties));
  for (int i = 0; i < n_parties; ++i) {
    masks.push_back(uniform_matrix(x.rows(), x.cols(), noise.gamma, rng));
  }
  const std::vector<Index> order = rng.permutation(n_parties);
  return share_n_with_masks(x, masks, order, session_id);
}

std::vector<SecretTensor> share_n_with_masks(
    const Matrix& x, const std::vector<Matrix>& masks,
    const std::vector<Index>& party_order, uint64_t session_id) {
  const int n = static_cast<int>(masks.size());
  if (n < 2) throw InvalidArgument("share_n: need at least 2 masks");
  if (party_order.size() != masks.size()) {
    throw InvalidArgument("share_n: permutation size mismatch");
  }
  // Telescoping chain X+Y1-Y2, Y2-Y3, ..., Yn-Y1 handed out in the permuted
  // party order; the k-th chain entry goes to party party_order[k].
  std::vector<SecretTensor> out(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    const Matrix& yk = masks[static_cast<size_t>(k)];
    const Matrix& ynext = masks[static_cast<size_t>((k + 1) % n)];
    Matrix piece = yk - ynext;
    if (k == 0) piece += x;
    const int party = static_cast<int>(party_order[static_cast<size_t>(k)]);
    out[static_cast<size_t>(party)] =
        SecretTensor{std::move(piece), party, n, session_id};
  }
  return out;
}

Matrix reconstruct(const std::vector<SecretTensor>& shares) {
  if (shares.empty()) throw IncompleteSet("reconstruct: no shares");
  const int n = shares.front().n_parties;
  if (static_cast<int>(shares.size()) != n) {
    throw IncompleteSet("reconstruct: expected " + std::to_string(n) +
                        " shares, got " + std::to_string(shares.size()));
  }
  std::vector<const SecretTensor*> by_party(static_cast<size_t>(n), nullptr);
  for (const SecretTensor& s : shares) {
    if (s.session_id != shares.front().session_id || s.n_parties != n) {
      throw IncompleteSet("reconstruct: mismatched session");
    }
    if (s.party_id < 0 || s.party_id >= n ||
        by_party[static_cast<size_t>(s.party_id)] != nullptr) {
      throw IncompleteSet("reconstruct: duplicate or invalid party id");
    }
    check_same_shape(s.share, shares.front().share, "reconstruct");
    by_party[static_cast<size_t>(s.party_id)] = &s;
  }
  Matrix sum = by_party[0]->share;
  for (int p = 1; p < n; ++p) sum += by_party[static_cast<size_t>(p)]->share;
  return sum;
}

const char* triple_kind_name(TripleKind kind) {
  switch (kind) {
    case TripleKind::kMul:
      return "mul";
    case TripleKind::kSquare:
      return "square";
    case TripleKind::kConv:
      return "conv";
    case TripleKind::kHadamard:
      return "hadamard";
  }
  return "unknown";
}

namespace {

Matrix triple_product(TripleKind kind, const Matrix& p, const Matrix& r) {
  switch (kind) {
    case TripleKind::kMul:
      return matmul(p, r);
    case TripleKind::kSquare:
      return p.cwiseProduct(p);
    case TripleKind::kConv:
      return conv(p, r);
    case TripleKind::kHadamard:
      return p.cwiseProduct(r);
  }
  throw InvalidArgument("unknown triple kind");
}

void check_triple_dims(TripleKind kind, Index ur, Index uc, Index xr,
                       Index xc) {
  if (ur <= 0 || uc <= 0) throw ShapeError("deal_triple: empty P dims");
  switch (kind) {
    case TripleKind::kMul:
      if (uc != xr) throw ShapeError("deal_triple: inner dims of P*R");
      break;
    case TripleKind::kConv:
      if (uc != 1 || xc != 1) {
        throw ShapeError("deal_triple: conv triples need column vectors");
      }
      break;
    case TripleKind::kHadamard:
      if (ur != xr || uc != xc) {
        throw ShapeError("deal_triple: hadamard triples need equal dims");
      }
      break;
    case TripleKind::kSquare:
      break;
  }
}

// Splits `value` additively: parties 1..n-1 get fresh uniform matrices of
// half-width `width`, party 0 gets the remainder.
std::vector<Matrix> additive_split(const Matrix& value, double width,
                                   int n_parties, RandomSource& rng) {
  std::vector<Matrix> shares(static_cast<size_t>(n_parties));
  Matrix rest = value;
  for (int p = 1; p < n_parties; ++p) {
    shares[static_cast<size_t>(p)] =
        uniform_matrix(value.rows(), value.cols(), width, rng);
    rest -= shares[static_cast<size_t>(p)];
  }
  shares[0] = std::move(rest);
  return shares;
}

}  // namespace

DealtTriple deal_triple(TripleKind kind, Index u_rows, Index u_cols,
                        Index x_rows, Index x_cols, double gamma,
                        int n_parties, RandomSource& rng) {
  if (n_parties < 2) throw InvalidArgument("deal_triple: need >= 2 parties");
  if (!(gamma > 0)) throw InvalidArgument("deal_triple: gamma must be > 0");
  check_triple_dims(kind, u_rows, u_cols, x_rows, x_cols);

  DealtTriple out;
  out.kind = kind;
  const Matrix p = uniform_matrix(u_rows, u_cols, gamma, rng);
  Matrix r;
  if (kind != TripleKind::kSquare) {
    r = uniform_matrix(x_rows, x_cols, gamma, rng);
  }
  const Matrix prod = triple_product(kind, p, r);
  out.p_shares = additive_split(p, gamma, n_parties, rng);
  if (kind != TripleKind::kSquare) {
    out.r_shares = additive_split(r, gamma, n_parties, rng);
  }
  out.t_shares = additive_split(prod, gamma * gamma, n_parties, rng);
  return out;
}

// ---- Streams. ----

namespace {

class DealerStream final : public TripleStream {
 public:
  DealerStream(TripleKind kind, double gamma, int party, int n_parties,
               RandomSource rng)
      : kind_(kind),
        gamma_(gamma),
        party_(party),
        n_parties_(n_parties),
        rng_(rng) {}

  BeaverTriple next(TripleKind kind, Index u_rows, Index u_cols, Index x_rows,
                    Index x_cols) override {
    if (kind != kind_) {
      throw ProtocolDesync("triple stream kind mismatch: want " +
                           std::string(triple_kind_name(kind)) + ", stream is " +
                           triple_kind_name(kind_));
    }
    const DealtTriple dealt =
        deal_triple(kind, u_rows, u_cols, x_rows, x_cols, gamma_, n_parties_,
                    rng_);
    ++consumed_;
    return dealt.for_party(party_);
  }

  double gamma() const override { return gamma_; }
  uint64_t consumed() const override { return consumed_; }

 private:
  TripleKind kind_;
  double gamma_;
  int party_;
  int n_parties_;
  RandomSource rng_;
  uint64_t consumed_ = 0;
};

constexpr char kTripleMagic[4] = {'F', 'P', 'T', '1'};

void append_component(std::vector<uint8_t>& out, const Matrix& m) {
  put_u8(out, 2);  // rank
  put_u64(out, static_cast<uint64_t>(m.rows()));
  put_u64(out, static_cast<uint64_t>(m.cols()));
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) put_f64(out, m(r, c));
  }
}

Matrix read_component(ByteReader& in) {
  const uint8_t rank = in.u8();
  Index rows = 1, cols = 1;
  if (rank == 0) {
    // scalar
  } else if (rank == 1) {
    rows = static_cast<Index>(in.u64());
  } else if (rank == 2) {
    rows = static_cast<Index>(in.u64());
    cols = static_cast<Index>(in.u64());
  } else {
    throw FormatError("triple file: unsupported rank " + std::to_string(rank));
  }
  if (rows <= 0 || cols <= 0 || rows * cols > (1LL << 32)) {
    throw FormatError("triple file: bad dimensions");
  }
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) m(r, c) = in.f64();
  }
  return m;
}

class FileStream final : public TripleStream {
 public:
  explicit FileStream(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw FormatError("cannot open triple file " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                               std::istreambuf_iterator<char>());
    ByteReader in(bytes.data(), bytes.size());
    char magic[4];
    for (char& ch : magic) ch = static_cast<char>(in.u8());
    if (std::memcmp(magic, kTripleMagic, 4) != 0) {
      throw FormatError("triple file " + path + ": bad magic");
    }
    kind_ = static_cast<TripleKind>(in.u8());
    if (kind_ != TripleKind::kMul && kind_ != TripleKind::kSquare &&
        kind_ != TripleKind::kConv && kind_ != TripleKind::kHadamard) {
      throw FormatError("triple file " + path + ": unknown kind");
    }
    const uint64_t count = in.u64();
    gamma_ = std::bit_cast<double>(in.u64());
    triples_.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
      BeaverTriple t;
      t.kind = kind_;
      t.p_share = read_component(in);
      if (kind_ != TripleKind::kSquare) t.r_share = read_component(in);
      t.t_share = read_component(in);
      triples_.push_back(std::move(t));
    }
    if (in.remaining() != 0) {
      throw FormatError("triple file " + path + ": trailing bytes");
    }
  }

  BeaverTriple next(TripleKind kind, Index u_rows, Index u_cols, Index x_rows,
                    Index x_cols) override {
    if (kind != kind_) throw ProtocolDesync("triple file kind mismatch");
    if (next_ >= triples_.size()) {
      throw ReuseError("triple store exhausted after " +
                       std::to_string(next_) + " triples");
    }
    BeaverTriple t = std::move(triples_[next_]);
    ++next_;
    if (t.p_share.rows() != u_rows || t.p_share.cols() != u_cols) {
      throw ProtocolDesync("triple file component shape mismatch");
    }
    if (kind != TripleKind::kSquare &&
        (t.r_share.rows() != x_rows || t.r_share.cols() != x_cols)) {
      throw ProtocolDesync("triple file component shape mismatch");
    }
    return t;
  }

  double gamma() const override { return gamma_; }
  uint64_t consumed() const override { return next_; }

 private:
  TripleKind kind_ = TripleKind::kMul;
  double gamma_ = 0;
  std::vector<BeaverTriple> triples_;
  uint64_t next_ = 0;
};

}  // namespace

std::unique_ptr<TripleStream> make_dealer_stream(TripleKind kind, double gamma,
                                                 int party, int n_parties,
                                                 RandomSource rng) {
  return std::make_unique<DealerStream>(kind, gamma, party, n_parties, rng);
}

std::unique_ptr<TripleStream> open_triple_file(const std::string& path) {
  return std::make_unique<FileStream>(path);
}

std::vector<std::string> write_triple_files(
    const std::string& dir, const std::string& name, TripleKind kind,
    Index u_rows, Index u_cols, Index x_rows, Index x_cols, double gamma,
    uint64_t count, int n_parties, RandomSource& rng) {
  std::vector<std::vector<uint8_t>> bodies(static_cast<size_t>(n_parties));
  for (uint64_t i = 0; i < count; ++i) {
    const DealtTriple dealt =
        deal_triple(kind, u_rows, u_cols, x_rows, x_cols, gamma, n_parties,
                    rng);
    for (int p = 0; p < n_parties; ++p) {
      const BeaverTriple t = dealt.for_party(p);
      auto& body = bodies[static_cast<size_t>(p)];
      append_component(body, t.p_share);
      if (kind != TripleKind::kSquare) append_component(body, t.r_share);
      append_component(body, t.t_share);
    }
  }
  std::vector<std::string> paths;
  for (int p = 0; p < n_parties; ++p) {
    const std::filesystem::path party_dir =
        std::filesystem::path(dir) / ("party" + std::to_string(p));
    std::filesystem::create_directories(party_dir);
    const std::string path = (party_dir / (name + ".fpt")).string();
    std::vector<uint8_t> head;
    head.insert(head.end(), kTripleMagic, kTripleMagic + 4);
    put_u8(head, static_cast<uint8_t>(kind));
    put_u64(head, count);
    put_u64(head, std::bit_cast<uint64_t>(gamma));
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw FormatError("cannot write triple file " + path);
    f.write(reinterpret_cast<const char*>(head.data()),
            static_cast<std::streamsize>(head.size()));
    const auto& body = bodies[static_cast<size_t>(p)];
    f.write(reinterpret_cast<const char*>(body.data()),
            static_cast<std::streamsize>(body.size()));
    paths.push_back(path);
  }
  return paths;
}

}  // namespace fpmpc
