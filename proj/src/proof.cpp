/*
 * Copyright 2026 the ibc-sim authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "ibc/proof.hpp"

#include "merkle_internal.hpp"

namespace ibc {

namespace {

bool verify_witness(const CommitmentRoot& root, const LeafWitness& w) {
  return merkle::fold_path(merkle::leaf_hash(w.key, w.value), w.path) == root;
}

bool all_siblings_left(const std::vector<AuditStep>& path, std::size_t below) {
  for (std::size_t i = 0; i < below; ++i) {
    if (!path[i].sibling_on_left) return false;
  }
  return true;
}

bool all_siblings_right(const std::vector<AuditStep>& path, std::size_t below) {
  for (std::size_t i = 0; i < below; ++i) {
    if (path[i].sibling_on_left) return false;
  }
  return true;
}

// True iff `a` and `b` are adjacent leaves (a immediately left of b) of the
// tree committed to by `root`. Both witnesses must already verify.
//
// The paths share their steps above the lowest common ancestor. At the
// divergence step, a's sibling must be the subtree containing b (on the
// right) and vice versa; below it, a must be rightmost in its subtree and b
// leftmost in its own, which is visible purely from the audit-path sides.
bool adjacent(const LeafWitness& a, const LeafWitness& b) {
  const auto& pa = a.path;
  const auto& pb = b.path;

  std::size_t common = 0;
  while (common < pa.size() && common < pb.size() &&
         pa[pa.size() - 1 - common] == pb[pb.size() - 1 - common]) {
    ++common;
  }
  if (common >= pa.size() || common >= pb.size()) return false;  // no merge step

  const std::size_t ma = pa.size() - 1 - common;  // a's divergence step
  const std::size_t mb = pb.size() - 1 - common;

  if (pa[ma].sibling_on_left || !pb[mb].sibling_on_left) return false;

  Hash a_sub = merkle::leaf_hash(a.key, a.value);
  for (std::size_t i = 0; i < ma; ++i) {
    a_sub = pa[i].sibling_on_left ? merkle::inner_hash(pa[i].sibling, a_sub)
                                  : merkle::inner_hash(a_sub, pa[i].sibling);
  }
  Hash b_sub = merkle::leaf_hash(b.key, b.value);
  for (std::size_t i = 0; i < mb; ++i) {
    b_sub = pb[i].sibling_on_left ? merkle::inner_hash(pb[i].sibling, b_sub)
                                  : merkle::inner_hash(b_sub, pb[i].sibling);
  }
  if (pa[ma].sibling != b_sub || pb[mb].sibling != a_sub) return false;

  return all_siblings_left(pa, ma) && all_siblings_right(pb, mb);
}

}  // namespace

CommitmentRoot empty_map_root() {
  Bytes b{0x02};
  return sha256(b);
}

bool verify_proof(const CommitmentRoot& root, const CommitmentProof& proof) {
  if (proof.kind == CommitmentProof::Kind::Membership) {
    if (proof.witnesses.size() != 1) return false;
    const auto& w = proof.witnesses[0];
    if (w.key != proof.key || w.value != proof.value) return false;
    return verify_witness(root, w);
  }

  // Non-membership.
  if (!proof.value.empty()) return false;
  switch (proof.witnesses.size()) {
    case 0:
      return root == empty_map_root();
    case 1: {
      const auto& w = proof.witnesses[0];
      if (w.key == proof.key || !verify_witness(root, w)) return false;
      if (w.key < proof.key) {
        // w is the map's greatest key: every sibling on its path is left.
        return all_siblings_left(w.path, w.path.size());
      }
      // w is the map's least key: every sibling on its path is right.
      return all_siblings_right(w.path, w.path.size());
    }
    case 2: {
      const auto& lo = proof.witnesses[0];
      const auto& hi = proof.witnesses[1];
      if (!(lo.key < proof.key && proof.key < hi.key)) return false;
      if (!verify_witness(root, lo) || !verify_witness(root, hi)) return false;
      return adjacent(lo, hi);
    }
    default:
      return false;
  }
}

Bytes encode_proof(const CommitmentProof& proof) {
  Encoder enc;
  enc.put_u8(static_cast<std::uint8_t>(proof.kind));
  enc.put_str(proof.key);
  enc.put_bytes(proof.value);
  enc.put_u32(static_cast<std::uint32_t>(proof.witnesses.size()));
  for (const auto& w : proof.witnesses) {
    enc.put_str(w.key);
    enc.put_bytes(w.value);
    enc.put_u32(static_cast<std::uint32_t>(w.path.size()));
    for (const auto& s : w.path) {
      enc.put_raw(s.sibling);
      enc.put_u8(s.sibling_on_left ? 1 : 0);
    }
  }
  return enc.take();
}

std::optional<CommitmentProof> decode_proof(std::span<const std::uint8_t> in) {
  try {
    Decoder dec(in);
    CommitmentProof p;
    auto kind = dec.u8();
    if (kind > 1) return std::nullopt;
    p.kind = static_cast<CommitmentProof::Kind>(kind);
    p.key = dec.str();
    p.value = dec.bytes();
    auto nw = dec.u32();
    if (nw > 4) return std::nullopt;
    for (std::uint32_t i = 0; i < nw; ++i) {
      LeafWitness w;
      w.key = dec.str();
      w.value = dec.bytes();
      auto np = dec.u32();
      if (np > 64) return std::nullopt;
      for (std::uint32_t j = 0; j < np; ++j) {
        AuditStep s;
        auto raw = dec.raw(32);
        std::copy(raw.begin(), raw.end(), s.sibling.begin());
        s.sibling_on_left = dec.u8() != 0;
        w.path.push_back(s);
      }
      p.witnesses.push_back(std::move(w));
    }
    if (!dec.done()) return std::nullopt;
    return p;
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

}  // namespace ibc
