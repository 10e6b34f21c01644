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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ibc/bytes.hpp"
#include "ibc/hash.hpp"

namespace ibc {

/// Root of the sorted-key binary Merkle tree over a committed key/value map.
/// Leaves are H(0x00 || len(key) || key || value), inner nodes
/// H(0x01 || left || right) with odd nodes promoted unchanged, and the empty
/// map commits to the domain-separated constant H(0x02).
using CommitmentRoot = Hash;

CommitmentRoot empty_map_root();

struct AuditStep {
  Hash sibling;
  bool sibling_on_left = false;

  bool operator==(const AuditStep&) const = default;
};

/// Membership witness for one leaf: recomputing the root from the leaf hash
/// along the audit path must reproduce the committed root.
struct LeafWitness {
  std::string key;
  Bytes value;
  std::vector<AuditStep> path;

  bool operator==(const LeafWitness&) const = default;
};

/// Verifiable statement about one key at one committed height. Membership
/// carries the single witness for the key itself. Non-membership carries the
/// witnesses of the lexicographic neighbours enclosing the key (one neighbour
/// at the map extremes, none for the empty map).
struct CommitmentProof {
  enum class Kind : std::uint8_t { Membership = 0, NonMembership = 1 };

  Kind kind = Kind::Membership;
  std::string key;
  Bytes value;  // empty for non-membership
  std::vector<LeafWitness> witnesses;

  bool operator==(const CommitmentProof&) const = default;
};

/// Pure structural check of a proof against a root. True iff the proof is
/// internally consistent and consistent with the root; malformed input yields
/// false, never an exception.
bool verify_proof(const CommitmentRoot& root, const CommitmentProof& proof);

Bytes encode_proof(const CommitmentProof& proof);
std::optional<CommitmentProof> decode_proof(std::span<const std::uint8_t> in);

}  // namespace ibc
