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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ibc/bytes.hpp"
#include "ibc/proof.hpp"

namespace ibc {

/// Versioned key/value store. Writes accumulate as pending state until
/// commit() seals them into a new height whose full map is summarised by a
/// commitment root. Membership and non-membership proofs can be produced for
/// any height inside the retention window.
///
/// Single writer; reads from other threads are safe only between commits.
class ProvableStore {
 public:
  static constexpr std::size_t kMaxKeyLen = 512;
  static constexpr std::size_t kMaxValueLen = 64 * 1024;
  static constexpr std::uint64_t kRetentionWindow = 256;

  /// Key validity: non-empty slash-separated segments, no empty segment,
  /// total length <= 512 bytes. Throws AbortError(InvalidKey) otherwise.
  static void validate_key(std::string_view key);
  static bool key_valid(std::string_view key);

  void set(std::string_view key, Bytes value);
  std::optional<Bytes> get(std::string_view key) const;
  void del(std::string_view key);

  /// Seals pending writes into the next height and returns its root.
  CommitmentRoot commit();

  std::uint64_t latest_height() const { return latest_height_; }
  CommitmentRoot root_at(std::uint64_t height) const;

  /// Reads from the committed snapshot at a height (pending state excluded).
  std::optional<Bytes> get_committed(std::uint64_t height, std::string_view key) const;

  /// Committed keys with the given prefix at the latest height.
  std::vector<std::string> committed_keys_with_prefix(std::string_view prefix) const;

  CommitmentProof prove_membership(std::uint64_t height, std::string_view key) const;
  CommitmentProof prove_non_membership(std::uint64_t height, std::string_view key) const;

  /// Transaction support: snapshot and restore the pending overlay.
  using PendingSnapshot = std::map<std::string, std::optional<Bytes>>;
  PendingSnapshot pending_snapshot() const { return pending_; }
  void restore_pending(PendingSnapshot snap) { pending_ = std::move(snap); }

 private:
  const std::map<std::string, Bytes>& snapshot_at(std::uint64_t height) const;

  std::map<std::string, Bytes> committed_;
  // Overlay of uncommitted writes; nullopt marks a pending deletion.
  std::map<std::string, std::optional<Bytes>> pending_;

  struct Version {
    std::uint64_t height;
    CommitmentRoot root;
    std::map<std::string, Bytes> map;
  };
  std::vector<Version> versions_;  // retained window, ascending height
  std::uint64_t latest_height_ = 0;
};

/// Root of the canonical tree over an arbitrary map; exposed so ledgers can
/// compute genesis roots and tests can cross-check construction.
CommitmentRoot compute_map_root(const std::map<std::string, Bytes>& map);

}  // namespace ibc
