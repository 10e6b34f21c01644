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

#include "ibc/store.hpp"

#include <algorithm>

#include "ibc/errors.hpp"
#include "merkle_internal.hpp"

namespace ibc {

namespace {

std::vector<Hash> leaf_hashes(const std::map<std::string, Bytes>& map) {
  std::vector<Hash> leaves;
  leaves.reserve(map.size());
  for (const auto& [k, v] : map) leaves.push_back(merkle::leaf_hash(k, v));
  return leaves;
}

LeafWitness witness_for(const std::map<std::string, Bytes>& map,
                        const std::vector<std::vector<Hash>>& levels,
                        std::map<std::string, Bytes>::const_iterator it) {
  LeafWitness w;
  w.key = it->first;
  w.value = it->second;
  w.path = merkle::audit_path(levels, static_cast<std::size_t>(std::distance(map.begin(), it)));
  return w;
}

}  // namespace

void ProvableStore::validate_key(std::string_view key) {
  abort_unless(key_valid(key), Err::InvalidKey, std::string(key));
}

bool ProvableStore::key_valid(std::string_view key) {
  if (key.empty() || key.size() > kMaxKeyLen) return false;
  std::size_t seg_len = 0;
  for (char c : key) {
    if (c == '/') {
      if (seg_len == 0) return false;
      seg_len = 0;
    } else {
      ++seg_len;
    }
  }
  return seg_len > 0;  // trailing slash means an empty final segment
}

void ProvableStore::set(std::string_view key, Bytes value) {
  validate_key(key);
  abort_unless(value.size() <= kMaxValueLen, Err::ValueTooLarge);
  pending_[std::string(key)] = std::move(value);
}

std::optional<Bytes> ProvableStore::get(std::string_view key) const {
  validate_key(key);
  if (auto it = pending_.find(std::string(key)); it != pending_.end()) {
    return it->second;  // nullopt when a pending delete shadows the key
  }
  if (auto it = committed_.find(std::string(key)); it != committed_.end()) {
    return it->second;
  }
  return std::nullopt;
}

void ProvableStore::del(std::string_view key) {
  validate_key(key);
  pending_[std::string(key)] = std::nullopt;
}

CommitmentRoot ProvableStore::commit() {
  for (auto& [k, v] : pending_) {
    if (v.has_value()) {
      committed_[k] = std::move(*v);
    } else {
      committed_.erase(k);
    }
  }
  pending_.clear();

  ++latest_height_;
  Version ver;
  ver.height = latest_height_;
  ver.map = committed_;
  ver.root = compute_map_root(ver.map);
  versions_.push_back(std::move(ver));
  while (versions_.size() > kRetentionWindow) versions_.erase(versions_.begin());
  return versions_.back().root;
}

const std::map<std::string, Bytes>& ProvableStore::snapshot_at(std::uint64_t height) const {
  abort_unless(!versions_.empty() && height >= versions_.front().height &&
                   height <= versions_.back().height,
               Err::HeightPruned, "height " + std::to_string(height));
  return versions_[height - versions_.front().height].map;
}

CommitmentRoot ProvableStore::root_at(std::uint64_t height) const {
  abort_unless(!versions_.empty() && height >= versions_.front().height &&
                   height <= versions_.back().height,
               Err::HeightPruned, "height " + std::to_string(height));
  return versions_[height - versions_.front().height].root;
}

std::optional<Bytes> ProvableStore::get_committed(std::uint64_t height,
                                                  std::string_view key) const {
  const auto& snap = snapshot_at(height);
  if (auto it = snap.find(std::string(key)); it != snap.end()) return it->second;
  return std::nullopt;
}

std::vector<std::string> ProvableStore::committed_keys_with_prefix(
    std::string_view prefix) const {
  std::vector<std::string> out;
  for (auto it = committed_.lower_bound(std::string(prefix)); it != committed_.end(); ++it) {
    if (it->first.compare(0, prefix.size(), prefix) != 0) break;
    out.push_back(it->first);
  }
  return out;
}

CommitmentProof ProvableStore::prove_membership(std::uint64_t height,
                                                std::string_view key) const {
  const auto& snap = snapshot_at(height);
  auto it = snap.find(std::string(key));
  abort_unless(it != snap.end(), Err::KeyAbsent, std::string(key));

  auto levels = merkle::build_levels(leaf_hashes(snap));
  CommitmentProof p;
  p.kind = CommitmentProof::Kind::Membership;
  p.key = it->first;
  p.value = it->second;
  p.witnesses.push_back(witness_for(snap, levels, it));
  return p;
}

CommitmentProof ProvableStore::prove_non_membership(std::uint64_t height,
                                                    std::string_view key) const {
  const auto& snap = snapshot_at(height);
  std::string k(key);
  abort_unless(snap.find(k) == snap.end(), Err::KeyPresent, k);

  CommitmentProof p;
  p.kind = CommitmentProof::Kind::NonMembership;
  p.key = k;
  if (snap.empty()) return p;

  auto levels = merkle::build_levels(leaf_hashes(snap));
  auto hi = snap.lower_bound(k);  // first key greater than k (k itself absent)
  if (hi != snap.begin()) {
    p.witnesses.push_back(witness_for(snap, levels, std::prev(hi)));
  }
  if (hi != snap.end()) {
    p.witnesses.push_back(witness_for(snap, levels, hi));
  }
  return p;
}

CommitmentRoot compute_map_root(const std::map<std::string, Bytes>& map) {
  if (map.empty()) return empty_map_root();
  auto levels = merkle::build_levels(leaf_hashes(map));
  return levels.back()[0];
}

}  // namespace ibc
