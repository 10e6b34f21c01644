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

#include <vector>

#include "ibc/bytes.hpp"
#include "ibc/hash.hpp"
#include "ibc/proof.hpp"

namespace ibc::merkle {

// Domain separators: 0x00 leaf, 0x01 inner node, 0x02 empty map.
inline Hash leaf_hash(std::string_view key, std::span<const std::uint8_t> value) {
  Encoder enc;
  enc.put_u8(0x00);
  enc.put_str(key);
  enc.put_raw(value);
  return sha256(enc.take());
}

inline Hash inner_hash(const Hash& left, const Hash& right) {
  Bytes buf;
  buf.reserve(1 + 64);
  buf.push_back(0x01);
  buf.insert(buf.end(), left.begin(), left.end());
  buf.insert(buf.end(), right.begin(), right.end());
  return sha256(buf);
}

// levels[0] holds the leaf hashes in key order; the last level holds the
// root. An odd trailing node is promoted unchanged to the next level.
inline std::vector<std::vector<Hash>> build_levels(std::vector<Hash> leaves) {
  std::vector<std::vector<Hash>> levels;
  levels.push_back(std::move(leaves));
  while (levels.back().size() > 1) {
    const auto& cur = levels.back();
    std::vector<Hash> next;
    next.reserve((cur.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < cur.size(); i += 2) {
      next.push_back(inner_hash(cur[i], cur[i + 1]));
    }
    if (cur.size() % 2 == 1) next.push_back(cur.back());
    levels.push_back(std::move(next));
  }
  return levels;
}

inline std::vector<AuditStep> audit_path(const std::vector<std::vector<Hash>>& levels,
                                         std::size_t index) {
  std::vector<AuditStep> path;
  for (std::size_t lvl = 0; lvl + 1 < levels.size(); ++lvl) {
    const auto& cur = levels[lvl];
    if (index % 2 == 0) {
      if (index + 1 < cur.size()) path.push_back({cur[index + 1], false});
      // else promoted: no step at this level
    } else {
      path.push_back({cur[index - 1], true});
    }
    index /= 2;
  }
  return path;
}

inline Hash fold_path(Hash h, const std::vector<AuditStep>& path) {
  for (const auto& step : path) {
    h = step.sibling_on_left ? inner_hash(step.sibling, h) : inner_hash(h, step.sibling);
  }
  return h;
}

}  // namespace ibc::merkle
