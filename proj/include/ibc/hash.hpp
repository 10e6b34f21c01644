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

#include <array>
#include <cstdint>
#include <span>
#include <string>

#include "ibc/bytes.hpp"

namespace ibc {

/// SHA-256 digest. The whole artifact is pinned to SHA-256 so that every
/// commitment, packet hash, and signer-set digest is bit-exact across ledgers.
using Hash = std::array<std::uint8_t, 32>;

Hash sha256(std::span<const std::uint8_t> data);

inline Hash sha256(const Bytes& data) {
  return sha256(std::span<const std::uint8_t>(data));
}

inline Bytes hash_bytes(const Hash& h) {
  return Bytes(h.begin(), h.end());
}

inline std::string hash_hex(const Hash& h) {
  return to_hex(std::span<const std::uint8_t>(h));
}

}  // namespace ibc
