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

#include "ibc/amount.hpp"

namespace ibc {

std::string u256_str(const Uint256& v) { return v.str(); }

std::optional<Uint256> u256_parse(const std::string& s) {
  if (s.empty() || s.size() > 78) return std::nullopt;  // 2^256 has 78 digits
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  try {
    return Uint256(s);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Bytes u256_bytes(const Uint256& v) {
  Bytes out(32, 0);
  auto tmp = v;
  for (int i = 31; i >= 0; --i) {
    out[i] = static_cast<std::uint8_t>(tmp & 0xff);
    tmp >>= 8;
  }
  return out;
}

std::optional<Uint256> u256_from_bytes(std::span<const std::uint8_t> in) {
  if (in.size() != 32) return std::nullopt;
  Uint256 v = 0;
  for (auto b : in) {
    v <<= 8;
    v |= b;
  }
  return v;
}

}  // namespace ibc
