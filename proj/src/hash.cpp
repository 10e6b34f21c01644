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

#include "ibc/hash.hpp"

#include <openssl/sha.h>

#include <stdexcept>

namespace ibc {

Hash sha256(std::span<const std::uint8_t> data) {
  Hash out;
  SHA256(data.data(), data.size(), out.data());
  return out;
}

}  // namespace ibc
