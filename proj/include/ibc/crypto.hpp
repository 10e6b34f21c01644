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

#include "ibc/bytes.hpp"

namespace ibc {

/// Ed25519 signing keypair; seeds are derived deterministically so that a
/// simulation is reproducible from its scenario seed alone.
struct SignerKey {
  Bytes seed;        // 32-byte private seed
  Bytes public_key;  // 32-byte public key
};

SignerKey derive_signer(std::uint64_t ledger_seed, std::uint32_t index);
SignerKey signer_from_seed(const Bytes& seed32);

Bytes ed25519_sign(const Bytes& seed32, std::span<const std::uint8_t> message);
bool ed25519_verify(const Bytes& public_key, std::span<const std::uint8_t> message,
                    std::span<const std::uint8_t> signature);

}  // namespace ibc
