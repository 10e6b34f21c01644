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

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "ibc/bytes.hpp"

namespace ibc {

/// Unsigned 256-bit token amount with checked arithmetic: overflow and
/// underflow throw, which the transfer module converts into failure
/// acknowledgements rather than state corruption.
using Uint256 = boost::multiprecision::checked_uint256_t;

std::string u256_str(const Uint256& v);
std::optional<Uint256> u256_parse(const std::string& s);

/// 32-byte big-endian fixed-width encoding.
Bytes u256_bytes(const Uint256& v);
std::optional<Uint256> u256_from_bytes(std::span<const std::uint8_t> in);

}  // namespace ibc
