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
#include <optional>
#include <string>
#include <vector>

#include "ibc/bytes.hpp"
#include "ibc/hash.hpp"

namespace ibc {

enum class ConnectionState : std::uint8_t { Init = 1, TryOpen = 2, Open = 3 };
enum class ChannelState : std::uint8_t { Init = 1, TryOpen = 2, Open = 3, Closed = 4 };
enum class ChannelOrder : std::uint8_t { Ordered = 1, Unordered = 2 };

std::string_view connection_state_name(ConnectionState s);
std::string_view channel_state_name(ChannelState s);
std::string_view channel_order_name(ChannelOrder o);

struct ConnectionEnd {
  ConnectionState state = ConnectionState::Init;
  std::string counterparty_connection_id;
  std::string counterparty_prefix;
  std::string client_id;
  std::string counterparty_client_id;
  std::string version;

  bool operator==(const ConnectionEnd&) const = default;
};

struct ChannelEnd {
  ChannelState state = ChannelState::Init;
  ChannelOrder ordering = ChannelOrder::Unordered;
  std::string counterparty_port_id;
  std::string counterparty_channel_id;
  std::vector<std::string> connection_hops;  // length must be 1
  std::string version;

  bool operator==(const ChannelEnd&) const = default;
};

/// Sequenced opaque payload. Never serialised into the store whole; only the
/// commitment hash of (data, timeoutHeight, timeoutTimestamp) is written.
struct Packet {
  std::uint64_t sequence = 0;
  std::uint64_t timeout_height = 0;     // 0 = no height timeout
  std::uint64_t timeout_timestamp = 0;  // 0 = no timestamp timeout
  std::string source_port;
  std::string source_channel;
  std::string dest_port;
  std::string dest_channel;
  Bytes data;

  bool operator==(const Packet&) const = default;
};

/// H(4-byte-length-prefixed data || 8-byte BE timeoutHeight || 8-byte BE
/// timeoutTimestamp); the constant-size value stored under the commitment
/// path from send until ack/timeout/cleanup.
Hash packet_commitment(const Packet& p);

// Canonical store encodings.
Bytes encode_connection_end(const ConnectionEnd& c);
std::optional<ConnectionEnd> decode_connection_end(std::span<const std::uint8_t> in);
Bytes encode_channel_end(const ChannelEnd& c);
std::optional<ChannelEnd> decode_channel_end(std::span<const std::uint8_t> in);
Bytes encode_sequence(std::uint64_t seq);
std::optional<std::uint64_t> decode_sequence(std::span<const std::uint8_t> in);

/// Protocol identifiers (clients, connections, channels, ports):
/// 1-64 chars drawn from [a-z0-9-].
bool valid_identifier(std::string_view id);

/// Ledger names: 1-64 chars drawn from [A-Za-z0-9-].
bool valid_ledger_id(std::string_view id);

}  // namespace ibc
