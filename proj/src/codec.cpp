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

#include "ibc/types.hpp"

namespace ibc {

std::string_view connection_state_name(ConnectionState s) {
  switch (s) {
    case ConnectionState::Init: return "INIT";
    case ConnectionState::TryOpen: return "TRYOPEN";
    case ConnectionState::Open: return "OPEN";
  }
  return "?";
}

std::string_view channel_state_name(ChannelState s) {
  switch (s) {
    case ChannelState::Init: return "INIT";
    case ChannelState::TryOpen: return "TRYOPEN";
    case ChannelState::Open: return "OPEN";
    case ChannelState::Closed: return "CLOSED";
  }
  return "?";
}

std::string_view channel_order_name(ChannelOrder o) {
  switch (o) {
    case ChannelOrder::Ordered: return "ORDERED";
    case ChannelOrder::Unordered: return "UNORDERED";
  }
  return "?";
}

Hash packet_commitment(const Packet& p) {
  Encoder enc;
  enc.put_bytes(p.data);
  enc.put_u64(p.timeout_height);
  enc.put_u64(p.timeout_timestamp);
  return sha256(enc.take());
}

Bytes encode_connection_end(const ConnectionEnd& c) {
  Encoder enc;
  enc.put_u8(static_cast<std::uint8_t>(c.state));
  enc.put_str(c.counterparty_connection_id);
  enc.put_str(c.counterparty_prefix);
  enc.put_str(c.client_id);
  enc.put_str(c.counterparty_client_id);
  enc.put_str(c.version);
  return enc.take();
}

std::optional<ConnectionEnd> decode_connection_end(std::span<const std::uint8_t> in) {
  try {
    Decoder dec(in);
    ConnectionEnd c;
    auto s = dec.u8();
    if (s < 1 || s > 3) return std::nullopt;
    c.state = static_cast<ConnectionState>(s);
    c.counterparty_connection_id = dec.str();
    c.counterparty_prefix = dec.str();
    c.client_id = dec.str();
    c.counterparty_client_id = dec.str();
    c.version = dec.str();
    if (!dec.done()) return std::nullopt;
    return c;
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

Bytes encode_channel_end(const ChannelEnd& c) {
  Encoder enc;
  enc.put_u8(static_cast<std::uint8_t>(c.state));
  enc.put_u8(static_cast<std::uint8_t>(c.ordering));
  enc.put_str(c.counterparty_port_id);
  enc.put_str(c.counterparty_channel_id);
  enc.put_u8(static_cast<std::uint8_t>(c.connection_hops.size()));
  for (const auto& hop : c.connection_hops) enc.put_str(hop);
  enc.put_str(c.version);
  return enc.take();
}

std::optional<ChannelEnd> decode_channel_end(std::span<const std::uint8_t> in) {
  try {
    Decoder dec(in);
    ChannelEnd c;
    auto s = dec.u8();
    if (s < 1 || s > 4) return std::nullopt;
    c.state = static_cast<ChannelState>(s);
    auto o = dec.u8();
    if (o < 1 || o > 2) return std::nullopt;
    c.ordering = static_cast<ChannelOrder>(o);
    c.counterparty_port_id = dec.str();
    c.counterparty_channel_id = dec.str();
    auto hops = dec.u8();
    for (std::uint8_t i = 0; i < hops; ++i) c.connection_hops.push_back(dec.str());
    c.version = dec.str();
    if (!dec.done()) return std::nullopt;
    return c;
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

Bytes encode_sequence(std::uint64_t seq) {
  Encoder enc;
  enc.put_u64(seq);
  return enc.take();
}

std::optional<std::uint64_t> decode_sequence(std::span<const std::uint8_t> in) {
  if (in.size() != 8) return std::nullopt;
  Decoder dec(in);
  return dec.u64();
}

bool valid_identifier(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-')) return false;
  }
  return true;
}

bool valid_ledger_id(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
          c == '-')) {
      return false;
    }
  }
  return true;
}

}  // namespace ibc
