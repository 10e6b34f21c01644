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

#include "ibc/bytes.hpp"
#include "ibc/types.hpp"

namespace ibc {

enum class EventKind : std::uint8_t {
  SendPacket,
  RecvPacket,
  WriteAck,
  AcknowledgePacket,
  TimeoutPacket,
  TimeoutOnClose,
  CleanupPacket,
  ChannelOpened,
  ChannelClosed,
  ClientFrozen,
  Escrow,
  Unescrow,
  Mint,
  Burn,
};

std::string_view event_kind_name(EventKind k);

/// Events are the relayer's data-availability channel: packet payloads never
/// live in the store, so the full packet rides in the event emitted by the
/// transaction that committed its hash.
struct Event {
  EventKind kind;
  std::uint64_t height = 0;  // stamped when the containing block is produced
  std::optional<Packet> packet;
  Bytes ack;
  std::map<std::string, std::string> attrs;
};

}  // namespace ibc
