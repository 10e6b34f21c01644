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

#include "ibc/datagram.hpp"

#include "ibc/event.hpp"

namespace ibc {

std::string_view event_kind_name(EventKind k) {
  switch (k) {
    case EventKind::SendPacket: return "SendPacket";
    case EventKind::RecvPacket: return "RecvPacket";
    case EventKind::WriteAck: return "WriteAck";
    case EventKind::AcknowledgePacket: return "AcknowledgePacket";
    case EventKind::TimeoutPacket: return "TimeoutPacket";
    case EventKind::TimeoutOnClose: return "TimeoutOnClose";
    case EventKind::CleanupPacket: return "CleanupPacket";
    case EventKind::ChannelOpened: return "ChannelOpened";
    case EventKind::ChannelClosed: return "ChannelClosed";
    case EventKind::ClientFrozen: return "ClientFrozen";
    case EventKind::Escrow: return "Escrow";
    case EventKind::Unescrow: return "Unescrow";
    case EventKind::Mint: return "Mint";
    case EventKind::Burn: return "Burn";
  }
  return "?";
}

std::string_view datagram_kind_name(DatagramKind k) {
  switch (k) {
    case DatagramKind::ClientUpdate: return "ClientUpdate";
    case DatagramKind::ConnOpenInit: return "ConnOpenInit";
    case DatagramKind::ConnOpenTry: return "ConnOpenTry";
    case DatagramKind::ConnOpenAck: return "ConnOpenAck";
    case DatagramKind::ConnOpenConfirm: return "ConnOpenConfirm";
    case DatagramKind::ChanOpenInit: return "ChanOpenInit";
    case DatagramKind::ChanOpenTry: return "ChanOpenTry";
    case DatagramKind::ChanOpenAck: return "ChanOpenAck";
    case DatagramKind::ChanOpenConfirm: return "ChanOpenConfirm";
    case DatagramKind::ChanCloseInit: return "ChanCloseInit";
    case DatagramKind::ChanCloseConfirm: return "ChanCloseConfirm";
    case DatagramKind::PacketRecv: return "PacketRecv";
    case DatagramKind::PacketAck: return "PacketAck";
    case DatagramKind::PacketTimeout: return "PacketTimeout";
    case DatagramKind::PacketTimeoutOnClose: return "PacketTimeoutOnClose";
    case DatagramKind::PacketCleanup: return "PacketCleanup";
    case DatagramKind::ClientMisbehaviour: return "ClientMisbehaviour";
  }
  return "?";
}

namespace {

std::string packet_brief(const Packet& p) {
  return p.source_port + "/" + p.source_channel + "/" + std::to_string(p.sequence);
}

}  // namespace

std::string Datagram::brief() const {
  std::string name(datagram_kind_name(kind()));
  if (const auto* p = packet()) return name + " " + packet_brief(*p);
  return std::visit(
      [&name](const auto& d) -> std::string {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ClientUpdateData>) {
          return name + " " + d.client_id + "@" + std::to_string(header_height(d.header));
        } else if constexpr (std::is_same_v<T, ClientMisbehaviourData>) {
          return name + " " + d.client_id;
        } else if constexpr (std::is_same_v<T, ConnOpenInitData>) {
          return name + " " + d.identifier;
        } else if constexpr (std::is_same_v<T, ConnOpenTryData>) {
          return name + " " + d.desired_identifier;
        } else if constexpr (std::is_same_v<T, ConnOpenAckData> ||
                             std::is_same_v<T, ConnOpenConfirmData>) {
          return name + " " + d.identifier;
        } else if constexpr (std::is_same_v<T, ChanOpenInitData> ||
                             std::is_same_v<T, ChanOpenTryData> ||
                             std::is_same_v<T, ChanOpenAckData> ||
                             std::is_same_v<T, ChanOpenConfirmData> ||
                             std::is_same_v<T, ChanCloseInitData> ||
                             std::is_same_v<T, ChanCloseConfirmData>) {
          return name + " " + d.port_id + "/" + d.channel_id;
        } else {
          return name;
        }
      },
      body);
}

const Packet* Datagram::packet() const {
  return std::visit(
      [](const auto& d) -> const Packet* {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, RecvPacketData> || std::is_same_v<T, AckPacketData> ||
                      std::is_same_v<T, TimeoutPacketData> ||
                      std::is_same_v<T, TimeoutOnCloseData> ||
                      std::is_same_v<T, CleanupPacketData>) {
          return &d.packet;
        } else {
          return nullptr;
        }
      },
      body);
}

Packet* Datagram::packet() {
  return const_cast<Packet*>(static_cast<const Datagram*>(this)->packet());
}

}  // namespace ibc
