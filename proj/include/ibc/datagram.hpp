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
#include <variant>
#include <vector>

#include "ibc/client.hpp"
#include "ibc/proof.hpp"
#include "ibc/types.hpp"

namespace ibc {

/// Wire-format tags for the simulator. Values 0..15 are fixed; 16 extends the
/// set with misbehaviour evidence submission.
enum class DatagramKind : std::uint8_t {
  ClientUpdate = 0,
  ConnOpenInit = 1,
  ConnOpenTry = 2,
  ConnOpenAck = 3,
  ConnOpenConfirm = 4,
  ChanOpenInit = 5,
  ChanOpenTry = 6,
  ChanOpenAck = 7,
  ChanOpenConfirm = 8,
  ChanCloseInit = 9,
  ChanCloseConfirm = 10,
  PacketRecv = 11,
  PacketAck = 12,
  PacketTimeout = 13,
  PacketTimeoutOnClose = 14,
  PacketCleanup = 15,
  ClientMisbehaviour = 16,
};

std::string_view datagram_kind_name(DatagramKind k);

struct ClientUpdateData {
  std::string client_id;
  Header header;
};

struct ConnOpenInitData {
  std::string identifier;
  std::string desired_counterparty_id;
  std::string counterparty_prefix;
  std::string client_id;
  std::string counterparty_client_id;
};

struct ConnOpenTryData {
  std::string desired_identifier;
  std::string counterparty_connection_id;
  std::string counterparty_prefix;
  std::string counterparty_client_id;
  std::string client_id;
  std::vector<std::string> counterparty_versions;
  CommitmentProof proof_init;
  CommitmentProof proof_consensus;
  std::uint64_t proof_height = 0;
  std::uint64_t consensus_height = 0;
};

struct ConnOpenAckData {
  std::string identifier;
  std::string version;
  CommitmentProof proof_try;
  CommitmentProof proof_consensus;
  std::uint64_t proof_height = 0;
  std::uint64_t consensus_height = 0;
};

struct ConnOpenConfirmData {
  std::string identifier;
  CommitmentProof proof_ack;
  std::uint64_t proof_height = 0;
};

struct ChanOpenInitData {
  ChannelOrder order = ChannelOrder::Unordered;
  std::vector<std::string> connection_hops;
  std::string port_id;
  std::string channel_id;
  std::string counterparty_port_id;
  std::string counterparty_channel_id;
  std::string version;
};

struct ChanOpenTryData {
  ChannelOrder order = ChannelOrder::Unordered;
  std::vector<std::string> connection_hops;
  std::string port_id;
  std::string channel_id;
  std::string counterparty_port_id;
  std::string counterparty_channel_id;
  std::string version;
  std::string counterparty_version;
  CommitmentProof proof_init;
  std::uint64_t proof_height = 0;
};

struct ChanOpenAckData {
  std::string port_id;
  std::string channel_id;
  std::string counterparty_version;
  CommitmentProof proof_try;
  std::uint64_t proof_height = 0;
};

struct ChanOpenConfirmData {
  std::string port_id;
  std::string channel_id;
  CommitmentProof proof_ack;
  std::uint64_t proof_height = 0;
};

struct ChanCloseInitData {
  std::string port_id;
  std::string channel_id;
};

struct ChanCloseConfirmData {
  std::string port_id;
  std::string channel_id;
  CommitmentProof proof_init;
  std::uint64_t proof_height = 0;
};

struct RecvPacketData {
  Packet packet;
  CommitmentProof proof;
  std::uint64_t proof_height = 0;
};

struct AckPacketData {
  Packet packet;
  Bytes acknowledgement;
  CommitmentProof proof;
  std::uint64_t proof_height = 0;
};

struct TimeoutPacketData {
  Packet packet;
  CommitmentProof proof;
  std::uint64_t proof_height = 0;
  std::optional<std::uint64_t> next_sequence_recv;
};

struct TimeoutOnCloseData {
  Packet packet;
  CommitmentProof proof_closed;
  CommitmentProof proof_unreceived;
  std::uint64_t proof_height = 0;
  std::optional<std::uint64_t> next_sequence_recv;
};

struct CleanupPacketData {
  Packet packet;
  CommitmentProof proof;
  std::uint64_t proof_height = 0;
  std::variant<std::uint64_t, Bytes> next_sequence_recv_or_ack;
};

struct ClientMisbehaviourData {
  std::string client_id;
  Header header_a;
  Header header_b;
};

struct Datagram {
  using Body = std::variant<ClientUpdateData, ConnOpenInitData, ConnOpenTryData,
                            ConnOpenAckData, ConnOpenConfirmData, ChanOpenInitData,
                            ChanOpenTryData, ChanOpenAckData, ChanOpenConfirmData,
                            ChanCloseInitData, ChanCloseConfirmData, RecvPacketData,
                            AckPacketData, TimeoutPacketData, TimeoutOnCloseData,
                            CleanupPacketData, ClientMisbehaviourData>;

  Body body;

  DatagramKind kind() const { return static_cast<DatagramKind>(body.index()); }

  /// Short human-readable identity for reports and traces.
  std::string brief() const;

  const Packet* packet() const;
  Packet* packet();
};

}  // namespace ibc
