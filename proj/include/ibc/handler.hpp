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

#include "ibc/proof.hpp"
#include "ibc/types.hpp"

namespace ibc {
class Ledger;
}

namespace ibc::handler {

/// Versions this implementation can negotiate during connection handshakes.
const std::vector<std::string>& compatible_versions();
std::string pick_version(const std::vector<std::string>& counterparty_versions);

// --- connection handshake ---

void conn_open_init(Ledger& l, const std::string& identifier,
                    const std::string& desired_counterparty_id,
                    const std::string& counterparty_prefix, const std::string& client_id,
                    const std::string& counterparty_client_id);

void conn_open_try(Ledger& l, const std::string& desired_identifier,
                   const std::string& counterparty_connection_id,
                   const std::string& counterparty_prefix,
                   const std::string& counterparty_client_id, const std::string& client_id,
                   const std::vector<std::string>& counterparty_versions,
                   const CommitmentProof& proof_init, const CommitmentProof& proof_consensus,
                   std::uint64_t proof_height, std::uint64_t consensus_height);

void conn_open_ack(Ledger& l, const std::string& identifier, const std::string& version,
                   const CommitmentProof& proof_try, const CommitmentProof& proof_consensus,
                   std::uint64_t proof_height, std::uint64_t consensus_height);

void conn_open_confirm(Ledger& l, const std::string& identifier,
                       const CommitmentProof& proof_ack, std::uint64_t proof_height);

// --- channel handshake and close ---

Bytes chan_open_init(Ledger& l, ChannelOrder order,
                     const std::vector<std::string>& connection_hops,
                     const std::string& port_id, const std::string& channel_id,
                     const std::string& counterparty_port_id,
                     const std::string& counterparty_channel_id, const std::string& version,
                     const Bytes& port_capability);

Bytes chan_open_try(Ledger& l, ChannelOrder order,
                    const std::vector<std::string>& connection_hops,
                    const std::string& port_id, const std::string& channel_id,
                    const std::string& counterparty_port_id,
                    const std::string& counterparty_channel_id, const std::string& version,
                    const std::string& counterparty_version,
                    const CommitmentProof& proof_init, std::uint64_t proof_height,
                    const Bytes& port_capability);

void chan_open_ack(Ledger& l, const std::string& port_id, const std::string& channel_id,
                   const std::string& counterparty_version, const CommitmentProof& proof_try,
                   std::uint64_t proof_height, const Bytes& capability);

void chan_open_confirm(Ledger& l, const std::string& port_id, const std::string& channel_id,
                       const CommitmentProof& proof_ack, std::uint64_t proof_height,
                       const Bytes& capability);

void chan_close_init(Ledger& l, const std::string& port_id, const std::string& channel_id,
                     const Bytes& capability);

void chan_close_confirm(Ledger& l, const std::string& port_id, const std::string& channel_id,
                        const CommitmentProof& proof_init, std::uint64_t proof_height,
                        const Bytes& capability);

// --- packet lifecycle ---

void send_packet(Ledger& l, const Packet& packet, const Bytes& capability);

void recv_packet(Ledger& l, const Packet& packet, const CommitmentProof& proof,
                 std::uint64_t proof_height, const Bytes& acknowledgement,
                 const Bytes& capability);

void acknowledge_packet(Ledger& l, const Packet& packet, const Bytes& acknowledgement,
                        const CommitmentProof& proof, std::uint64_t proof_height,
                        const Bytes& capability);

void timeout_packet(Ledger& l, const Packet& packet, const CommitmentProof& proof,
                    std::uint64_t proof_height,
                    std::optional<std::uint64_t> next_sequence_recv, const Bytes& capability);

void timeout_on_close(Ledger& l, const Packet& packet, const CommitmentProof& proof_closed,
                      const CommitmentProof& proof_unreceived, std::uint64_t proof_height,
                      std::optional<std::uint64_t> next_sequence_recv, const Bytes& capability);

void cleanup_packet(Ledger& l, const Packet& packet, const CommitmentProof& proof,
                    std::uint64_t proof_height,
                    const std::variant<std::uint64_t, Bytes>& next_sequence_recv_or_ack,
                    const Bytes& capability);

// --- state reads shared by relayers and tests ---

std::optional<ConnectionEnd> connection_end(const Ledger& l, const std::string& id);
std::optional<ChannelEnd> channel_end(const Ledger& l, const std::string& port_id,
                                      const std::string& channel_id);
std::optional<std::uint64_t> next_sequence_send(const Ledger& l, const std::string& port,
                                                const std::string& chan);
std::optional<std::uint64_t> next_sequence_recv(const Ledger& l, const std::string& port,
                                                const std::string& chan);
std::optional<std::uint64_t> next_sequence_ack(const Ledger& l, const std::string& port,
                                               const std::string& chan);

// --- verification through the connection's client (exposed for tests) ---

bool verify_connection_state(const Ledger& l, const ConnectionEnd& conn,
                             std::uint64_t proof_height, const CommitmentProof& proof,
                             const std::string& counterparty_connection_id,
                             const ConnectionEnd& expected);

bool verify_channel_state(const Ledger& l, const ConnectionEnd& conn,
                          std::uint64_t proof_height, const CommitmentProof& proof,
                          const std::string& counterparty_port,
                          const std::string& counterparty_channel, const ChannelEnd& expected);

bool verify_client_consensus_state(const Ledger& l, const ConnectionEnd& conn,
                                   std::uint64_t proof_height, const CommitmentProof& proof,
                                   const std::string& counterparty_client_id,
                                   std::uint64_t consensus_height,
                                   const Bytes& expected_encoding);

}  // namespace ibc::handler
