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

#include "ibc/handler.hpp"

#include <algorithm>

#include "ibc/client.hpp"
#include "ibc/errors.hpp"
#include "ibc/keys.hpp"
#include "ibc/ledger.hpp"

namespace ibc::handler {

const std::vector<std::string>& compatible_versions() {
  static const std::vector<std::string> versions{"ibc-1"};
  return versions;
}

std::string pick_version(const std::vector<std::string>& counterparty_versions) {
  for (const auto& v : compatible_versions()) {
    if (std::find(counterparty_versions.begin(), counterparty_versions.end(), v) !=
        counterparty_versions.end()) {
      return v;
    }
  }
  throw AbortError(Err::IncompatibleVersion, "no common version");
}

// --- reads ---

std::optional<ConnectionEnd> connection_end(const Ledger& l, const std::string& id) {
  auto raw = l.ibc_get(paths::connection(id));
  if (!raw) return std::nullopt;
  return decode_connection_end(*raw);
}

std::optional<ChannelEnd> channel_end(const Ledger& l, const std::string& port_id,
                                      const std::string& channel_id) {
  auto raw = l.ibc_get(paths::channel(port_id, channel_id));
  if (!raw) return std::nullopt;
  return decode_channel_end(*raw);
}

namespace {

std::optional<std::uint64_t> read_sequence(const Ledger& l, const std::string& path) {
  auto raw = l.ibc_get(path);
  if (!raw) return std::nullopt;
  return decode_sequence(*raw);
}

ConnectionEnd connection_or_abort(const Ledger& l, const std::string& id) {
  auto conn = connection_end(l, id);
  abort_unless(conn.has_value(), Err::NoSuchConnection, id);
  return *conn;
}

ChannelEnd channel_or_abort(const Ledger& l, const std::string& port_id,
                            const std::string& channel_id) {
  auto chan = channel_end(l, port_id, channel_id);
  abort_unless(chan.has_value(), Err::NoSuchChannel, port_id + "/" + channel_id);
  return *chan;
}

std::uint64_t sequence_or_abort(const Ledger& l, const std::string& path) {
  auto seq = read_sequence(l, path);
  abort_unless(seq.has_value(), Err::NoSuchChannel, path);
  return *seq;
}

void authenticate(const Ledger& l, const std::string& path, const Bytes& capability) {
  abort_unless(l.authenticate_capability(path, capability), Err::Unauthorized, path);
}

Event packet_event(EventKind kind, const Packet& p) {
  Event ev;
  ev.kind = kind;
  ev.packet = p;
  return ev;
}

}  // namespace

std::optional<std::uint64_t> next_sequence_send(const Ledger& l, const std::string& port,
                                                const std::string& chan) {
  return read_sequence(l, paths::next_sequence_send(port, chan));
}
std::optional<std::uint64_t> next_sequence_recv(const Ledger& l, const std::string& port,
                                                const std::string& chan) {
  return read_sequence(l, paths::next_sequence_recv(port, chan));
}
std::optional<std::uint64_t> next_sequence_ack(const Ledger& l, const std::string& port,
                                               const std::string& chan) {
  return read_sequence(l, paths::next_sequence_ack(port, chan));
}

// --- verification through the connection's client ---

bool verify_connection_state(const Ledger& l, const ConnectionEnd& conn,
                             std::uint64_t proof_height, const CommitmentProof& proof,
                             const std::string& counterparty_connection_id,
                             const ConnectionEnd& expected) {
  return client_verify_membership(l, conn.client_id, proof_height, conn.counterparty_prefix,
                                  paths::connection(counterparty_connection_id),
                                  encode_connection_end(expected), proof);
}

bool verify_channel_state(const Ledger& l, const ConnectionEnd& conn,
                          std::uint64_t proof_height, const CommitmentProof& proof,
                          const std::string& counterparty_port,
                          const std::string& counterparty_channel, const ChannelEnd& expected) {
  return client_verify_membership(l, conn.client_id, proof_height, conn.counterparty_prefix,
                                  paths::channel(counterparty_port, counterparty_channel),
                                  encode_channel_end(expected), proof);
}

bool verify_client_consensus_state(const Ledger& l, const ConnectionEnd& conn,
                                   std::uint64_t proof_height, const CommitmentProof& proof,
                                   const std::string& counterparty_client_id,
                                   std::uint64_t consensus_height,
                                   const Bytes& expected_encoding) {
  return client_verify_membership(
      l, conn.client_id, proof_height, conn.counterparty_prefix,
      paths::client_consensus(counterparty_client_id, consensus_height), expected_encoding,
      proof);
}

namespace {

bool verify_packet_data(const Ledger& l, const ConnectionEnd& conn, std::uint64_t proof_height,
                        const CommitmentProof& proof, const Packet& p) {
  return client_verify_membership(l, conn.client_id, proof_height, conn.counterparty_prefix,
                                  paths::packet_commitment(p.source_port, p.source_channel,
                                                           p.sequence),
                                  hash_bytes(packet_commitment(p)), proof);
}

bool verify_packet_acknowledgement(const Ledger& l, const ConnectionEnd& conn,
                                   std::uint64_t proof_height, const CommitmentProof& proof,
                                   const Packet& p, const Bytes& ack) {
  return client_verify_membership(l, conn.client_id, proof_height, conn.counterparty_prefix,
                                  paths::packet_acknowledgement(p.dest_port, p.dest_channel,
                                                                p.sequence),
                                  hash_bytes(sha256(ack)), proof);
}

bool verify_packet_acknowledgement_absence(const Ledger& l, const ConnectionEnd& conn,
                                           std::uint64_t proof_height,
                                           const CommitmentProof& proof, const Packet& p) {
  return client_verify_non_membership(l, conn.client_id, proof_height,
                                      conn.counterparty_prefix,
                                      paths::packet_acknowledgement(p.dest_port, p.dest_channel,
                                                                    p.sequence),
                                      proof);
}

bool verify_next_sequence_recv(const Ledger& l, const ConnectionEnd& conn,
                               std::uint64_t proof_height, const CommitmentProof& proof,
                               const std::string& dest_port, const std::string& dest_channel,
                               std::uint64_t next_seq) {
  return client_verify_membership(l, conn.client_id, proof_height, conn.counterparty_prefix,
                                  paths::next_sequence_recv(dest_port, dest_channel),
                                  encode_sequence(next_seq), proof);
}

/// The client's view of the destination ledger's clock at a height, taken
/// from the stored consensus state.
std::uint64_t timestamp_at_height_via_client(const Ledger& l, const ConnectionEnd& conn,
                                             std::uint64_t height) {
  auto cs = client_consensus_state(l, conn.client_id, height);
  abort_unless(cs.has_value(), Err::NoConsensusState,
               conn.client_id + " at " + std::to_string(height));
  return cs->timestamp;
}

}  // namespace

// --- connection handshake ---

void conn_open_init(Ledger& l, const std::string& identifier,
                    const std::string& desired_counterparty_id,
                    const std::string& counterparty_prefix, const std::string& client_id,
                    const std::string& counterparty_client_id) {
  abort_unless(valid_identifier(identifier), Err::InvalidIdentifier, identifier);
  abort_unless(!l.ibc_get(paths::connection(identifier)).has_value(), Err::IdentifierInUse,
               identifier);
  abort_unless(client_record(l, client_id).has_value(), Err::NoSuchClient, client_id);

  ConnectionEnd conn{ConnectionState::Init, desired_counterparty_id, counterparty_prefix,
                     client_id, counterparty_client_id, compatible_versions().front()};
  l.ibc_set(paths::connection(identifier), encode_connection_end(conn));
}

void conn_open_try(Ledger& l, const std::string& desired_identifier,
                   const std::string& counterparty_connection_id,
                   const std::string& counterparty_prefix,
                   const std::string& counterparty_client_id, const std::string& client_id,
                   const std::vector<std::string>& counterparty_versions,
                   const CommitmentProof& proof_init, const CommitmentProof& proof_consensus,
                   std::uint64_t proof_height, std::uint64_t consensus_height) {
  abort_unless(valid_identifier(desired_identifier), Err::InvalidIdentifier,
               desired_identifier);
  abort_unless(consensus_height <= l.latest_height(), Err::FutureConsensusHeight,
               std::to_string(consensus_height));
  auto expected_consensus = encode_consensus_state(ClientType::Quorum, consensus_height,
                                                   l.own_consensus_state(consensus_height));

  ConnectionEnd expected{ConnectionState::Init, desired_identifier, l.commitment_prefix(),
                         counterparty_client_id, client_id, compatible_versions().front()};
  auto version = pick_version(counterparty_versions);
  ConnectionEnd conn{ConnectionState::TryOpen, counterparty_connection_id,
                     counterparty_prefix, client_id, counterparty_client_id, version};

  abort_unless(verify_connection_state(l, conn, proof_height, proof_init,
                                       counterparty_connection_id, expected),
               Err::ProofFailure, "counterparty connection INIT");
  abort_unless(verify_client_consensus_state(l, conn, proof_height, proof_consensus,
                                             counterparty_client_id, consensus_height,
                                             expected_consensus),
               Err::ProofFailure, "counterparty client consensus state");

  auto previous_raw = l.ibc_get(paths::connection(desired_identifier));
  if (previous_raw.has_value()) {
    auto previous = decode_connection_end(*previous_raw);
    // crossing hellos: a prior INIT end must agree on every field
    abort_unless(previous.has_value() && previous->state == ConnectionState::Init &&
                     previous->counterparty_connection_id == counterparty_connection_id &&
                     previous->counterparty_prefix == counterparty_prefix &&
                     previous->client_id == client_id &&
                     previous->counterparty_client_id == counterparty_client_id &&
                     previous->version == version,
                 Err::ConflictingPriorState, desired_identifier);
  }
  l.ibc_set(paths::connection(desired_identifier), encode_connection_end(conn));
}

void conn_open_ack(Ledger& l, const std::string& identifier, const std::string& version,
                   const CommitmentProof& proof_try, const CommitmentProof& proof_consensus,
                   std::uint64_t proof_height, std::uint64_t consensus_height) {
  abort_unless(consensus_height <= l.latest_height(), Err::FutureConsensusHeight,
               std::to_string(consensus_height));
  auto conn = connection_or_abort(l, identifier);
  abort_unless(conn.state == ConnectionState::Init || conn.state == ConnectionState::TryOpen,
               Err::BadState, std::string(connection_state_name(conn.state)));

  auto expected_consensus = encode_consensus_state(ClientType::Quorum, consensus_height,
                                                   l.own_consensus_state(consensus_height));
  ConnectionEnd expected{ConnectionState::TryOpen, identifier, l.commitment_prefix(),
                         conn.counterparty_client_id, conn.client_id, version};

  abort_unless(verify_connection_state(l, conn, proof_height, proof_try,
                                       conn.counterparty_connection_id, expected),
               Err::ProofFailure, "counterparty connection TRYOPEN");
  abort_unless(verify_client_consensus_state(l, conn, proof_height, proof_consensus,
                                             conn.counterparty_client_id, consensus_height,
                                             expected_consensus),
               Err::ProofFailure, "counterparty client consensus state");

  abort_unless(std::find(compatible_versions().begin(), compatible_versions().end(), version) !=
                   compatible_versions().end(),
               Err::IncompatibleVersion, version);
  conn.state = ConnectionState::Open;
  conn.version = version;
  l.ibc_set(paths::connection(identifier), encode_connection_end(conn));
}

void conn_open_confirm(Ledger& l, const std::string& identifier,
                       const CommitmentProof& proof_ack, std::uint64_t proof_height) {
  auto conn = connection_or_abort(l, identifier);
  abort_unless(conn.state == ConnectionState::TryOpen, Err::BadState,
               std::string(connection_state_name(conn.state)));

  ConnectionEnd expected{ConnectionState::Open, identifier, l.commitment_prefix(),
                         conn.counterparty_client_id, conn.client_id, conn.version};
  abort_unless(verify_connection_state(l, conn, proof_height, proof_ack,
                                       conn.counterparty_connection_id, expected),
               Err::ProofFailure, "counterparty connection OPEN");

  conn.state = ConnectionState::Open;
  l.ibc_set(paths::connection(identifier), encode_connection_end(conn));
}

// --- channel handshake ---

namespace {

void init_channel_sequences(Ledger& l, const std::string& port, const std::string& chan) {
  l.ibc_set(paths::next_sequence_send(port, chan), encode_sequence(1));
  l.ibc_set(paths::next_sequence_recv(port, chan), encode_sequence(1));
  l.ibc_set(paths::next_sequence_ack(port, chan), encode_sequence(1));
}

void emit_channel_event(Ledger& l, EventKind kind, const std::string& port,
                        const std::string& chan, const ChannelEnd& end) {
  Event ev;
  ev.kind = kind;
  ev.attrs["port"] = port;
  ev.attrs["channel"] = chan;
  ev.attrs["ordering"] = std::string(channel_order_name(end.ordering));
  ev.attrs["counterparty_port"] = end.counterparty_port_id;
  ev.attrs["counterparty_channel"] = end.counterparty_channel_id;
  l.emit_event(std::move(ev));
}

}  // namespace

Bytes chan_open_init(Ledger& l, ChannelOrder order,
                     const std::vector<std::string>& connection_hops,
                     const std::string& port_id, const std::string& channel_id,
                     const std::string& counterparty_port_id,
                     const std::string& counterparty_channel_id, const std::string& version,
                     const Bytes& port_capability) {
  abort_unless(valid_identifier(port_id) && valid_identifier(channel_id),
               Err::InvalidIdentifier, port_id + "/" + channel_id);
  abort_unless(connection_hops.size() == 1, Err::MultiHopUnsupported,
               std::to_string(connection_hops.size()) + " hops");
  abort_unless(!l.ibc_get(paths::channel(port_id, channel_id)).has_value(),
               Err::IdentifierInUse, channel_id);
  connection_or_abort(l, connection_hops[0]);
  authenticate(l, paths::port(port_id), port_capability);

  ChannelEnd chan{ChannelState::Init, order, counterparty_port_id, counterparty_channel_id,
                  connection_hops, version};
  l.ibc_set(paths::channel(port_id, channel_id), encode_channel_end(chan));
  auto capability = l.new_capability(paths::channel_capability(port_id, channel_id));
  init_channel_sequences(l, port_id, channel_id);
  return capability;
}

Bytes chan_open_try(Ledger& l, ChannelOrder order,
                    const std::vector<std::string>& connection_hops,
                    const std::string& port_id, const std::string& channel_id,
                    const std::string& counterparty_port_id,
                    const std::string& counterparty_channel_id, const std::string& version,
                    const std::string& counterparty_version,
                    const CommitmentProof& proof_init, std::uint64_t proof_height,
                    const Bytes& port_capability) {
  abort_unless(valid_identifier(port_id) && valid_identifier(channel_id),
               Err::InvalidIdentifier, port_id + "/" + channel_id);
  abort_unless(connection_hops.size() == 1, Err::MultiHopUnsupported,
               std::to_string(connection_hops.size()) + " hops");

  auto previous_raw = l.ibc_get(paths::channel(port_id, channel_id));
  if (previous_raw.has_value()) {
    auto previous = decode_channel_end(*previous_raw);
    abort_unless(previous.has_value() && previous->state == ChannelState::Init &&
                     previous->ordering == order &&
                     previous->counterparty_port_id == counterparty_port_id &&
                     previous->counterparty_channel_id == counterparty_channel_id &&
                     previous->connection_hops == connection_hops &&
                     previous->version == version,
                 Err::ConflictingPriorState, channel_id);
  }
  authenticate(l, paths::port(port_id), port_capability);

  auto conn = connection_or_abort(l, connection_hops[0]);
  abort_unless(conn.state == ConnectionState::Open, Err::BadState, "connection not OPEN");

  ChannelEnd expected{ChannelState::Init, order, port_id, channel_id,
                      {conn.counterparty_connection_id}, counterparty_version};
  abort_unless(verify_channel_state(l, conn, proof_height, proof_init, counterparty_port_id,
                                    counterparty_channel_id, expected),
               Err::ProofFailure, "counterparty channel INIT");

  ChannelEnd chan{ChannelState::TryOpen, order, counterparty_port_id,
                  counterparty_channel_id, connection_hops, version};
  l.ibc_set(paths::channel(port_id, channel_id), encode_channel_end(chan));
  Bytes capability;
  if (previous_raw.has_value()) {
    // crossing hellos: keep the capability issued by our own chanOpenInit
    capability = l.priv_get(paths::channel_capability(port_id, channel_id)).value_or(Bytes{});
  } else {
    capability = l.new_capability(paths::channel_capability(port_id, channel_id));
    init_channel_sequences(l, port_id, channel_id);
  }
  return capability;
}

void chan_open_ack(Ledger& l, const std::string& port_id, const std::string& channel_id,
                   const std::string& counterparty_version, const CommitmentProof& proof_try,
                   std::uint64_t proof_height, const Bytes& capability) {
  auto chan = channel_or_abort(l, port_id, channel_id);
  abort_unless(chan.state == ChannelState::Init || chan.state == ChannelState::TryOpen,
               Err::BadState, std::string(channel_state_name(chan.state)));
  authenticate(l, paths::channel_capability(port_id, channel_id), capability);

  auto conn = connection_or_abort(l, chan.connection_hops[0]);
  abort_unless(conn.state == ConnectionState::Open, Err::BadState, "connection not OPEN");

  ChannelEnd expected{ChannelState::TryOpen, chan.ordering, port_id, channel_id,
                      {conn.counterparty_connection_id}, counterparty_version};
  abort_unless(verify_channel_state(l, conn, proof_height, proof_try,
                                    chan.counterparty_port_id, chan.counterparty_channel_id,
                                    expected),
               Err::ProofFailure, "counterparty channel TRYOPEN");

  chan.state = ChannelState::Open;
  chan.version = counterparty_version;
  l.ibc_set(paths::channel(port_id, channel_id), encode_channel_end(chan));
  emit_channel_event(l, EventKind::ChannelOpened, port_id, channel_id, chan);
}

void chan_open_confirm(Ledger& l, const std::string& port_id, const std::string& channel_id,
                       const CommitmentProof& proof_ack, std::uint64_t proof_height,
                       const Bytes& capability) {
  auto chan = channel_or_abort(l, port_id, channel_id);
  abort_unless(chan.state == ChannelState::TryOpen, Err::BadState,
               std::string(channel_state_name(chan.state)));
  authenticate(l, paths::channel_capability(port_id, channel_id), capability);

  auto conn = connection_or_abort(l, chan.connection_hops[0]);
  abort_unless(conn.state == ConnectionState::Open, Err::BadState, "connection not OPEN");

  ChannelEnd expected{ChannelState::Open, chan.ordering, port_id, channel_id,
                      {conn.counterparty_connection_id}, chan.version};
  abort_unless(verify_channel_state(l, conn, proof_height, proof_ack,
                                    chan.counterparty_port_id, chan.counterparty_channel_id,
                                    expected),
               Err::ProofFailure, "counterparty channel OPEN");

  chan.state = ChannelState::Open;
  l.ibc_set(paths::channel(port_id, channel_id), encode_channel_end(chan));
  emit_channel_event(l, EventKind::ChannelOpened, port_id, channel_id, chan);
}

void chan_close_init(Ledger& l, const std::string& port_id, const std::string& channel_id,
                     const Bytes& capability) {
  authenticate(l, paths::channel_capability(port_id, channel_id), capability);
  auto chan = channel_or_abort(l, port_id, channel_id);
  abort_unless(chan.state != ChannelState::Closed, Err::AlreadyClosed,
               port_id + "/" + channel_id);
  auto conn = connection_or_abort(l, chan.connection_hops[0]);
  abort_unless(conn.state == ConnectionState::Open, Err::BadState, "connection not OPEN");

  chan.state = ChannelState::Closed;
  l.ibc_set(paths::channel(port_id, channel_id), encode_channel_end(chan));
  emit_channel_event(l, EventKind::ChannelClosed, port_id, channel_id, chan);
}

void chan_close_confirm(Ledger& l, const std::string& port_id, const std::string& channel_id,
                        const CommitmentProof& proof_init, std::uint64_t proof_height,
                        const Bytes& capability) {
  authenticate(l, paths::channel_capability(port_id, channel_id), capability);
  auto chan = channel_or_abort(l, port_id, channel_id);
  abort_unless(chan.state != ChannelState::Closed, Err::AlreadyClosed,
               port_id + "/" + channel_id);
  auto conn = connection_or_abort(l, chan.connection_hops[0]);
  abort_unless(conn.state == ConnectionState::Open, Err::BadState, "connection not OPEN");

  ChannelEnd expected{ChannelState::Closed, chan.ordering, port_id, channel_id,
                      {conn.counterparty_connection_id}, chan.version};
  abort_unless(verify_channel_state(l, conn, proof_height, proof_init,
                                    chan.counterparty_port_id, chan.counterparty_channel_id,
                                    expected),
               Err::ProofFailure, "counterparty channel CLOSED");

  chan.state = ChannelState::Closed;
  l.ibc_set(paths::channel(port_id, channel_id), encode_channel_end(chan));
  emit_channel_event(l, EventKind::ChannelClosed, port_id, channel_id, chan);
}

// --- packet lifecycle ---

void send_packet(Ledger& l, const Packet& packet, const Bytes& capability) {
  auto chan = channel_or_abort(l, packet.source_port, packet.source_channel);
  abort_unless(chan.state != ChannelState::Closed, Err::ChannelClosed,
               packet.source_port + "/" + packet.source_channel);
  authenticate(l, paths::channel_capability(packet.source_port, packet.source_channel),
               capability);
  abort_unless(packet.dest_port == chan.counterparty_port_id, Err::WrongCounterparty,
               packet.dest_port);
  abort_unless(packet.dest_channel == chan.counterparty_channel_id, Err::WrongCounterparty,
               packet.dest_channel);
  auto conn = connection_or_abort(l, chan.connection_hops[0]);

  auto client = client_record_or_abort(l, conn.client_id);
  abort_unless(packet.timeout_height == 0 || client.latest_height < packet.timeout_height,
               Err::TimeoutElapsedOnClient,
               "client at " + std::to_string(client.latest_height));

  auto seq_path = paths::next_sequence_send(packet.source_port, packet.source_channel);
  auto next_seq = sequence_or_abort(l, seq_path);
  abort_unless(packet.sequence == next_seq, Err::WrongSequence,
               "expected " + std::to_string(next_seq));

  l.ibc_set(seq_path, encode_sequence(next_seq + 1));
  l.ibc_set(paths::packet_commitment(packet.source_port, packet.source_channel,
                                     packet.sequence),
            hash_bytes(packet_commitment(packet)));
  l.emit_event(packet_event(EventKind::SendPacket, packet));
}

void recv_packet(Ledger& l, const Packet& packet, const CommitmentProof& proof,
                 std::uint64_t proof_height, const Bytes& acknowledgement,
                 const Bytes& capability) {
  auto chan = channel_or_abort(l, packet.dest_port, packet.dest_channel);
  abort_unless(chan.state == ChannelState::Open, Err::ChannelNotOpen,
               std::string(channel_state_name(chan.state)));
  authenticate(l, paths::channel_capability(packet.dest_port, packet.dest_channel),
               capability);
  abort_unless(packet.source_port == chan.counterparty_port_id, Err::WrongCounterparty,
               packet.source_port);
  abort_unless(packet.source_channel == chan.counterparty_channel_id, Err::WrongCounterparty,
               packet.source_channel);

  auto ack_path =
      paths::packet_acknowledgement(packet.dest_port, packet.dest_channel, packet.sequence);
  abort_unless(!l.ibc_get(ack_path).has_value(), Err::DuplicateReceipt,
               std::to_string(packet.sequence));

  auto conn = connection_or_abort(l, chan.connection_hops[0]);
  abort_unless(conn.state == ConnectionState::Open, Err::BadState, "connection not OPEN");

  abort_unless(packet.timeout_height == 0 || l.latest_height() < packet.timeout_height,
               Err::TimedOut, "height timeout");
  abort_unless(packet.timeout_timestamp == 0 ||
                   l.current_timestamp() < packet.timeout_timestamp,
               Err::TimedOut, "timestamp timeout");

  abort_unless(verify_packet_data(l, conn, proof_height, proof, packet), Err::ProofFailure,
               "packet commitment");

  if (!acknowledgement.empty() || chan.ordering == ChannelOrder::Unordered) {
    l.ibc_set(ack_path, hash_bytes(sha256(acknowledgement)));
    auto ev = packet_event(EventKind::WriteAck, packet);
    ev.ack = acknowledgement;
    l.emit_event(std::move(ev));
  }

  auto recv_ev = packet_event(EventKind::RecvPacket, packet);
  recv_ev.attrs["ordering"] = std::string(channel_order_name(chan.ordering));
  recv_ev.attrs["ack_written"] =
      (!acknowledgement.empty() || chan.ordering == ChannelOrder::Unordered) ? "1" : "0";

  if (chan.ordering == ChannelOrder::Ordered) {
    auto seq_path = paths::next_sequence_recv(packet.dest_port, packet.dest_channel);
    auto next_seq = sequence_or_abort(l, seq_path);
    abort_unless(packet.sequence == next_seq, Err::OutOfOrder,
                 "expected " + std::to_string(next_seq) + " got " +
                     std::to_string(packet.sequence));
    l.ibc_set(seq_path, encode_sequence(next_seq + 1));
  }
  l.emit_event(std::move(recv_ev));
}

void acknowledge_packet(Ledger& l, const Packet& packet, const Bytes& acknowledgement,
                        const CommitmentProof& proof, std::uint64_t proof_height,
                        const Bytes& capability) {
  auto chan = channel_or_abort(l, packet.source_port, packet.source_channel);
  abort_unless(chan.state == ChannelState::Open, Err::ChannelNotOpen,
               std::string(channel_state_name(chan.state)));
  authenticate(l, paths::channel_capability(packet.source_port, packet.source_channel),
               capability);
  abort_unless(packet.dest_port == chan.counterparty_port_id, Err::WrongCounterparty,
               packet.dest_port);
  abort_unless(packet.dest_channel == chan.counterparty_channel_id, Err::WrongCounterparty,
               packet.dest_channel);
  auto conn = connection_or_abort(l, chan.connection_hops[0]);
  abort_unless(conn.state == ConnectionState::Open, Err::BadState, "connection not OPEN");

  auto commitment_path = paths::packet_commitment(packet.source_port, packet.source_channel,
                                                  packet.sequence);
  auto stored = l.ibc_get(commitment_path);
  abort_unless(stored.has_value(), Err::NoCommitment, std::to_string(packet.sequence));
  abort_unless(*stored == hash_bytes(packet_commitment(packet)), Err::CommitmentMismatch,
               std::to_string(packet.sequence));

  abort_unless(verify_packet_acknowledgement(l, conn, proof_height, proof, packet,
                                             acknowledgement),
               Err::ProofFailure, "acknowledgement");

  if (chan.ordering == ChannelOrder::Ordered) {
    auto seq_path = paths::next_sequence_ack(packet.source_port, packet.source_channel);
    auto next_seq = sequence_or_abort(l, seq_path);
    abort_unless(packet.sequence == next_seq, Err::WrongAckSequence,
                 "expected " + std::to_string(next_seq));
    l.ibc_set(seq_path, encode_sequence(next_seq + 1));
  }

  l.ibc_del(commitment_path);
  auto ev = packet_event(EventKind::AcknowledgePacket, packet);
  ev.ack = acknowledgement;
  l.emit_event(std::move(ev));
}

namespace {

void check_commitment(const Ledger& l, const Packet& packet) {
  auto stored = l.ibc_get(
      paths::packet_commitment(packet.source_port, packet.source_channel, packet.sequence));
  abort_unless(stored.has_value(), Err::NoCommitment, std::to_string(packet.sequence));
  abort_unless(*stored == hash_bytes(packet_commitment(packet)), Err::CommitmentMismatch,
               std::to_string(packet.sequence));
}

void verify_unreceived(const Ledger& l, const ConnectionEnd& conn, const ChannelEnd& chan,
                       const Packet& packet, const CommitmentProof& proof,
                       std::uint64_t proof_height,
                       std::optional<std::uint64_t> next_sequence_recv) {
  if (chan.ordering == ChannelOrder::Ordered) {
    abort_unless(next_sequence_recv.has_value(), Err::ProofFailure,
                 "missing next sequence recv");
    abort_unless(*next_sequence_recv <= packet.sequence, Err::PacketWasReceived,
                 std::to_string(*next_sequence_recv));
    abort_unless(verify_next_sequence_recv(l, conn, proof_height, proof, packet.dest_port,
                                           packet.dest_channel, *next_sequence_recv),
                 Err::ProofFailure, "next sequence recv");
  } else {
    abort_unless(verify_packet_acknowledgement_absence(l, conn, proof_height, proof, packet),
                 Err::ProofFailure, "acknowledgement absence");
  }
}

}  // namespace

void timeout_packet(Ledger& l, const Packet& packet, const CommitmentProof& proof,
                    std::uint64_t proof_height,
                    std::optional<std::uint64_t> next_sequence_recv, const Bytes& capability) {
  auto chan = channel_or_abort(l, packet.source_port, packet.source_channel);
  abort_unless(chan.state == ChannelState::Open, Err::ChannelNotOpen,
               std::string(channel_state_name(chan.state)));
  authenticate(l, paths::channel_capability(packet.source_port, packet.source_channel),
               capability);
  abort_unless(packet.dest_channel == chan.counterparty_channel_id, Err::WrongCounterparty,
               packet.dest_channel);
  auto conn = connection_or_abort(l, chan.connection_hops[0]);
  abort_unless(packet.dest_port == chan.counterparty_port_id, Err::WrongCounterparty,
               packet.dest_port);

  // The timeout must be proven on the recipient: either the proof height
  // itself passed the height bound, or the destination clock at that height
  // passed the timestamp bound.
  bool height_passed = packet.timeout_height > 0 && proof_height >= packet.timeout_height;
  bool time_passed =
      packet.timeout_timestamp > 0 &&
      timestamp_at_height_via_client(l, conn, proof_height) > packet.timeout_timestamp;
  abort_unless(height_passed || time_passed, Err::NotYetTimedOut,
               std::to_string(proof_height));

  check_commitment(l, packet);
  verify_unreceived(l, conn, chan, packet, proof, proof_height, next_sequence_recv);

  l.ibc_del(paths::packet_commitment(packet.source_port, packet.source_channel,
                                     packet.sequence));
  l.emit_event(packet_event(EventKind::TimeoutPacket, packet));

  if (chan.ordering == ChannelOrder::Ordered) {
    chan.state = ChannelState::Closed;
    l.ibc_set(paths::channel(packet.source_port, packet.source_channel),
              encode_channel_end(chan));
    emit_channel_event(l, EventKind::ChannelClosed, packet.source_port, packet.source_channel,
                       chan);
  }
}

void timeout_on_close(Ledger& l, const Packet& packet, const CommitmentProof& proof_closed,
                      const CommitmentProof& proof_unreceived, std::uint64_t proof_height,
                      std::optional<std::uint64_t> next_sequence_recv,
                      const Bytes& capability) {
  // Unlike timeoutPacket, the local end may itself already be CLOSED.
  auto chan = channel_or_abort(l, packet.source_port, packet.source_channel);
  authenticate(l, paths::channel_capability(packet.source_port, packet.source_channel),
               capability);
  abort_unless(packet.dest_port == chan.counterparty_port_id, Err::WrongCounterparty,
               packet.dest_port);
  abort_unless(packet.dest_channel == chan.counterparty_channel_id, Err::WrongCounterparty,
               packet.dest_channel);
  auto conn = connection_or_abort(l, chan.connection_hops[0]);

  check_commitment(l, packet);

  ChannelEnd expected{ChannelState::Closed, chan.ordering, packet.source_port,
                      packet.source_channel, {conn.counterparty_connection_id}, chan.version};
  abort_unless(verify_channel_state(l, conn, proof_height, proof_closed,
                                    chan.counterparty_port_id, chan.counterparty_channel_id,
                                    expected),
               Err::ChannelNotClosed, "counterparty end not provably CLOSED");

  verify_unreceived(l, conn, chan, packet, proof_unreceived, proof_height, next_sequence_recv);

  l.ibc_del(paths::packet_commitment(packet.source_port, packet.source_channel,
                                     packet.sequence));
  l.emit_event(packet_event(EventKind::TimeoutOnClose, packet));
}

void cleanup_packet(Ledger& l, const Packet& packet, const CommitmentProof& proof,
                    std::uint64_t proof_height,
                    const std::variant<std::uint64_t, Bytes>& next_sequence_recv_or_ack,
                    const Bytes& capability) {
  auto chan = channel_or_abort(l, packet.source_port, packet.source_channel);
  abort_unless(chan.state == ChannelState::Open, Err::ChannelNotOpen,
               std::string(channel_state_name(chan.state)));
  authenticate(l, paths::channel_capability(packet.source_port, packet.source_channel),
               capability);
  abort_unless(packet.dest_channel == chan.counterparty_channel_id, Err::WrongCounterparty,
               packet.dest_channel);
  auto conn = connection_or_abort(l, chan.connection_hops[0]);
  abort_unless(packet.dest_port == chan.counterparty_port_id, Err::WrongCounterparty,
               packet.dest_port);

  check_commitment(l, packet);

  if (chan.ordering == ChannelOrder::Ordered) {
    const auto* nsr = std::get_if<std::uint64_t>(&next_sequence_recv_or_ack);
    abort_unless(nsr != nullptr, Err::NotYetProcessed, "expected next sequence recv");
    abort_unless(*nsr > packet.sequence, Err::NotYetProcessed, std::to_string(*nsr));
    abort_unless(verify_next_sequence_recv(l, conn, proof_height, proof, packet.dest_port,
                                           packet.dest_channel, *nsr),
                 Err::ProofFailure, "next sequence recv");
  } else {
    const auto* ack = std::get_if<Bytes>(&next_sequence_recv_or_ack);
    abort_unless(ack != nullptr, Err::NotYetProcessed, "expected acknowledgement");
    abort_unless(verify_packet_acknowledgement(l, conn, proof_height, proof, packet, *ack),
                 Err::ProofFailure, "acknowledgement");
  }

  l.ibc_del(paths::packet_commitment(packet.source_port, packet.source_channel,
                                     packet.sequence));
  l.emit_event(packet_event(EventKind::CleanupPacket, packet));
}

}  // namespace ibc::handler
