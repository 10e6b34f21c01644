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

#include "ibc/relayer.hpp"

#include <algorithm>

#include "ibc/handler.hpp"
#include "ibc/keys.hpp"

namespace ibc {

namespace {

/// Paths like "connections/{id}" (no deeper segments).
bool is_direct_child(const std::string& path, const std::string& prefix) {
  if (path.size() <= prefix.size() || path.compare(0, prefix.size(), prefix) != 0) return false;
  return path.find('/', prefix.size()) == std::string::npos;
}

std::optional<ClientRecord> committed_client_record(const Ledger& l, const std::string& id) {
  if (l.latest_height() == 0) return std::nullopt;
  auto raw = l.ibc_get_committed(l.latest_height(), paths::client(id));
  if (!raw) return std::nullopt;
  return decode_client_record(*raw);
}

std::optional<ConnectionEnd> committed_connection(const Ledger& l, const std::string& id) {
  if (l.latest_height() == 0) return std::nullopt;
  auto raw = l.ibc_get_committed(l.latest_height(), paths::connection(id));
  if (!raw) return std::nullopt;
  return decode_connection_end(*raw);
}

std::optional<ChannelEnd> committed_channel(const Ledger& l, const std::string& port,
                                            const std::string& chan) {
  if (l.latest_height() == 0) return std::nullopt;
  auto raw = l.ibc_get_committed(l.latest_height(), paths::channel(port, chan));
  if (!raw) return std::nullopt;
  return decode_channel_end(*raw);
}

std::optional<std::uint64_t> committed_sequence(const Ledger& l, const std::string& path) {
  if (l.latest_height() == 0) return std::nullopt;
  auto raw = l.ibc_get_committed(l.latest_height(), path);
  if (!raw) return std::nullopt;
  return decode_sequence(*raw);
}

bool committed_key_present(const Ledger& l, const std::string& path) {
  return l.latest_height() > 0 &&
         l.ibc_get_committed(l.latest_height(), path).has_value();
}

Header quorum_header(const Ledger& l, std::uint64_t height) {
  return Header{l.header_for(height)};
}

std::string chan_key(const std::string& ledger, const std::string& port,
                     const std::string& chan) {
  return ledger + "|" + port + "|" + chan;
}

}  // namespace

Relayer::Relayer(RelayerConfig cfg, ClientTargets targets)
    : cfg_(std::move(cfg)), targets_(std::move(targets)), fault_rng_(cfg_.faults.seed) {}

bool Relayer::tracks(const Ledger& owner, const std::string& client_id,
                     const std::string& target) const {
  auto it = targets_.find({owner.id(), client_id});
  return it != targets_.end() && it->second == target;
}

std::vector<Datagram> Relayer::pending_datagrams(const Ledger& src, const Ledger& dst) {
  return direction(src, dst);
}

std::vector<Datagram> Relayer::direction(const Ledger& src, const Ledger& dst) {
  std::vector<Datagram> out;
  if (src.latest_height() == 0 || dst.latest_height() == 0) return out;
  const std::uint64_t h = src.latest_height();

  // ---- misbehaviour evidence and client updates for dst's clients of src
  for (const auto& path : dst.committed_ibc_paths("clients/")) {
    if (!is_direct_child(path, "clients/")) continue;
    auto client_id = path.substr(std::string("clients/").size());
    if (!tracks(dst, client_id, src.id())) continue;
    auto rec = committed_client_record(dst, client_id);
    if (!rec) continue;
    if (!rec->frozen && !src.fork_evidence().empty()) {
      const auto& [block, fork] = src.fork_evidence().front();
      out.push_back(Datagram{ClientMisbehaviourData{
          client_id, Header{QuorumHeader{block, src.signer_pubkeys()}},
          Header{QuorumHeader{fork, src.signer_pubkeys()}}}});
      continue;  // no updates through a client about to freeze
    }
    if (!rec->frozen && rec->latest_height < h) {
      out.push_back(Datagram{ClientUpdateData{client_id, quorum_header(src, h)}});
    }
  }

  // ---- connection handshake continuations
  for (const auto& path : src.committed_ibc_paths("connections/")) {
    if (!is_direct_child(path, "connections/")) continue;
    auto conn_id = path.substr(std::string("connections/").size());
    auto end = committed_connection(src, conn_id);
    if (!end || !tracks(src, end->client_id, dst.id())) continue;

    auto cp = committed_connection(dst, end->counterparty_connection_id);
    auto src_client_of_dst = committed_client_record(src, end->client_id);
    if (!src_client_of_dst) continue;
    const std::uint64_t consensus_height = src_client_of_dst->latest_height;

    if (end->state == ConnectionState::Init &&
        (!cp || cp->state == ConnectionState::Init)) {
      ConnOpenTryData d;
      d.desired_identifier = end->counterparty_connection_id;
      d.counterparty_connection_id = conn_id;
      d.counterparty_prefix = src.commitment_prefix();
      d.counterparty_client_id = end->client_id;
      d.client_id = end->counterparty_client_id;
      d.counterparty_versions = handler::compatible_versions();
      d.proof_init = src.prove(h, paths::connection(conn_id));
      d.proof_consensus =
          src.prove(h, paths::client_consensus(end->client_id, consensus_height));
      d.proof_height = h;
      d.consensus_height = consensus_height;
      out.push_back(Datagram{std::move(d)});
    } else if (end->state == ConnectionState::TryOpen && cp &&
               (cp->state == ConnectionState::Init ||
                cp->state == ConnectionState::TryOpen)) {
      ConnOpenAckData d;
      d.identifier = end->counterparty_connection_id;
      d.version = end->version;
      d.proof_try = src.prove(h, paths::connection(conn_id));
      d.proof_consensus =
          src.prove(h, paths::client_consensus(end->client_id, consensus_height));
      d.proof_height = h;
      d.consensus_height = consensus_height;
      out.push_back(Datagram{std::move(d)});
    } else if (end->state == ConnectionState::Open && cp &&
               cp->state == ConnectionState::TryOpen) {
      ConnOpenConfirmData d;
      d.identifier = end->counterparty_connection_id;
      d.proof_ack = src.prove(h, paths::connection(conn_id));
      d.proof_height = h;
      out.push_back(Datagram{std::move(d)});
    }
  }

  // ---- channel handshake continuations and close confirms
  for (const auto& path : src.committed_ibc_paths("channelEnds/ports/")) {
    // channelEnds/ports/{port}/channels/{chan}
    auto rest = path.substr(std::string("channelEnds/ports/").size());
    auto slash = rest.find("/channels/");
    if (slash == std::string::npos) continue;
    auto port = rest.substr(0, slash);
    auto chan = rest.substr(slash + std::string("/channels/").size());
    auto end = committed_channel(src, port, chan);
    if (!end || end->connection_hops.size() != 1) continue;
    auto conn = committed_connection(src, end->connection_hops[0]);
    if (!conn || !tracks(src, conn->client_id, dst.id())) continue;

    auto cp = committed_channel(dst, end->counterparty_port_id, end->counterparty_channel_id);

    if (end->state == ChannelState::Init && (!cp || cp->state == ChannelState::Init)) {
      ChanOpenTryData d;
      d.order = end->ordering;
      d.connection_hops = {conn->counterparty_connection_id};
      d.port_id = end->counterparty_port_id;
      d.channel_id = end->counterparty_channel_id;
      d.counterparty_port_id = port;
      d.counterparty_channel_id = chan;
      d.version = end->version;
      d.counterparty_version = end->version;
      d.proof_init = src.prove(h, paths::channel(port, chan));
      d.proof_height = h;
      out.push_back(Datagram{std::move(d)});
    } else if (end->state == ChannelState::TryOpen && cp &&
               (cp->state == ChannelState::Init || cp->state == ChannelState::TryOpen)) {
      ChanOpenAckData d;
      d.port_id = end->counterparty_port_id;
      d.channel_id = end->counterparty_channel_id;
      d.counterparty_version = end->version;
      d.proof_try = src.prove(h, paths::channel(port, chan));
      d.proof_height = h;
      out.push_back(Datagram{std::move(d)});
    } else if (end->state == ChannelState::Open && cp &&
               cp->state == ChannelState::TryOpen) {
      ChanOpenConfirmData d;
      d.port_id = end->counterparty_port_id;
      d.channel_id = end->counterparty_channel_id;
      d.proof_ack = src.prove(h, paths::channel(port, chan));
      d.proof_height = h;
      out.push_back(Datagram{std::move(d)});
    } else if (end->state == ChannelState::Closed && cp && cp->state != ChannelState::Closed) {
      ChanCloseConfirmData d;
      d.port_id = end->counterparty_port_id;
      d.channel_id = end->counterparty_channel_id;
      d.proof_init = src.prove(h, paths::channel(port, chan));
      d.proof_height = h;
      out.push_back(Datagram{std::move(d)});
    }
  }

  // ---- packet receives: scan src send events towards dst
  std::map<std::string, std::map<std::uint64_t, Packet>> sends;  // per channel, by sequence
  for (const auto& ev : src.events()) {
    if (ev.kind != EventKind::SendPacket || !ev.packet) continue;
    const auto& p = *ev.packet;
    auto end = committed_channel(src, p.source_port, p.source_channel);
    if (!end || end->connection_hops.size() != 1) continue;
    auto conn = committed_connection(src, end->connection_hops[0]);
    if (!conn || !tracks(src, conn->client_id, dst.id())) continue;
    sends[chan_key(src.id(), p.source_port, p.source_channel)][p.sequence] = p;
  }

  for (auto& [key, by_seq] : sends) {
    for (auto& [seq, p] : by_seq) {
      // already terminal on src?
      if (!committed_key_present(
              src, paths::packet_commitment(p.source_port, p.source_channel, seq))) {
        continue;
      }
      if (cfg_.mode == RelayMode::QueryBased) {
        // poll nextSequenceSend and keep the last sequence relayed; the gap
        // is what still needs relaying
        auto cursor = query_cursor_.find(key);
        if (cursor != query_cursor_.end() && seq <= cursor->second) continue;
      }
      auto dest_end = committed_channel(dst, p.dest_port, p.dest_channel);
      if (!dest_end || dest_end->state != ChannelState::Open) continue;
      // timeout already passed on the destination: the receive would abort
      if (p.timeout_height > 0 && dst.latest_height() >= p.timeout_height) continue;
      if (p.timeout_timestamp > 0 && dst.current_timestamp() >= p.timeout_timestamp) continue;
      if (dest_end->ordering == ChannelOrder::Unordered) {
        if (committed_key_present(
                dst, paths::packet_acknowledgement(p.dest_port, p.dest_channel, seq))) {
          continue;  // already received
        }
      } else {
        auto nsr = committed_sequence(
            dst, paths::next_sequence_recv(p.dest_port, p.dest_channel));
        if (!nsr || seq < *nsr) continue;  // already received
      }
      RecvPacketData d;
      d.packet = p;
      d.proof = src.prove(h, paths::packet_commitment(p.source_port, p.source_channel, seq));
      d.proof_height = h;
      out.push_back(Datagram{std::move(d)});
      if (cfg_.mode == RelayMode::QueryBased) {
        auto& cur = query_cursor_[key];
        cur = std::max(cur, seq);
      }
    }
  }

  // ---- acknowledgements: dst-sent packets whose acks src wrote
  for (const auto& ev : src.events()) {
    if (ev.kind != EventKind::WriteAck || !ev.packet) continue;
    const auto& p = *ev.packet;
    auto end = committed_channel(src, p.dest_port, p.dest_channel);
    if (!end || end->connection_hops.size() != 1) continue;
    auto conn = committed_connection(src, end->connection_hops[0]);
    if (!conn || !tracks(src, conn->client_id, dst.id())) continue;
    // the commitment is deleted once the acknowledgement is relayed
    if (!committed_key_present(
            dst, paths::packet_commitment(p.source_port, p.source_channel, p.sequence))) {
      continue;
    }
    AckPacketData d;
    d.packet = p;
    d.acknowledgement = ev.ack;
    d.proof =
        src.prove(h, paths::packet_acknowledgement(p.dest_port, p.dest_channel, p.sequence));
    d.proof_height = h;
    out.push_back(Datagram{std::move(d)});
  }

  // ---- timeouts for dst-sent packets, proven on src
  auto timeouts = track_timeouts(src, dst);
  out.insert(out.end(), std::make_move_iterator(timeouts.begin()),
             std::make_move_iterator(timeouts.end()));

  // ---- cleanup of ordered empty-ack packets dst sent and src received
  for (const auto& ev : src.events()) {
    if (ev.kind != EventKind::RecvPacket || !ev.packet) continue;
    auto ack_written = ev.attrs.find("ack_written");
    if (ack_written == ev.attrs.end() || ack_written->second != "0") continue;
    const auto& p = *ev.packet;
    auto dst_end = committed_channel(dst, p.source_port, p.source_channel);
    if (!dst_end || dst_end->ordering != ChannelOrder::Ordered ||
        dst_end->state != ChannelState::Open) {
      continue;
    }
    auto conn = committed_connection(dst, dst_end->connection_hops[0]);
    if (!conn || !tracks(dst, conn->client_id, src.id())) continue;
    if (!committed_key_present(
            dst, paths::packet_commitment(p.source_port, p.source_channel, p.sequence))) {
      continue;
    }
    auto nsr = committed_sequence(src, paths::next_sequence_recv(p.dest_port, p.dest_channel));
    if (!nsr || *nsr <= p.sequence) continue;
    CleanupPacketData d;
    d.packet = p;
    d.proof = src.prove(h, paths::next_sequence_recv(p.dest_port, p.dest_channel));
    d.proof_height = h;
    d.next_sequence_recv_or_ack = *nsr;
    out.push_back(Datagram{std::move(d)});
  }

  return out;
}

std::vector<Datagram> Relayer::track_timeouts(const Ledger& src, const Ledger& dst) {
  // Tracked packets are reconstructed from dst's send events; a timeout
  // becomes relayable once src (the destination of those packets) passes the
  // packet's bound, or once the receiving end is provably closed.
  std::vector<Datagram> out;
  if (src.latest_height() == 0 || dst.latest_height() == 0) return out;
  const std::uint64_t h = src.latest_height();

  for (const auto& ev : dst.events()) {
    if (ev.kind != EventKind::SendPacket || !ev.packet) continue;
    const auto& p = *ev.packet;
    auto end = committed_channel(dst, p.source_port, p.source_channel);
    if (!end || end->connection_hops.size() != 1) continue;
    auto conn = committed_connection(dst, end->connection_hops[0]);
    if (!conn || !tracks(dst, conn->client_id, src.id())) continue;
    if (!committed_key_present(
            dst, paths::packet_commitment(p.source_port, p.source_channel, p.sequence))) {
      continue;  // already received+acked, timed out, or cleaned up
    }

    auto recv_end = committed_channel(src, p.dest_port, p.dest_channel);
    bool closed = recv_end && recv_end->state == ChannelState::Closed;
    bool height_passed = p.timeout_height > 0 && h >= p.timeout_height;
    bool time_passed =
        p.timeout_timestamp > 0 && src.timestamp_at(h) > p.timeout_timestamp;
    if (!closed && !height_passed && !time_passed) continue;

    std::optional<std::uint64_t> nsr;
    CommitmentProof unreceived;
    if (end->ordering == ChannelOrder::Ordered) {
      auto seq = committed_sequence(src, paths::next_sequence_recv(p.dest_port, p.dest_channel));
      if (!seq || *seq > p.sequence) continue;  // received; ack relay resolves it
      nsr = *seq;
      unreceived = src.prove(h, paths::next_sequence_recv(p.dest_port, p.dest_channel));
    } else {
      if (committed_key_present(
              src, paths::packet_acknowledgement(p.dest_port, p.dest_channel, p.sequence))) {
        continue;  // received; ack relay resolves it
      }
      unreceived = src.prove_absence(
          h, paths::packet_acknowledgement(p.dest_port, p.dest_channel, p.sequence));
    }

    if (closed) {
      TimeoutOnCloseData d;
      d.packet = p;
      d.proof_closed = src.prove(h, paths::channel(p.dest_port, p.dest_channel));
      d.proof_unreceived = std::move(unreceived);
      d.proof_height = h;
      d.next_sequence_recv = nsr;
      out.push_back(Datagram{std::move(d)});
    } else {
      // plain timeouts need the sending end still open
      if (end->state != ChannelState::Open) continue;
      TimeoutPacketData d;
      d.packet = p;
      d.proof = std::move(unreceived);
      d.proof_height = h;
      d.next_sequence_recv = nsr;
      out.push_back(Datagram{std::move(d)});
    }
  }
  return out;
}

void Relayer::apply_faults(std::vector<Datagram>& dgs) {
  const auto& f = cfg_.faults;
  if (f.drop == 0 && f.dup == 0 && f.reorder == 0 && f.corrupt == 0) return;

  auto chance = [&](double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    return std::uniform_real_distribution<double>(0.0, 1.0)(fault_rng_) < p;
  };

  std::vector<Datagram> shaped;
  for (auto& d : dgs) {
    if (chance(f.drop)) continue;
    shaped.push_back(d);
    if (chance(f.dup)) shaped.push_back(d);
  }
  if (chance(f.reorder)) {
    std::shuffle(shaped.begin(), shaped.end(), fault_rng_);
  }
  for (auto& d : shaped) {
    if (!chance(f.corrupt)) continue;
    if (auto* p = d.packet(); p && !p->data.empty()) {
      auto idx = fault_rng_() % p->data.size();
      auto bit = 1u << (fault_rng_() % 8);
      p->data[idx] ^= static_cast<std::uint8_t>(bit);
    }
  }
  dgs = std::move(shaped);
}

std::vector<SubmissionRecord> Relayer::submit(Ledger& dst, const std::vector<Datagram>& dgs) {
  std::vector<SubmissionRecord> records;
  if (dgs.empty()) return records;
  if (cfg_.bundle) {
    auto res = dst.submit_transaction(dgs);
    for (const auto& d : dgs) {
      records.push_back({cfg_.id, d.kind(), dst.id(), d.brief(), res.ok,
                         res.ok ? "" : res.reason});
    }
    return records;
  }
  for (const auto& d : dgs) {
    auto res = dst.submit_transaction({d});
    records.push_back(
        {cfg_.id, d.kind(), dst.id(), d.brief(), res.ok, res.ok ? "" : res.reason});
  }
  return records;
}

std::vector<SubmissionRecord> Relayer::relay_once(Ledger& a, Ledger& b) {
  std::vector<SubmissionRecord> records;
  if (cycle_++ % cfg_.poll_every_n_blocks != 0) return records;

  auto to_b = direction(a, b);
  apply_faults(to_b);
  auto r1 = submit(b, to_b);
  records.insert(records.end(), r1.begin(), r1.end());

  auto to_a = direction(b, a);
  apply_faults(to_a);
  auto r2 = submit(a, to_a);
  records.insert(records.end(), r2.begin(), r2.end());

  return records;
}

}  // namespace ibc
