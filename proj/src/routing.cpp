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

#include "ibc/routing.hpp"

#include "ibc/errors.hpp"
#include "ibc/handler.hpp"
#include "ibc/keys.hpp"
#include "ibc/ledger.hpp"

namespace ibc {

void RoutingModule::register_module(Ledger& l, const std::string& module_id,
                                    const std::string& port_id, const std::string& version,
                                    ModuleCallbacks callbacks) {
  abort_unless(!ports_.count(port_id), Err::PortAlreadyBound, port_id);
  auto capability = l.bind_port(module_id, port_id);
  ports_[port_id] = PortEntry{module_id, version, std::move(capability), std::move(callbacks)};
}

const RoutingModule::PortEntry& RoutingModule::entry_or_abort(const std::string& port_id) const {
  auto it = ports_.find(port_id);
  abort_unless(it != ports_.end(), Err::UnknownPort, port_id);
  return it->second;
}

const RoutingModule::PortEntry& RoutingModule::owned_entry_or_abort(
    const std::string& module_id, const std::string& port_id) const {
  const auto& entry = entry_or_abort(port_id);
  abort_unless(entry.module_id == module_id, Err::Unauthorized,
               module_id + " does not own port " + port_id);
  return entry;
}

Bytes RoutingModule::chan_open_init(Ledger& l, const std::string& module_id, ChannelOrder order,
                                    const std::vector<std::string>& connection_hops,
                                    const std::string& port_id, const std::string& channel_id,
                                    const std::string& counterparty_port_id,
                                    const std::string& counterparty_channel_id,
                                    const std::string& version) {
  const auto& entry = owned_entry_or_abort(module_id, port_id);
  return handler::chan_open_init(l, order, connection_hops, port_id, channel_id,
                                 counterparty_port_id, counterparty_channel_id, version,
                                 entry.port_capability);
}

void RoutingModule::chan_close_init(Ledger& l, const std::string& module_id,
                                    const std::string& port_id,
                                    const std::string& channel_id) {
  owned_entry_or_abort(module_id, port_id);
  auto cap = l.priv_get(paths::channel_capability(port_id, channel_id));
  abort_unless(cap.has_value(), Err::Unauthorized, "no channel capability");
  handler::chan_close_init(l, port_id, channel_id, *cap);
}

void RoutingModule::send_packet(Ledger& l, const std::string& module_id, const Packet& packet) {
  owned_entry_or_abort(module_id, packet.source_port);
  auto cap = l.priv_get(paths::channel_capability(packet.source_port, packet.source_channel));
  abort_unless(cap.has_value(), Err::Unauthorized, "no channel capability");
  handler::send_packet(l, packet, *cap);
}

namespace {

Bytes channel_cap_or_abort(const Ledger& l, const std::string& port,
                           const std::string& chan) {
  auto cap = l.priv_get(paths::channel_capability(port, chan));
  abort_unless(cap.has_value(), Err::Unauthorized, "no channel capability for " + port + "/" + chan);
  return *cap;
}

}  // namespace

void RoutingModule::dispatch(Ledger& l, const Datagram& d) {
  std::visit(
      [&](const auto& body) {
        using T = std::decay_t<decltype(body)>;

        if constexpr (std::is_same_v<T, ClientUpdateData>) {
          update_client(l, body.client_id, body.header);

        } else if constexpr (std::is_same_v<T, ClientMisbehaviourData>) {
          submit_misbehaviour(l, body.client_id, body.header_a, body.header_b);

        } else if constexpr (std::is_same_v<T, ConnOpenInitData>) {
          handler::conn_open_init(l, body.identifier, body.desired_counterparty_id,
                                  body.counterparty_prefix, body.client_id,
                                  body.counterparty_client_id);

        } else if constexpr (std::is_same_v<T, ConnOpenTryData>) {
          handler::conn_open_try(l, body.desired_identifier, body.counterparty_connection_id,
                                 body.counterparty_prefix, body.counterparty_client_id,
                                 body.client_id, body.counterparty_versions, body.proof_init,
                                 body.proof_consensus, body.proof_height,
                                 body.consensus_height);

        } else if constexpr (std::is_same_v<T, ConnOpenAckData>) {
          handler::conn_open_ack(l, body.identifier, body.version, body.proof_try,
                                 body.proof_consensus, body.proof_height,
                                 body.consensus_height);

        } else if constexpr (std::is_same_v<T, ConnOpenConfirmData>) {
          handler::conn_open_confirm(l, body.identifier, body.proof_ack, body.proof_height);

        } else if constexpr (std::is_same_v<T, ChanOpenInitData>) {
          const auto& entry = entry_or_abort(body.port_id);
          handler::chan_open_init(l, body.order, body.connection_hops, body.port_id,
                                  body.channel_id, body.counterparty_port_id,
                                  body.counterparty_channel_id, body.version,
                                  entry.port_capability);

        } else if constexpr (std::is_same_v<T, ChanOpenTryData>) {
          const auto& entry = entry_or_abort(body.port_id);
          bool accepted = entry.callbacks.on_chan_open_try
                              ? entry.callbacks.on_chan_open_try(body.version,
                                                                 body.counterparty_version)
                              : (body.version == entry.version &&
                                 body.counterparty_version == entry.version);
          abort_unless(accepted, Err::IncompatibleVersion, body.version);
          handler::chan_open_try(l, body.order, body.connection_hops, body.port_id,
                                 body.channel_id, body.counterparty_port_id,
                                 body.counterparty_channel_id, body.version,
                                 body.counterparty_version, body.proof_init, body.proof_height,
                                 entry.port_capability);

        } else if constexpr (std::is_same_v<T, ChanOpenAckData>) {
          const auto& entry = entry_or_abort(body.port_id);
          bool accepted = entry.callbacks.on_chan_open_ack
                              ? entry.callbacks.on_chan_open_ack(body.counterparty_version)
                              : body.counterparty_version == entry.version;
          abort_unless(accepted, Err::IncompatibleVersion, body.counterparty_version);
          handler::chan_open_ack(l, body.port_id, body.channel_id, body.counterparty_version,
                                 body.proof_try, body.proof_height,
                                 channel_cap_or_abort(l, body.port_id, body.channel_id));

        } else if constexpr (std::is_same_v<T, ChanOpenConfirmData>) {
          const auto& entry = entry_or_abort(body.port_id);
          handler::chan_open_confirm(l, body.port_id, body.channel_id, body.proof_ack,
                                     body.proof_height,
                                     channel_cap_or_abort(l, body.port_id, body.channel_id));
          if (entry.callbacks.on_chan_open_confirm) {
            entry.callbacks.on_chan_open_confirm(body.port_id, body.channel_id);
          }

        } else if constexpr (std::is_same_v<T, ChanCloseInitData>) {
          const auto& entry = entry_or_abort(body.port_id);
          handler::chan_close_init(l, body.port_id, body.channel_id,
                                   channel_cap_or_abort(l, body.port_id, body.channel_id));
          if (entry.callbacks.on_chan_close) {
            entry.callbacks.on_chan_close(body.port_id, body.channel_id);
          }

        } else if constexpr (std::is_same_v<T, ChanCloseConfirmData>) {
          const auto& entry = entry_or_abort(body.port_id);
          handler::chan_close_confirm(l, body.port_id, body.channel_id, body.proof_init,
                                      body.proof_height,
                                      channel_cap_or_abort(l, body.port_id, body.channel_id));
          if (entry.callbacks.on_chan_close) {
            entry.callbacks.on_chan_close(body.port_id, body.channel_id);
          }

        } else if constexpr (std::is_same_v<T, RecvPacketData>) {
          const auto& entry = entry_or_abort(body.packet.dest_port);
          // the module computes the acknowledgement before the core handler
          // runs; an abort on either side reverts both
          Bytes ack;
          if (entry.callbacks.on_recv_packet) ack = entry.callbacks.on_recv_packet(body.packet);
          handler::recv_packet(l, body.packet, body.proof, body.proof_height, ack,
                               channel_cap_or_abort(l, body.packet.dest_port,
                                                    body.packet.dest_channel));

        } else if constexpr (std::is_same_v<T, AckPacketData>) {
          const auto& entry = entry_or_abort(body.packet.source_port);
          handler::acknowledge_packet(l, body.packet, body.acknowledgement, body.proof,
                                      body.proof_height,
                                      channel_cap_or_abort(l, body.packet.source_port,
                                                           body.packet.source_channel));
          if (entry.callbacks.on_acknowledge_packet) {
            entry.callbacks.on_acknowledge_packet(body.packet, body.acknowledgement);
          }

        } else if constexpr (std::is_same_v<T, TimeoutPacketData>) {
          const auto& entry = entry_or_abort(body.packet.source_port);
          handler::timeout_packet(l, body.packet, body.proof, body.proof_height,
                                  body.next_sequence_recv,
                                  channel_cap_or_abort(l, body.packet.source_port,
                                                       body.packet.source_channel));
          if (entry.callbacks.on_timeout_packet) entry.callbacks.on_timeout_packet(body.packet);

        } else if constexpr (std::is_same_v<T, TimeoutOnCloseData>) {
          const auto& entry = entry_or_abort(body.packet.source_port);
          handler::timeout_on_close(l, body.packet, body.proof_closed, body.proof_unreceived,
                                    body.proof_height, body.next_sequence_recv,
                                    channel_cap_or_abort(l, body.packet.source_port,
                                                         body.packet.source_channel));
          if (entry.callbacks.on_timeout_packet) entry.callbacks.on_timeout_packet(body.packet);

        } else if constexpr (std::is_same_v<T, CleanupPacketData>) {
          entry_or_abort(body.packet.source_port);
          handler::cleanup_packet(l, body.packet, body.proof, body.proof_height,
                                  body.next_sequence_recv_or_ack,
                                  channel_cap_or_abort(l, body.packet.source_port,
                                                       body.packet.source_channel));
        }
      },
      d.body);
}

}  // namespace ibc
