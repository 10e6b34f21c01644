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

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "ibc/datagram.hpp"
#include "ibc/types.hpp"

namespace ibc {

class Ledger;

/// Application hooks invoked by the routing module inside the same
/// transaction as the core handler, so an abort on either side reverts both.
struct ModuleCallbacks {
  // Version negotiation; default policy accepts equal strings only.
  std::function<bool(const std::string& version, const std::string& counterparty_version)>
      on_chan_open_try;
  std::function<bool(const std::string& counterparty_version)> on_chan_open_ack;
  std::function<void(const std::string& port, const std::string& chan)> on_chan_open_confirm;
  std::function<void(const std::string& port, const std::string& chan)> on_chan_close;
  // Returns the acknowledgement bytes the core handler writes for the packet.
  std::function<Bytes(const Packet&)> on_recv_packet;
  std::function<void(const Packet&, const Bytes& ack)> on_acknowledge_packet;
  std::function<void(const Packet&)> on_timeout_packet;
};

/// Dispatch table mapping ports to module callbacks. Relayers submit
/// datagrams to the ledger, which routes each through here; modules reach the
/// handler through the module-facing calls which enforce port ownership.
class RoutingModule {
 public:
  void register_module(Ledger& l, const std::string& module_id, const std::string& port_id,
                       const std::string& version, ModuleCallbacks callbacks);

  bool port_registered(const std::string& port_id) const {
    return ports_.count(port_id) > 0;
  }

  /// Applies one datagram: core handler plus module callback, atomically
  /// within the enclosing transaction.
  void dispatch(Ledger& l, const Datagram& d);

  // Module-facing API; module_id must own the port involved.
  Bytes chan_open_init(Ledger& l, const std::string& module_id, ChannelOrder order,
                       const std::vector<std::string>& connection_hops,
                       const std::string& port_id, const std::string& channel_id,
                       const std::string& counterparty_port_id,
                       const std::string& counterparty_channel_id, const std::string& version);
  void chan_close_init(Ledger& l, const std::string& module_id, const std::string& port_id,
                       const std::string& channel_id);
  void send_packet(Ledger& l, const std::string& module_id, const Packet& packet);

 private:
  struct PortEntry {
    std::string module_id;
    std::string version;
    Bytes port_capability;
    ModuleCallbacks callbacks;
  };

  const PortEntry& entry_or_abort(const std::string& port_id) const;
  const PortEntry& owned_entry_or_abort(const std::string& module_id,
                                        const std::string& port_id) const;

  std::map<std::string, PortEntry> ports_;
};

}  // namespace ibc
