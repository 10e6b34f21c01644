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
#include <random>
#include <string>
#include <vector>

#include "ibc/datagram.hpp"
#include "ibc/ledger.hpp"

namespace ibc {

/// Byzantine behaviour knobs. Deterministic for a given seed: drops,
/// duplicates and reorders act on the pending list each cycle; corruption
/// flips one byte of packet data (proofs are left intact so commitment and
/// proof checks are what reject the datagram).
struct FaultProfile {
  double drop = 0.0;
  double dup = 0.0;
  double reorder = 0.0;
  double corrupt = 0.0;
  std::uint64_t seed = 0;
};

enum class RelayMode { EventBased, QueryBased };

struct RelayerConfig {
  std::string id;
  std::string ledger_a;
  std::string ledger_b;
  RelayMode mode = RelayMode::EventBased;
  std::uint32_t poll_every_n_blocks = 1;
  bool bundle = false;  // submit the whole cycle as one transaction
  FaultProfile faults;
};

struct SubmissionRecord {
  std::string relayer_id;
  DatagramKind kind;
  std::string target_ledger;
  std::string brief;
  bool ok = false;
  std::string abort_reason;
};

/// Which ledger each client tracks. Relayers are configured with this
/// topology knowledge; everything else is read from ledger state and events.
using ClientTargets = std::map<std::pair<std::string, std::string>, std::string>;

class Relayer {
 public:
  Relayer(RelayerConfig cfg, ClientTargets targets);

  const RelayerConfig& config() const { return cfg_; }

  /// All valid datagrams to submit on `dst`, computed from both ledgers'
  /// committed state, in dependency order: misbehaviour evidence, client
  /// updates, connection handshakes, channel handshakes and close confirms,
  /// packet receives, acknowledgements, timeouts, cleanups.
  std::vector<Datagram> pending_datagrams(const Ledger& src, const Ledger& dst);

  /// Timeout and timeout-on-close datagrams for packets `dst` sent towards
  /// `src`, provable against `src` state.
  std::vector<Datagram> track_timeouts(const Ledger& src, const Ledger& dst);

  /// One relay cycle over the pair: computes pending sets in both
  /// directions, applies the fault profile, and submits.
  std::vector<SubmissionRecord> relay_once(Ledger& a, Ledger& b);

 private:
  struct PacketRef {
    Packet packet;
    Bytes ack;           // WriteAck payload where applicable
    bool empty_ack = false;
  };

  bool tracks(const Ledger& owner, const std::string& client_id,
              const std::string& target) const;
  std::vector<Datagram> direction(const Ledger& src, const Ledger& dst);
  void apply_faults(std::vector<Datagram>& dgs);
  std::vector<SubmissionRecord> submit(Ledger& dst, const std::vector<Datagram>& dgs);

  RelayerConfig cfg_;
  ClientTargets targets_;
  std::mt19937_64 fault_rng_;
  std::uint64_t cycle_ = 0;
  // query-based mode: last relayed send sequence per src|port|channel
  std::map<std::string, std::uint64_t> query_cursor_;
};

}  // namespace ibc
