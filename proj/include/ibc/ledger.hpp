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
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ibc/client.hpp"
#include "ibc/crypto.hpp"
#include "ibc/datagram.hpp"
#include "ibc/errors.hpp"
#include "ibc/event.hpp"
#include "ibc/routing.hpp"
#include "ibc/store.hpp"

namespace ibc {

struct LedgerConfig {
  std::string id;
  std::uint32_t signer_count = 4;
  std::uint64_t block_time_step = 1;
  std::uint64_t genesis_time = 1;
  std::string commitment_prefix = "ibc";
  std::uint64_t seed = 0;  // signer keys and capability tokens derive from this
};

struct TxResult {
  bool ok = true;
  Err code = Err::InvalidKey;
  std::string reason;
};

/// Simulated host ledger: provable IBC sub-store, private module state, port
/// system with unforgeable capability tokens, atomic transactions, quorum
/// block production on a logical clock, and an append-only event log.
///
/// Single-threaded internally; the scheduler drives ledgers one at a time.
class Ledger {
 public:
  explicit Ledger(LedgerConfig cfg);

  Ledger(const Ledger&) = delete;
  Ledger& operator=(const Ledger&) = delete;

  const std::string& id() const { return cfg_.id; }
  const std::string& commitment_prefix() const { return cfg_.commitment_prefix; }
  RoutingModule& router() { return router_; }

  // --- port system ---
  Bytes bind_port(const std::string& module_id, const std::string& port_id);
  void release_port(const std::string& module_id, const std::string& port_id);
  std::optional<std::string> port_owner(const std::string& port_id) const;
  Bytes new_capability(const std::string& path);
  bool authenticate_capability(const std::string& path, const Bytes& capability) const;

  // --- provable IBC sub-store (commitment prefix applied exactly once) ---
  void ibc_set(const std::string& path, Bytes value);
  std::optional<Bytes> ibc_get(const std::string& path) const;
  void ibc_del(const std::string& path);
  std::optional<Bytes> ibc_get_committed(std::uint64_t height, const std::string& path) const;
  std::vector<std::string> committed_ibc_paths(const std::string& path_prefix) const;
  CommitmentProof prove(std::uint64_t height, const std::string& path) const;
  CommitmentProof prove_absence(std::uint64_t height, const std::string& path) const;

  // --- private (non-provable) state; transactional like the store ---
  void priv_set(const std::string& key, Bytes value);
  std::optional<Bytes> priv_get(const std::string& key) const;
  void priv_del(const std::string& key);
  const std::map<std::string, Bytes>& priv_state() const { return priv_; }

  // --- consensus ---
  Block produce_block();
  /// Byzantine fault injection: produces the regular block plus a second
  /// quorum-signed block at the same height with different content; the pair
  /// is retained as equivocation evidence.
  std::pair<Block, Block> produce_equivocating_block();

  std::uint64_t latest_height() const;
  std::uint64_t current_timestamp() const;  // timestamp of the latest block
  std::uint64_t timestamp_at(std::uint64_t height) const;
  CommitmentRoot root_at(std::uint64_t height) const;
  const Block& block_at(std::uint64_t height) const;

  /// Own historical snapshot used by counterparties' quorum clients; height 0
  /// yields the genesis consensus state.
  ConsensusState own_consensus_state(std::uint64_t height) const;
  QuorumHeader header_for(std::uint64_t height) const;
  const std::vector<Bytes>& signer_pubkeys() const { return signer_pubkeys_; }
  Hash own_signer_digest() const;
  std::uint32_t quorum() const { return quorum_; }
  const std::vector<std::pair<Block, Block>>& fork_evidence() const { return forks_; }

  // --- transactions ---
  TxResult submit_transaction(const std::vector<Datagram>& datagrams);
  /// Runs arbitrary handler calls atomically (test and action entry point).
  TxResult run_transaction(const std::function<void()>& fn);

  void emit_event(Event ev);
  const std::vector<Event>& events() const { return event_log_; }

  void halt() { halted_ = true; }
  void resume() { halted_ = false; }
  bool halted() const { return halted_; }

  /// Signs a message with signer 0's key (solo-machine test support).
  Bytes sign_with(std::uint32_t signer_index, std::span<const std::uint8_t> msg) const;

 private:
  Block make_block(std::uint64_t height, std::uint64_t timestamp);
  void publish_pending_events(std::uint64_t height);

  LedgerConfig cfg_;
  ProvableStore store_;
  std::map<std::string, Bytes> priv_;
  std::map<std::string, std::string> port_owners_;
  RoutingModule router_;

  std::vector<SignerKey> signers_;
  std::vector<Bytes> signer_pubkeys_;
  std::uint32_t quorum_ = 0;

  std::vector<Block> chain_;
  std::vector<std::pair<Block, Block>> forks_;
  std::vector<Event> event_log_;    // committed, height-stamped
  std::vector<Event> block_events_; // successful txs awaiting block production
  std::mt19937_64 cap_rng_;
  bool halted_ = false;
  bool in_tx_ = false;
};

}  // namespace ibc
