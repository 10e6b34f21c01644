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

#include "ibc/ledger.hpp"

#include <stdexcept>

#include "ibc/keys.hpp"

namespace ibc {

Ledger::Ledger(LedgerConfig cfg) : cfg_(std::move(cfg)), cap_rng_(cfg_.seed ^ 0x9e3779b97f4a7c15ull) {
  if (!valid_ledger_id(cfg_.id)) {
    throw std::invalid_argument("bad ledger id: " + cfg_.id);
  }
  if (cfg_.signer_count == 0) throw std::invalid_argument("ledger needs at least one signer");
  for (std::uint32_t i = 0; i < cfg_.signer_count; ++i) {
    signers_.push_back(derive_signer(cfg_.seed, i));
    signer_pubkeys_.push_back(signers_.back().public_key);
  }
  quorum_ = (2 * cfg_.signer_count) / 3 + 1;
}

// --- port system ---

Bytes Ledger::bind_port(const std::string& module_id, const std::string& port_id) {
  abort_unless(valid_identifier(port_id), Err::InvalidIdentifier, port_id);
  abort_unless(!port_owners_.count(port_id), Err::PortAlreadyBound, port_id);
  port_owners_[port_id] = module_id;
  return new_capability(paths::port(port_id));
}

void Ledger::release_port(const std::string& module_id, const std::string& port_id) {
  auto it = port_owners_.find(port_id);
  abort_unless(it != port_owners_.end() && it->second == module_id, Err::Unauthorized,
               "release of port " + port_id);
  port_owners_.erase(it);
  priv_del(paths::port(port_id));
}

std::optional<std::string> Ledger::port_owner(const std::string& port_id) const {
  if (auto it = port_owners_.find(port_id); it != port_owners_.end()) return it->second;
  return std::nullopt;
}

Bytes Ledger::new_capability(const std::string& path) {
  Bytes token(32);
  for (auto& b : token) b = static_cast<std::uint8_t>(cap_rng_());
  priv_set(path, token);
  return token;
}

bool Ledger::authenticate_capability(const std::string& path, const Bytes& capability) const {
  auto stored = priv_get(path);
  return stored.has_value() && *stored == capability && !capability.empty();
}

// --- provable sub-store ---

void Ledger::ibc_set(const std::string& path, Bytes value) {
  store_.set(cfg_.commitment_prefix + "/" + path, std::move(value));
}

std::optional<Bytes> Ledger::ibc_get(const std::string& path) const {
  return store_.get(cfg_.commitment_prefix + "/" + path);
}

void Ledger::ibc_del(const std::string& path) {
  store_.del(cfg_.commitment_prefix + "/" + path);
}

std::optional<Bytes> Ledger::ibc_get_committed(std::uint64_t height,
                                               const std::string& path) const {
  return store_.get_committed(height, cfg_.commitment_prefix + "/" + path);
}

std::vector<std::string> Ledger::committed_ibc_paths(const std::string& path_prefix) const {
  auto full = store_.committed_keys_with_prefix(cfg_.commitment_prefix + "/" + path_prefix);
  std::vector<std::string> out;
  out.reserve(full.size());
  for (auto& k : full) out.push_back(k.substr(cfg_.commitment_prefix.size() + 1));
  return out;
}

CommitmentProof Ledger::prove(std::uint64_t height, const std::string& path) const {
  return store_.prove_membership(height, cfg_.commitment_prefix + "/" + path);
}

CommitmentProof Ledger::prove_absence(std::uint64_t height, const std::string& path) const {
  return store_.prove_non_membership(height, cfg_.commitment_prefix + "/" + path);
}

// --- private state ---

void Ledger::priv_set(const std::string& key, Bytes value) { priv_[key] = std::move(value); }

std::optional<Bytes> Ledger::priv_get(const std::string& key) const {
  if (auto it = priv_.find(key); it != priv_.end()) return it->second;
  return std::nullopt;
}

void Ledger::priv_del(const std::string& key) { priv_.erase(key); }

// --- consensus ---

Block Ledger::make_block(std::uint64_t height, std::uint64_t timestamp) {
  Block b;
  b.height = height;
  b.timestamp = timestamp;
  b.app_root = store_.root_at(height);
  b.prev_digest = chain_.empty() ? Hash{} : block_digest(chain_.back());
  auto msg = block_signing_bytes(b);
  for (std::uint32_t i = 0; i < signers_.size(); ++i) {
    b.signatures.push_back({i, ed25519_sign(signers_[i].seed, msg)});
  }
  return b;
}

Block Ledger::produce_block() {
  abort_unless(!halted_, Err::LedgerHalted, cfg_.id);
  store_.commit();
  auto height = store_.latest_height();
  auto block = make_block(height, cfg_.genesis_time + height * cfg_.block_time_step);
  chain_.push_back(block);
  publish_pending_events(height);
  return block;
}

std::pair<Block, Block> Ledger::produce_equivocating_block() {
  abort_unless(!halted_, Err::LedgerHalted, cfg_.id);
  store_.commit();
  auto height = store_.latest_height();
  auto ts = cfg_.genesis_time + height * cfg_.block_time_step;
  auto block = make_block(height, ts);
  auto fork = make_block(height, ts + 1);  // same height, different content
  chain_.push_back(block);
  forks_.emplace_back(block, fork);
  publish_pending_events(height);
  return {block, fork};
}

void Ledger::publish_pending_events(std::uint64_t height) {
  for (auto& ev : block_events_) {
    ev.height = height;
    event_log_.push_back(std::move(ev));
  }
  block_events_.clear();
}

std::uint64_t Ledger::latest_height() const { return store_.latest_height(); }

std::uint64_t Ledger::current_timestamp() const {
  return chain_.empty() ? cfg_.genesis_time : chain_.back().timestamp;
}

std::uint64_t Ledger::timestamp_at(std::uint64_t height) const {
  if (height == 0) return cfg_.genesis_time;
  return block_at(height).timestamp;
}

CommitmentRoot Ledger::root_at(std::uint64_t height) const { return store_.root_at(height); }

const Block& Ledger::block_at(std::uint64_t height) const {
  abort_unless(height >= 1 && height <= chain_.size(), Err::HeightPruned,
               "block " + std::to_string(height));
  return chain_[height - 1];
}

ConsensusState Ledger::own_consensus_state(std::uint64_t height) const {
  ConsensusState cs;
  cs.signer_material = hash_bytes(own_signer_digest());
  if (height == 0) {
    cs.root = empty_map_root();
    cs.timestamp = cfg_.genesis_time;
    return cs;
  }
  abort_unless(height <= latest_height(), Err::HeightPruned, std::to_string(height));
  abort_unless(height + ProvableStore::kRetentionWindow > latest_height(), Err::HeightPruned,
               std::to_string(height));
  cs.root = root_at(height);
  cs.timestamp = timestamp_at(height);
  return cs;
}

QuorumHeader Ledger::header_for(std::uint64_t height) const {
  QuorumHeader h;
  h.block = block_at(height);
  h.signer_pubkeys = signer_pubkeys_;
  return h;
}

Hash Ledger::own_signer_digest() const { return signer_set_digest(signer_pubkeys_); }

// --- transactions ---

TxResult Ledger::submit_transaction(const std::vector<Datagram>& datagrams) {
  return run_transaction([&] {
    for (const auto& d : datagrams) router_.dispatch(*this, d);
  });
}

TxResult Ledger::run_transaction(const std::function<void()>& fn) {
  if (halted_) return {false, Err::LedgerHalted, std::string(err_name(Err::LedgerHalted))};
  if (in_tx_) {  // nested: let the outer transaction own rollback
    fn();
    return {};
  }
  auto store_snap = store_.pending_snapshot();
  auto priv_snap = priv_;
  auto events_mark = block_events_.size();
  in_tx_ = true;
  try {
    fn();
    in_tx_ = false;
    return {};
  } catch (const AbortError& e) {
    store_.restore_pending(std::move(store_snap));
    priv_ = std::move(priv_snap);
    block_events_.resize(events_mark);
    in_tx_ = false;
    return {false, e.code(), e.what()};
  }
}

void Ledger::emit_event(Event ev) { block_events_.push_back(std::move(ev)); }

Bytes Ledger::sign_with(std::uint32_t signer_index, std::span<const std::uint8_t> msg) const {
  if (signer_index >= signers_.size()) throw std::out_of_range("signer index");
  return ed25519_sign(signers_[signer_index].seed, msg);
}

}  // namespace ibc
