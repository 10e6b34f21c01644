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

#include "ibc/bytes.hpp"
#include "ibc/hash.hpp"
#include "ibc/proof.hpp"

namespace ibc {

class Ledger;

enum class ClientType : std::uint8_t { Loopback = 0, Solo = 1, Quorum = 2 };

std::string_view client_type_name(ClientType t);

/// Snapshot a client trusts at one height. signer_material is the 32-byte
/// signer-set digest for quorum clients, the 32-byte public key for solo
/// clients, and empty for loopback.
struct ConsensusState {
  CommitmentRoot root{};
  std::uint64_t timestamp = 0;
  Bytes signer_material;

  bool operator==(const ConsensusState&) const = default;
};

/// Canonical bit-exact encoding: clientType byte || 8-byte height || root ||
/// 8-byte timestamp || signer material. This is both the store value at the
/// consensus-state path and the format third-party introduction ships across
/// channels.
Bytes encode_consensus_state(ClientType type, std::uint64_t height, const ConsensusState& cs);

struct DecodedConsensusState {
  ClientType type;
  std::uint64_t height;
  ConsensusState state;
};
std::optional<DecodedConsensusState> decode_consensus_state(std::span<const std::uint8_t> in);

struct BlockSignature {
  std::uint32_t signer_index = 0;
  Bytes signature;

  bool operator==(const BlockSignature&) const = default;
};

struct Block {
  std::uint64_t height = 0;
  std::uint64_t timestamp = 0;
  CommitmentRoot app_root{};
  Hash prev_digest{};
  std::vector<BlockSignature> signatures;

  bool operator==(const Block&) const = default;
};

Bytes block_signing_bytes(const Block& b);
Hash block_digest(const Block& b);

/// Header for the simulated-quorum client: the block plus the signer set it
/// claims, self-certified against the trusted signer-set digest.
struct QuorumHeader {
  Block block;
  std::vector<Bytes> signer_pubkeys;
};

struct SoloHeader {
  std::uint64_t height = 0;
  std::uint64_t timestamp = 0;
  CommitmentRoot root{};
  Bytes signature;
};

Bytes solo_signing_bytes(std::uint64_t height, std::uint64_t timestamp,
                         const CommitmentRoot& root);

using Header = std::variant<QuorumHeader, SoloHeader>;

std::uint64_t header_height(const Header& h);
std::uint64_t header_timestamp(const Header& h);
Hash header_digest(const Header& h);

Hash signer_set_digest(const std::vector<Bytes>& pubkeys);

/// Client record stored at "clients/{id}".
struct ClientRecord {
  ClientType type = ClientType::Quorum;
  std::uint64_t latest_height = 0;
  std::uint64_t latest_timestamp = 0;
  std::uint64_t trusting_period = 0;
  bool frozen = false;
  std::uint64_t frozen_height = 0;
  Bytes solo_pubkey;                        // solo clients only
  std::vector<std::uint64_t> heights;       // retained consensus heights, ascending
};

Bytes encode_client_record(const ClientRecord& r);
std::optional<ClientRecord> decode_client_record(std::span<const std::uint8_t> in);

constexpr std::uint64_t kDefaultTrustingPeriod = 100;
constexpr std::uint64_t kClientRetention = 256;

// Client operations. All run against the host ledger's store, inside a
// transaction when reached through datagram dispatch.

void create_client(Ledger& l, const std::string& id, ClientType type,
                   std::uint64_t initial_height, const ConsensusState& initial,
                   std::uint64_t trusting_period = kDefaultTrustingPeriod);

void update_client(Ledger& l, const std::string& id, const Header& header);

void submit_misbehaviour(Ledger& l, const std::string& id, const Header& a, const Header& b);

std::optional<ClientRecord> client_record(const Ledger& l, const std::string& id);
ClientRecord client_record_or_abort(const Ledger& l, const std::string& id);
std::optional<ConsensusState> client_consensus_state(const Ledger& l, const std::string& id,
                                                     std::uint64_t height);

/// Proof checks through a client. Frozen clients reject heights at or after
/// the freeze height; missing consensus states abort with NoConsensusState.
/// The returned bool is the proof verdict itself.
bool client_verify_membership(const Ledger& l, const std::string& id, std::uint64_t height,
                              const std::string& counterparty_prefix, const std::string& path,
                              const Bytes& value, const CommitmentProof& proof);

bool client_verify_non_membership(const Ledger& l, const std::string& id, std::uint64_t height,
                                  const std::string& counterparty_prefix,
                                  const std::string& path, const CommitmentProof& proof);

}  // namespace ibc
