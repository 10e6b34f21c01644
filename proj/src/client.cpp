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

#include "ibc/client.hpp"

#include <algorithm>
#include <set>

#include "ibc/crypto.hpp"
#include "ibc/errors.hpp"
#include "ibc/keys.hpp"
#include "ibc/ledger.hpp"
#include "ibc/types.hpp"

namespace ibc {

std::string_view client_type_name(ClientType t) {
  switch (t) {
    case ClientType::Loopback: return "loopback";
    case ClientType::Solo: return "solo";
    case ClientType::Quorum: return "quorum";
  }
  return "?";
}

Bytes encode_consensus_state(ClientType type, std::uint64_t height, const ConsensusState& cs) {
  Encoder enc;
  enc.put_u8(static_cast<std::uint8_t>(type));
  enc.put_u64(height);
  enc.put_raw(cs.root);
  enc.put_u64(cs.timestamp);
  enc.put_raw(cs.signer_material);
  return enc.take();
}

std::optional<DecodedConsensusState> decode_consensus_state(std::span<const std::uint8_t> in) {
  try {
    Decoder dec(in);
    DecodedConsensusState out;
    auto t = dec.u8();
    if (t > 2) return std::nullopt;
    out.type = static_cast<ClientType>(t);
    out.height = dec.u64();
    auto root = dec.raw(32);
    std::copy(root.begin(), root.end(), out.state.root.begin());
    out.state.timestamp = dec.u64();
    out.state.signer_material = dec.raw(dec.remaining());
    return out;
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

Bytes block_signing_bytes(const Block& b) {
  Encoder enc;
  enc.put_u64(b.height);
  enc.put_u64(b.timestamp);
  enc.put_raw(b.app_root);
  enc.put_raw(b.prev_digest);
  return enc.take();
}

Hash block_digest(const Block& b) { return sha256(block_signing_bytes(b)); }

Bytes solo_signing_bytes(std::uint64_t height, std::uint64_t timestamp,
                         const CommitmentRoot& root) {
  Encoder enc;
  enc.put_str("solo-header");
  enc.put_u64(height);
  enc.put_u64(timestamp);
  enc.put_raw(root);
  return enc.take();
}

std::uint64_t header_height(const Header& h) {
  if (const auto* q = std::get_if<QuorumHeader>(&h)) return q->block.height;
  return std::get<SoloHeader>(h).height;
}

std::uint64_t header_timestamp(const Header& h) {
  if (const auto* q = std::get_if<QuorumHeader>(&h)) return q->block.timestamp;
  return std::get<SoloHeader>(h).timestamp;
}

Hash header_digest(const Header& h) {
  if (const auto* q = std::get_if<QuorumHeader>(&h)) return block_digest(q->block);
  const auto& s = std::get<SoloHeader>(h);
  return sha256(solo_signing_bytes(s.height, s.timestamp, s.root));
}

Hash signer_set_digest(const std::vector<Bytes>& pubkeys) {
  Encoder enc;
  enc.put_u32(static_cast<std::uint32_t>(pubkeys.size()));
  for (const auto& pk : pubkeys) enc.put_bytes(pk);
  return sha256(enc.take());
}

Bytes encode_client_record(const ClientRecord& r) {
  Encoder enc;
  enc.put_u8(static_cast<std::uint8_t>(r.type));
  enc.put_u64(r.latest_height);
  enc.put_u64(r.latest_timestamp);
  enc.put_u64(r.trusting_period);
  enc.put_u8(r.frozen ? 1 : 0);
  enc.put_u64(r.frozen_height);
  enc.put_bytes(r.solo_pubkey);
  enc.put_u32(static_cast<std::uint32_t>(r.heights.size()));
  for (auto h : r.heights) enc.put_u64(h);
  return enc.take();
}

std::optional<ClientRecord> decode_client_record(std::span<const std::uint8_t> in) {
  try {
    Decoder dec(in);
    ClientRecord r;
    auto t = dec.u8();
    if (t > 2) return std::nullopt;
    r.type = static_cast<ClientType>(t);
    r.latest_height = dec.u64();
    r.latest_timestamp = dec.u64();
    r.trusting_period = dec.u64();
    r.frozen = dec.u8() != 0;
    r.frozen_height = dec.u64();
    r.solo_pubkey = dec.bytes();
    auto n = dec.u32();
    for (std::uint32_t i = 0; i < n; ++i) r.heights.push_back(dec.u64());
    if (!dec.done()) return std::nullopt;
    return r;
  } catch (const std::out_of_range&) {
    return std::nullopt;
  }
}

namespace {

void store_record(Ledger& l, const std::string& id, const ClientRecord& r) {
  l.ibc_set(paths::client(id), encode_client_record(r));
}

void store_consensus(Ledger& l, const std::string& id, ClientType type, std::uint64_t height,
                     const ConsensusState& cs) {
  l.ibc_set(paths::client_consensus(id, height), encode_consensus_state(type, height, cs));
}

/// Quorum validity predicate: the claimed signer set must match the trusted
/// digest and a quorum of distinct signers must have signed the block.
bool quorum_header_valid(const QuorumHeader& h, const Bytes& trusted_digest) {
  if (trusted_digest.size() != 32) return false;
  if (hash_bytes(signer_set_digest(h.signer_pubkeys)) != trusted_digest) return false;
  const std::uint32_t k = static_cast<std::uint32_t>(h.signer_pubkeys.size());
  if (k == 0) return false;
  const std::uint32_t quorum = (2 * k) / 3 + 1;
  auto msg = block_signing_bytes(h.block);
  std::set<std::uint32_t> seen;
  for (const auto& sig : h.block.signatures) {
    if (sig.signer_index >= k || seen.count(sig.signer_index)) continue;
    if (ed25519_verify(h.signer_pubkeys[sig.signer_index], msg, sig.signature)) {
      seen.insert(sig.signer_index);
    }
  }
  return seen.size() >= quorum;
}

bool solo_header_valid(const SoloHeader& h, const Bytes& pubkey) {
  return ed25519_verify(pubkey, solo_signing_bytes(h.height, h.timestamp, h.root), h.signature);
}

bool header_valid_for(const ClientRecord& rec, const ConsensusState& trusted, const Header& h) {
  switch (rec.type) {
    case ClientType::Quorum: {
      const auto* q = std::get_if<QuorumHeader>(&h);
      return q && quorum_header_valid(*q, trusted.signer_material);
    }
    case ClientType::Solo: {
      const auto* s = std::get_if<SoloHeader>(&h);
      return s && solo_header_valid(*s, rec.solo_pubkey);
    }
    case ClientType::Loopback:
      return false;  // loopback clients take no headers
  }
  return false;
}

}  // namespace

std::optional<ClientRecord> client_record(const Ledger& l, const std::string& id) {
  auto raw = l.ibc_get(paths::client(id));
  if (!raw) return std::nullopt;
  return decode_client_record(*raw);
}

ClientRecord client_record_or_abort(const Ledger& l, const std::string& id) {
  auto rec = client_record(l, id);
  abort_unless(rec.has_value(), Err::NoSuchClient, id);
  return *rec;
}

std::optional<ConsensusState> client_consensus_state(const Ledger& l, const std::string& id,
                                                     std::uint64_t height) {
  auto raw = l.ibc_get(paths::client_consensus(id, height));
  if (!raw) return std::nullopt;
  auto dec = decode_consensus_state(*raw);
  if (!dec) return std::nullopt;
  return dec->state;
}

void create_client(Ledger& l, const std::string& id, ClientType type,
                   std::uint64_t initial_height, const ConsensusState& initial,
                   std::uint64_t trusting_period) {
  abort_unless(valid_identifier(id), Err::InvalidIdentifier, id);
  abort_unless(!l.ibc_get(paths::client(id)).has_value(), Err::IdentifierInUse, id);

  switch (type) {
    case ClientType::Quorum:
      abort_unless(initial.signer_material.size() == 32, Err::MalformedState,
                   "quorum client requires a 32-byte signer-set digest");
      break;
    case ClientType::Solo:
      abort_unless(initial.signer_material.size() == 32, Err::MalformedState,
                   "solo client requires a 32-byte public key");
      break;
    case ClientType::Loopback:
      abort_unless(initial.signer_material.empty(), Err::MalformedState,
                   "loopback client carries no signer material");
      break;
  }

  ClientRecord rec;
  rec.type = type;
  rec.latest_height = initial_height;
  rec.latest_timestamp = initial.timestamp;
  rec.trusting_period = trusting_period;
  if (type == ClientType::Solo) rec.solo_pubkey = initial.signer_material;
  rec.heights.push_back(initial_height);
  store_record(l, id, rec);
  store_consensus(l, id, type, initial_height, initial);
}

void update_client(Ledger& l, const std::string& id, const Header& header) {
  auto rec = client_record_or_abort(l, id);
  abort_unless(!rec.frozen, Err::Frozen, id);

  const auto h = header_height(header);
  abort_unless(h > rec.latest_height, Err::StaleHeader,
               "height " + std::to_string(h) + " <= " + std::to_string(rec.latest_height));

  auto trusted = client_consensus_state(l, id, rec.latest_height);
  abort_unless(trusted.has_value(), Err::NoConsensusState, id);
  abort_unless(header_valid_for(rec, *trusted, header), Err::InvalidHeader, id);

  const auto ts = header_timestamp(header);
  abort_unless(ts >= rec.latest_timestamp, Err::InvalidHeader, "timestamp decreased");
  abort_unless(ts - rec.latest_timestamp <= rec.trusting_period, Err::Expired,
               "no header within trusting period");

  ConsensusState cs;
  cs.timestamp = ts;
  if (const auto* q = std::get_if<QuorumHeader>(&header)) {
    cs.root = q->block.app_root;
    cs.signer_material = trusted->signer_material;  // static signer set
  } else {
    const auto& s = std::get<SoloHeader>(header);
    cs.root = s.root;
    cs.signer_material = rec.solo_pubkey;
  }

  rec.latest_height = h;
  rec.latest_timestamp = ts;
  rec.heights.push_back(h);
  // retention: keep at most kClientRetention heights, all within the window
  while (!rec.heights.empty() &&
         (rec.heights.size() > kClientRetention ||
          rec.heights.front() + kClientRetention <= h)) {
    l.ibc_del(paths::client_consensus(id, rec.heights.front()));
    rec.heights.erase(rec.heights.begin());
  }

  store_record(l, id, rec);
  store_consensus(l, id, rec.type, h, cs);
}

void submit_misbehaviour(Ledger& l, const std::string& id, const Header& a, const Header& b) {
  auto rec = client_record_or_abort(l, id);
  abort_unless(!rec.frozen, Err::Frozen, id);

  const auto ha = header_height(a);
  abort_unless(ha == header_height(b), Err::NotMisbehaviour, "heights differ");
  abort_unless(header_digest(a) != header_digest(b), Err::NotMisbehaviour,
               "headers identical");

  auto trusted = client_consensus_state(l, id, rec.latest_height);
  abort_unless(trusted.has_value(), Err::NoConsensusState, id);
  abort_unless(header_valid_for(rec, *trusted, a) && header_valid_for(rec, *trusted, b),
               Err::NotMisbehaviour, "evidence header invalid");

  rec.frozen = true;
  rec.frozen_height = ha;
  store_record(l, id, rec);

  Event ev;
  ev.kind = EventKind::ClientFrozen;
  ev.attrs["client"] = id;
  ev.attrs["height"] = std::to_string(ha);
  l.emit_event(std::move(ev));
}

bool client_verify_membership(const Ledger& l, const std::string& id, std::uint64_t height,
                              const std::string& counterparty_prefix, const std::string& path,
                              const Bytes& value, const CommitmentProof& proof) {
  auto rec = client_record_or_abort(l, id);
  abort_unless(!rec.frozen || height < rec.frozen_height, Err::Frozen, id);

  if (rec.type == ClientType::Loopback) {
    // reads local state directly; the proof is ignored
    auto local = l.ibc_get_committed(height, path);
    return local.has_value() && *local == value;
  }

  auto cs = client_consensus_state(l, id, height);
  abort_unless(cs.has_value(), Err::NoConsensusState,
               id + " at height " + std::to_string(height));

  if (proof.kind != CommitmentProof::Kind::Membership) return false;
  if (proof.key != counterparty_prefix + "/" + path) return false;
  if (proof.value != value) return false;
  return verify_proof(cs->root, proof);
}

bool client_verify_non_membership(const Ledger& l, const std::string& id, std::uint64_t height,
                                  const std::string& counterparty_prefix,
                                  const std::string& path, const CommitmentProof& proof) {
  auto rec = client_record_or_abort(l, id);
  abort_unless(!rec.frozen || height < rec.frozen_height, Err::Frozen, id);

  if (rec.type == ClientType::Loopback) {
    return !l.ibc_get_committed(height, path).has_value();
  }

  auto cs = client_consensus_state(l, id, height);
  abort_unless(cs.has_value(), Err::NoConsensusState,
               id + " at height " + std::to_string(height));

  if (proof.kind != CommitmentProof::Kind::NonMembership) return false;
  if (proof.key != counterparty_prefix + "/" + path) return false;
  return verify_proof(cs->root, proof);
}

}  // namespace ibc
