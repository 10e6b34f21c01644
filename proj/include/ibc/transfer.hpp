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

#include <map>
#include <optional>
#include <string>

#include "ibc/amount.hpp"
#include "ibc/types.hpp"

namespace ibc {

class Ledger;

struct FungibleTokenPacketData {
  std::string denomination;
  Uint256 amount = 0;
  std::string sender;
  std::string receiver;
};

struct FungibleTokenPacketAcknowledgement {
  bool success = false;
  std::string error;  // present iff !success
};

Bytes encode_transfer_data(const FungibleTokenPacketData& d);
std::optional<FungibleTokenPacketData> decode_transfer_data(std::span<const std::uint8_t> in);
Bytes encode_transfer_ack(const FungibleTokenPacketAcknowledgement& a);
std::optional<FungibleTokenPacketAcknowledgement> decode_transfer_ack(
    std::span<const std::uint8_t> in);

/// Denomination traces: "{port}/{channel}/.../{baseDenom}". A denom sent over
/// a channel end is locally sourced iff it does not already carry that end's
/// hop prefix; receivers prepend their own (port, channel) hop when minting
/// and strip the sender's hop when an asset returns to its source.
bool denom_has_hop(const std::string& denom, const std::string& port,
                   const std::string& channel);
std::string denom_prepend_hop(const std::string& denom, const std::string& port,
                              const std::string& channel);
std::string denom_strip_hop(const std::string& denom);

/// Fungible-token bridge between the routing module and a flat account store.
/// Forward transfers escrow locally and mint vouchers remotely; returns burn
/// vouchers and unescrow; failure acknowledgements and timeouts refund.
/// Per-channel escrow/voucher accounting contains Byzantine counterparties.
class TransferModule {
 public:
  static constexpr const char* kVersion = "ics20-like-1";

  explicit TransferModule(std::string module_id) : module_id_(std::move(module_id)) {}

  /// Binds the port and registers callbacks with the ledger's routing module.
  void attach(Ledger& l, const std::string& port_id);

  const std::string& module_id() const { return module_id_; }
  const std::string& port_id() const { return port_id_; }

  /// Escrows (locally sourced) or burns (voucher) the amount and sends the
  /// packet. Returns the packet sequence. Must run inside a transaction.
  std::uint64_t send_transfer(Ledger& l, const std::string& channel_id,
                              const std::string& denom, const Uint256& amount,
                              const std::string& sender, const std::string& receiver,
                              std::uint64_t timeout_height, std::uint64_t timeout_timestamp);

  // -- account/escrow state (private store; transactional) --
  static Uint256 balance(const Ledger& l, const std::string& account,
                         const std::string& denom);
  static void set_balance(Ledger& l, const std::string& account, const std::string& denom,
                          const Uint256& amount);
  static Uint256 escrow_balance(const Ledger& l, const std::string& channel_id,
                                const std::string& denom);
  static Uint256 outstanding_vouchers(const Ledger& l, const std::string& channel_id,
                                      const std::string& denom);
  /// account -> denom -> amount, for conservation checks and trace snapshots.
  static std::map<std::string, std::map<std::string, Uint256>> all_balances(const Ledger& l);

  /// Byzantine fault injection: credits an account without any escrow or
  /// voucher accounting, modelling a corrupted counterparty state machine.
  static void unbacked_mint(Ledger& l, const std::string& account, const std::string& denom,
                            const Uint256& amount);

  // routing callbacks (public so tests can drive them directly)
  Bytes on_recv_packet(Ledger& l, const Packet& p);
  void on_acknowledge_packet(Ledger& l, const Packet& p, const Bytes& ack);
  void on_timeout_packet(Ledger& l, const Packet& p);

 private:
  void refund(Ledger& l, const Packet& p);

  std::string module_id_;
  std::string port_id_;
};

}  // namespace ibc
