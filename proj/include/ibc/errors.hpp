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

#include <stdexcept>
#include <string>
#include <string_view>

namespace ibc {

enum class Err {
  // store
  InvalidKey,
  ValueTooLarge,
  KeyAbsent,
  KeyPresent,
  HeightPruned,
  // ledger
  PortAlreadyBound,
  LedgerHalted,
  // clients
  IdentifierInUse,
  InvalidIdentifier,
  NoSuchClient,
  MalformedState,
  Frozen,
  StaleHeader,
  InvalidHeader,
  Expired,
  NotMisbehaviour,
  NoConsensusState,
  // connections
  FutureConsensusHeight,
  ProofFailure,
  IncompatibleVersion,
  ConflictingPriorState,
  BadState,
  NoSuchConnection,
  // channels
  Unauthorized,
  MultiHopUnsupported,
  AlreadyClosed,
  NoSuchChannel,
  ChannelClosed,
  ChannelNotOpen,
  WrongCounterparty,
  TimeoutElapsedOnClient,
  WrongSequence,
  TimedOut,
  OutOfOrder,
  DuplicateReceipt,
  NoCommitment,
  WrongAckSequence,
  CommitmentMismatch,
  NotYetTimedOut,
  PacketWasReceived,
  ChannelNotClosed,
  NotYetProcessed,
  // routing
  UnknownPort,
  // token transfer
  InsufficientBalance,
  // harness
  ScenarioInvalid,
  MalformedTrace,
};

std::string_view err_name(Err e);

/// Thrown by handlers inside a ledger transaction; the transaction machinery
/// catches it and reverts all state written so far.
class AbortError : public std::runtime_error {
 public:
  AbortError(Err code, std::string detail)
      : std::runtime_error(std::string(err_name(code)) + (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

inline void abort_unless(bool cond, Err code, std::string detail = "") {
  if (!cond) throw AbortError(code, std::move(detail));
}

}  // namespace ibc
