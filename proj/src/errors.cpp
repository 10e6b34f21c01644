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

#include "ibc/errors.hpp"

namespace ibc {

std::string_view err_name(Err e) {
  switch (e) {
    case Err::InvalidKey: return "InvalidKey";
    case Err::ValueTooLarge: return "ValueTooLarge";
    case Err::KeyAbsent: return "KeyAbsent";
    case Err::KeyPresent: return "KeyPresent";
    case Err::HeightPruned: return "HeightPruned";
    case Err::PortAlreadyBound: return "PortAlreadyBound";
    case Err::LedgerHalted: return "LedgerHalted";
    case Err::IdentifierInUse: return "IdentifierInUse";
    case Err::InvalidIdentifier: return "InvalidIdentifier";
    case Err::NoSuchClient: return "NoSuchClient";
    case Err::MalformedState: return "MalformedState";
    case Err::Frozen: return "Frozen";
    case Err::StaleHeader: return "StaleHeader";
    case Err::InvalidHeader: return "InvalidHeader";
    case Err::Expired: return "Expired";
    case Err::NotMisbehaviour: return "NotMisbehaviour";
    case Err::NoConsensusState: return "NoConsensusState";
    case Err::FutureConsensusHeight: return "FutureConsensusHeight";
    case Err::ProofFailure: return "ProofFailure";
    case Err::IncompatibleVersion: return "IncompatibleVersion";
    case Err::ConflictingPriorState: return "ConflictingPriorState";
    case Err::BadState: return "BadState";
    case Err::NoSuchConnection: return "NoSuchConnection";
    case Err::Unauthorized: return "Unauthorized";
    case Err::MultiHopUnsupported: return "MultiHopUnsupported";
    case Err::AlreadyClosed: return "AlreadyClosed";
    case Err::NoSuchChannel: return "NoSuchChannel";
    case Err::ChannelClosed: return "ChannelClosed";
    case Err::ChannelNotOpen: return "ChannelNotOpen";
    case Err::WrongCounterparty: return "WrongCounterparty";
    case Err::TimeoutElapsedOnClient: return "TimeoutElapsedOnClient";
    case Err::WrongSequence: return "WrongSequence";
    case Err::TimedOut: return "TimedOut";
    case Err::OutOfOrder: return "OutOfOrder";
    case Err::DuplicateReceipt: return "DuplicateReceipt";
    case Err::NoCommitment: return "NoCommitment";
    case Err::WrongAckSequence: return "WrongAckSequence";
    case Err::CommitmentMismatch: return "CommitmentMismatch";
    case Err::NotYetTimedOut: return "NotYetTimedOut";
    case Err::PacketWasReceived: return "PacketWasReceived";
    case Err::ChannelNotClosed: return "ChannelNotClosed";
    case Err::NotYetProcessed: return "NotYetProcessed";
    case Err::UnknownPort: return "UnknownPort";
    case Err::InsufficientBalance: return "InsufficientBalance";
    case Err::ScenarioInvalid: return "ScenarioInvalid";
    case Err::MalformedTrace: return "MalformedTrace";
  }
  return "UnknownError";
}

}  // namespace ibc
