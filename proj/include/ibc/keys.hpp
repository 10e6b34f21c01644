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
#include <string>
#include <string_view>

namespace ibc::paths {

// Store paths are part of the wire-visible interface: both ends of a
// connection compose them byte-for-byte identically when verifying proofs.

inline std::string client(std::string_view id) {
  return "clients/" + std::string(id);
}

inline std::string client_consensus(std::string_view id, std::uint64_t height) {
  return "clients/" + std::string(id) + "/consensusStates/" + std::to_string(height);
}

inline std::string connection(std::string_view id) {
  return "connections/" + std::string(id);
}

inline std::string channel(std::string_view port, std::string_view chan) {
  return "channelEnds/ports/" + std::string(port) + "/channels/" + std::string(chan);
}

inline std::string next_sequence_send(std::string_view port, std::string_view chan) {
  return "nextSequenceSend/ports/" + std::string(port) + "/channels/" + std::string(chan);
}

inline std::string next_sequence_recv(std::string_view port, std::string_view chan) {
  return "nextSequenceRecv/ports/" + std::string(port) + "/channels/" + std::string(chan);
}

inline std::string next_sequence_ack(std::string_view port, std::string_view chan) {
  return "nextSequenceAck/ports/" + std::string(port) + "/channels/" + std::string(chan);
}

inline std::string packet_commitment(std::string_view port, std::string_view chan,
                                     std::uint64_t sequence) {
  return "commitments/ports/" + std::string(port) + "/channels/" + std::string(chan) +
         "/sequences/" + std::to_string(sequence);
}

inline std::string packet_acknowledgement(std::string_view port, std::string_view chan,
                                          std::uint64_t sequence) {
  return "acks/ports/" + std::string(port) + "/channels/" + std::string(chan) +
         "/sequences/" + std::to_string(sequence);
}

// Private (non-provable) paths: capability tokens and module state.

inline std::string port(std::string_view port_id) {
  return "ports/" + std::string(port_id);
}

inline std::string channel_capability(std::string_view port_id, std::string_view chan) {
  return "channelCapabilities/ports/" + std::string(port_id) + "/channels/" +
         std::string(chan);
}

}  // namespace ibc::paths
