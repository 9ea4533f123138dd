/*
 * Copyright 2026 The nmcond Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NMC_TRANSCRIPT_H_
#define NMC_TRANSCRIPT_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nmc/bitstring.h"

namespace nmc {

enum class Direction { kAliceToBob, kBobToAlice };

std::string DirectionName(Direction d);

// A protocol message: an explicit phase tag plus named fields in a fixed order.
struct Message {
  Direction dir = Direction::kAliceToBob;
  std::size_t phase = 0;
  std::vector<std::pair<std::string, BitString>> fields;

  // Throws Error if the field is absent.
  const BitString& Get(const std::string& name) const;
  // True iff the direction, phase, field names and field lengths all match.
  bool Matches(Direction d, std::size_t ph, const std::vector<std::pair<std::string, std::size_t>>& schema) const;
  friend bool operator==(const Message&, const Message&) = default;
};

// A party's result: a key, or the reject symbol.
struct PartyOutcome {
  bool rejected = true;
  BitString key;

  static PartyOutcome Reject() { return {}; }
  static PartyOutcome Accept(BitString k) { return {false, std::move(k)}; }
  std::string ToString() const { return rejected ? "reject" : key.ToHex(); }
  friend bool operator==(const PartyOutcome&, const PartyOutcome&) = default;
};

// purify: reject stays reject; a key is replaced by a fresh uniform key of
// the same length drawn from `fresh_bits` (which must be long enough).
PartyOutcome purify(const PartyOutcome& o, const BitString& fresh_bits);

// One channel event. A relayed message has both sides; a message Eve drops
// has no delivery; a message Eve injects has no sender.
struct ChannelEvent {
  std::optional<Message> sent;
  std::optional<Message> delivered;
  bool tampered() const { return !sent || !delivered || !(*sent == *delivered); }
};

struct Transcript {
  std::string run_id;
  std::vector<ChannelEvent> events;
  PartyOutcome alice;
  PartyOutcome bob;
  std::string alice_seed;  // hex of the tape seeds
  std::string bob_seed;

  void Relay(const Message& sent, const Message& delivered) { events.push_back({sent, delivered}); }
  bool Agree() const { return !alice.rejected && !bob.rejected && alice.key == bob.key; }
  // JSON lines: one per delivered (or dropped) field, then a summary record.
  std::string ToJsonl() const;
  nlohmann::json Summary() const;
};

}  // namespace nmc

#endif  // NMC_TRANSCRIPT_H_
