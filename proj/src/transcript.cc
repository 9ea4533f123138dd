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

#include "nmc/transcript.h"

namespace nmc {

using nlohmann::json;

std::string DirectionName(Direction d) { return d == Direction::kAliceToBob ? "A->B" : "B->A"; }

const BitString& Message::Get(const std::string& name) const {
  for (const auto& [k, v] : fields) {
    if (k == name) return v;
  }
  throw Error("message has no field '" + name + "'");
}

bool Message::Matches(Direction d, std::size_t ph,
                      const std::vector<std::pair<std::string, std::size_t>>& schema) const {
  if (dir != d || phase != ph || fields.size() != schema.size()) return false;
  for (std::size_t i = 0; i < schema.size(); ++i) {
    if (fields[i].first != schema[i].first || fields[i].second.size() != schema[i].second) return false;
  }
  return true;
}

PartyOutcome purify(const PartyOutcome& o, const BitString& fresh_bits) {
  if (o.rejected) return o;
  return PartyOutcome::Accept(fresh_bits.Slice(0, o.key.size()));
}

std::string Transcript::ToJsonl() const {
  std::string out;
  for (const auto& ev : events) {
    const Message& m = ev.delivered ? *ev.delivered : *ev.sent;
    const std::string event = !ev.sent ? "inject" : (!ev.delivered ? "drop" : "deliver");
    for (const auto& [name, bits] : m.fields) {
      bool field_tampered = ev.tampered();
      if (ev.sent && ev.delivered) {
        field_tampered = true;
        for (const auto& [sn, sb] : ev.sent->fields) {
          if (sn == name) field_tampered = ev.sent->phase != ev.delivered->phase || sb != bits;
        }
      }
      json line = {{"schema_version", 1}, {"run_id", run_id},     {"phase", m.phase},
                   {"direction", DirectionName(m.dir)}, {"event", event}, {"field", name},
                   {"len", bits.size()}, {"hex", bits.ToHex()}, {"tampered", field_tampered}};
      out += line.dump() + "\n";
    }
  }
  out += Summary().dump() + "\n";
  return out;
}

json Transcript::Summary() const {
  return {{"schema_version", 1},
          {"run_id", run_id},
          {"record", "outcome"},
          {"alice", alice.ToString()},
          {"bob", bob.ToString()},
          {"agree", Agree()},
          {"key_len", alice.rejected ? bob.key.size() : alice.key.size()},
          {"alice_seed", alice_seed},
          {"bob_seed", bob_seed}};
}

}  // namespace nmc
