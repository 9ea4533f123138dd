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

#ifndef NMC_PROTOCOL_H_
#define NMC_PROTOCOL_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nmc/bitstring.h"
#include "nmc/profile.h"
#include "nmc/transcript.h"

namespace nmc {

// Two-round protocol.
//   Alice: Y = (Y1, Y2, Y3) from her tape; R2 = laExt(X, Y2);
//          Z = laMAC_{R2}(Y1); R1 = Ext(X, Y1) with 4s bits.
//   A->B round 1: (Y1, Y2, Y3)
//   Bob:   W' from his tape; R2', Z', R1' as above from the delivered seeds;
//          T1' = Raz(Y3', Z') with s bits; T2' = MAC_{R1'}(W');
//          R_B = Ext(X, W').
//   B->A round 2: (W', T1', T2')
//   Alice: reject unless T1 = Raz(Y3, Z) and T2 = MAC_{R1}(W);
//          R_A = Ext(X, W).

std::size_t AkaAliceTapeLen(const ParameterProfile& p);
std::size_t AkaBobTapeLen(const ParameterProfile& p);

struct AkaAliceState {
  BitString x;
  BitString y1, y2, y3;
  BitString r1;
  std::vector<BitString> r2;
  BitString z;
};

// Throws Error("insufficient local randomness") on a short tape.
std::pair<AkaAliceState, Message> aka2round_alice_round1(const BitString& x, const BitString& tape,
                                                         const ParameterProfile& p);

struct BobResult {
  std::optional<Message> reply;  // absent when Bob rejects
  PartyOutcome outcome;
};

// Rejects (no reply) on a malformed or mis-phased message.
BobResult aka2round_bob(const BitString& x, const Message& delivered, const BitString& tape,
                        const ParameterProfile& p);

PartyOutcome aka2round_alice_round2(const AkaAliceState& state, const Message& delivered, const ParameterProfile& p);

// The (T1, T2) that Alice's round-2 checks accept together with W.
std::pair<BitString, BitString> AkaExpectedTags(const AkaAliceState& state, const BitString& w,
                                                const ParameterProfile& p);

// Per-run tapes from the master seed: alice = DeriveSeed(DeriveSeed(master,
// "run", i), "alice"), likewise "bob", each expanded by BitRng.
struct Tapes {
  std::uint64_t alice_seed = 0;
  std::uint64_t bob_seed = 0;
  std::uint64_t source_seed = 0;
  BitString alice;
  BitString bob;
};
Tapes DeriveTapes(std::uint64_t master, std::uint64_t run_index, std::size_t alice_len, std::size_t bob_len);

Transcript RunAkaHonest(const BitString& x, const Tapes& tapes, const ParameterProfile& p,
                        const std::string& run_id);

}  // namespace nmc

#endif  // NMC_PROTOCOL_H_
