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

#ifndef NMC_AKA_MULTI_H_
#define NMC_AKA_MULTI_H_

#include <optional>
#include <string>
#include <vector>

#include "nmc/bitstring.h"
#include "nmc/edit_code.h"
#include "nmc/profile.h"
#include "nmc/protocol.h"
#include "nmc/transcript.h"

namespace nmc {

// Multi-round protocol with an edit code, L block phases and a final MAC
// phase. Message phases:
//   A->B phase 1:      (Y, M, Y2, Y3)        Y has d1 bits, M is block M_1
//   A->B phase i<=L:   (V, M, Y2, Y3)        V = Ext2(X, W_{i-1})
//   B->A phase i<=L:   (W, T)                T = Raz(Y_i3', Z_i')
//   A->B phase L+1:    (V)                   V = Ext2(X, W_L)
//   B->A phase L+1:    (W, T)                T = MAC_{R'}(W')
// Alice's tape is Y || (Y_12 || Y_13) || ... || (Y_L2 || Y_L3); Bob's is
// W_1' || ... || W_L' || W'.

std::size_t Aka2AliceTapeLen(const ParameterProfile& p);
std::size_t Aka2BobTapeLen(const ParameterProfile& p);
EditCode Aka2Code(const ParameterProfile& p);

struct StepResult {
  std::optional<Message> message;
  std::optional<PartyOutcome> outcome;  // set once the party halts
};

class Aka2Alice {
 public:
  Aka2Alice(BitString x, const BitString& tape, const ParameterProfile& p);

  // The phase-1 message.
  Message Start();
  // Consumes (W_i, T_i). Returns the next message, or the final outcome.
  StepResult Step(const Message& delivered);

  // Value Alice's pending T check accepts: Raz(Y_i3, Z_i) in a block phase.
  BitString ExpectedT() const;
  // The tag Alice's final check accepts for W.
  BitString ExpectedFinalTag(const BitString& w) const;

  std::size_t phase() const { return phase_; }
  bool done() const { return outcome_.has_value(); }
  const BitString& y() const { return y_; }
  const BitString& codeword() const { return codeword_; }

 private:
  Message BlockMessage(std::optional<BitString> v);
  PartyOutcome Halt(PartyOutcome o);

  const ParameterProfile& p_;
  BitString x_;
  BitString tape_;
  BitString y_;
  BitString codeword_;
  BitString r_key_;
  BitString z_;  // Z_i of the current phase
  BitString y3_;
  std::size_t phase_ = 0;
  std::optional<PartyOutcome> outcome_;
};

class Aka2Bob {
 public:
  Aka2Bob(BitString x, const BitString& tape, const ParameterProfile& p);

  StepResult Step(const Message& delivered);

  // Ext2(X, W'_{j-1}) for the V check of the next expected phase j >= 2.
  BitString ExpectedV() const;
  std::size_t expected_phase() const { return phase_ + 1; }
  bool done() const { return outcome_.has_value(); }
  const BitString& y_received() const { return y_; }
  const BitString& received_codeword() const { return m_; }
  // W_j' most recently sent, or an empty string before the first reply.
  const BitString& last_w() const { return last_w_; }

 private:
  StepResult Reject();

  const ParameterProfile& p_;
  BitString x_;
  BitString tape_;
  BitString y_;
  BitString m_;
  BitString last_w_;
  std::size_t phase_ = 0;  // phases completed
  std::optional<PartyOutcome> outcome_;
};

StepResult aka_multiround_step(Aka2Alice& alice, const Message& delivered);
StepResult aka_multiround_step(Aka2Bob& bob, const Message& delivered);

Transcript RunAka2Honest(const BitString& x, const Tapes& tapes, const ParameterProfile& p,
                         const std::string& run_id);

}  // namespace nmc

#endif  // NMC_AKA_MULTI_H_
