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

#include "nmc/aka_multi.h"

#include "nmc/lookahead.h"
#include "nmc/mac.h"
#include "nmc/primitives.h"
#include "nmc/seeds.h"
#include "nmc/topheavy.h"

namespace nmc {
namespace {

// Raz(Y_3, laMAC_{laExt(X, Y_2)}(M)).
BitString BlockTag(const BitString& x, const BitString& m, const BitString& y2, const BitString& y3,
                   const ParameterProfile& p) {
  const auto r = la_ext(x, y2, y2.Slice(0, p.s0_len), p.t, p.row_len);
  return two_source_ip(y3, Concat(la_mac(r, m)), p.tv_len);
}

void RequireAka2(const ParameterProfile& p) {
  if (p.algorithm != Algorithm::kAka2) throw Error("profile '" + p.name + "' is not an aka2 profile");
}

}  // namespace

std::size_t Aka2AliceTapeLen(const ParameterProfile& p) { return p.d1 + p.L * (p.yi2_len + p.yi3_len); }
std::size_t Aka2BobTapeLen(const ParameterProfile& p) { return p.L * p.wi_len + p.w_len; }
EditCode Aka2Code(const ParameterProfile& p) { return EditCode{p.lambda_m, p.edit_r}; }

Aka2Alice::Aka2Alice(BitString x, const BitString& tape, const ParameterProfile& p) : p_(p), x_(std::move(x)) {
  RequireAka2(p);
  if (tape.size() < Aka2AliceTapeLen(p)) throw Error("insufficient local randomness");
  if (x_.size() != p.n) throw Error("source length does not match the profile");
  tape_ = tape;
  y_ = tape.Slice(0, p.d1);
  codeword_ = Aka2Code(p).Encode(y_);
}

Message Aka2Alice::BlockMessage(std::optional<BitString> v) {
  ++phase_;
  const std::size_t off = p_.d1 + (phase_ - 1) * (p_.yi2_len + p_.yi3_len);
  const BitString y2 = tape_.Slice(off, p_.yi2_len);
  y3_ = tape_.Slice(off + p_.yi2_len, p_.yi3_len);
  const BitString block = codeword_.Slice((phase_ - 1) * p_.d2, p_.d2);
  const auto r = la_ext(x_, y2, y2.Slice(0, p_.s0_len), p_.t, p_.row_len);
  z_ = Concat(la_mac(r, block));
  Message m{Direction::kAliceToBob, phase_, {}};
  if (v) {
    m.fields.push_back({"V", *v});
  } else {
    m.fields.push_back({"Y", y_});
  }
  m.fields.push_back({"M", block});
  m.fields.push_back({"Y2", y2});
  m.fields.push_back({"Y3", y3_});
  return m;
}

Message Aka2Alice::Start() {
  if (phase_ != 0) throw Error("Alice has already started");
  return BlockMessage(std::nullopt);
}

PartyOutcome Aka2Alice::Halt(PartyOutcome o) {
  outcome_ = o;
  return o;
}

BitString Aka2Alice::ExpectedT() const { return two_source_ip(y3_, z_, p_.tv_len); }

BitString Aka2Alice::ExpectedFinalTag(const BitString& w) const { return mac_tag(r_key_, w, p_.mac_v); }

StepResult Aka2Alice::Step(const Message& delivered) {
  if (done() || phase_ == 0) throw Error("Alice is not waiting for a message");
  if (phase_ <= p_.L) {
    if (!delivered.Matches(Direction::kBobToAlice, phase_, {{"W", p_.wi_len}, {"T", p_.tv_len}}) ||
        delivered.Get("T") != ExpectedT()) {
      return {std::nullopt, Halt(PartyOutcome::Reject())};
    }
    BitString v = ext_hash(x_, delivered.Get("W"), p_.tv_len);
    if (phase_ < p_.L) return {BlockMessage(v), std::nullopt};
    ++phase_;
    r_key_ = ext_hash(x_, y_, p_.r_key_len);
    return {Message{Direction::kAliceToBob, phase_, {{"V", v}}}, std::nullopt};
  }
  if (!delivered.Matches(Direction::kBobToAlice, phase_, {{"W", p_.w_len}, {"T", p_.mac_v}}) ||
      delivered.Get("T") != ExpectedFinalTag(delivered.Get("W"))) {
    return {std::nullopt, Halt(PartyOutcome::Reject())};
  }
  return {std::nullopt, Halt(PartyOutcome::Accept(ext_hash(x_, delivered.Get("W"), p_.FinalKeyLen())))};
}

Aka2Bob::Aka2Bob(BitString x, const BitString& tape, const ParameterProfile& p) : p_(p), x_(std::move(x)) {
  RequireAka2(p);
  if (tape.size() < Aka2BobTapeLen(p)) throw Error("insufficient local randomness");
  if (x_.size() != p.n) throw Error("source length does not match the profile");
  tape_ = tape;
}

StepResult Aka2Bob::Reject() {
  outcome_ = PartyOutcome::Reject();
  return {std::nullopt, outcome_};
}

BitString Aka2Bob::ExpectedV() const {
  if (last_w_.empty()) throw Error("no pending V check");
  return ext_hash(x_, last_w_, p_.tv_len);
}

StepResult Aka2Bob::Step(const Message& delivered) {
  if (done()) throw Error("Bob has halted");
  const std::size_t j = phase_ + 1;
  if (j == 1) {
    if (!delivered.Matches(Direction::kAliceToBob, 1,
                           {{"Y", p_.d1}, {"M", p_.d2}, {"Y2", p_.yi2_len}, {"Y3", p_.yi3_len}})) {
      return Reject();
    }
    y_ = delivered.Get("Y");
  } else if (j <= p_.L) {
    if (!delivered.Matches(Direction::kAliceToBob, j,
                           {{"V", p_.tv_len}, {"M", p_.d2}, {"Y2", p_.yi2_len}, {"Y3", p_.yi3_len}}) ||
        delivered.Get("V") != ExpectedV()) {
      return Reject();
    }
  } else {
    if (!delivered.Matches(Direction::kAliceToBob, j, {{"V", p_.tv_len}})) return Reject();
    if (m_ != Aka2Code(p_).Encode(y_)) return Reject();
    if (delivered.Get("V") != ExpectedV()) return Reject();
    phase_ = j;
    const BitString r = ext_hash(x_, y_, p_.r_key_len);
    const BitString w = tape_.Slice(p_.L * p_.wi_len, p_.w_len);
    outcome_ = PartyOutcome::Accept(ext_hash(x_, w, p_.FinalKeyLen()));
    return {Message{Direction::kBobToAlice, j, {{"W", w}, {"T", mac_tag(r, w, p_.mac_v)}}}, outcome_};
  }
  phase_ = j;
  const BitString& block = delivered.Get("M");
  m_ = m_.Concat(block);
  last_w_ = tape_.Slice((j - 1) * p_.wi_len, p_.wi_len);
  const BitString t = BlockTag(x_, block, delivered.Get("Y2"), delivered.Get("Y3"), p_);
  return {Message{Direction::kBobToAlice, j, {{"W", last_w_}, {"T", t}}}, std::nullopt};
}

StepResult aka_multiround_step(Aka2Alice& alice, const Message& delivered) { return alice.Step(delivered); }
StepResult aka_multiround_step(Aka2Bob& bob, const Message& delivered) { return bob.Step(delivered); }

Transcript RunAka2Honest(const BitString& x, const Tapes& tapes, const ParameterProfile& p,
                         const std::string& run_id) {
  Transcript tr;
  tr.run_id = run_id;
  tr.alice_seed = SeedToHex(tapes.alice_seed);
  tr.bob_seed = SeedToHex(tapes.bob_seed);
  Aka2Alice alice(x, tapes.alice, p);
  Aka2Bob bob(x, tapes.bob, p);
  Message m = alice.Start();
  while (true) {
    tr.Relay(m, m);
    StepResult b = bob.Step(m);
    if (!b.message) {
      tr.bob = *b.outcome;
      tr.alice = PartyOutcome::Reject();
      return tr;
    }
    tr.Relay(*b.message, *b.message);
    StepResult a = alice.Step(*b.message);
    if (a.outcome) {
      tr.alice = *a.outcome;
      tr.bob = b.outcome.value_or(PartyOutcome::Reject());
      return tr;
    }
    m = *a.message;
  }
}

}  // namespace nmc
