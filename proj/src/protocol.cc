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

#include "nmc/protocol.h"

#include "nmc/lookahead.h"
#include "nmc/mac.h"
#include "nmc/primitives.h"
#include "nmc/seeds.h"
#include "nmc/topheavy.h"

namespace nmc {
namespace {

using Schema = std::vector<std::pair<std::string, std::size_t>>;

Schema Round1Schema(const ParameterProfile& p) { return {{"Y1", p.y1_len}, {"Y2", p.y2_len}, {"Y3", p.y3_len}}; }
Schema Round2Schema(const ParameterProfile& p) { return {{"W", p.w_len}, {"T1", p.t1_len}, {"T2", p.tag_len}}; }

void RequireAka(const ParameterProfile& p) {
  if (p.algorithm != Algorithm::kAka) throw Error("profile '" + p.name + "' is not an aka profile");
}

// (R2 rows, Z) for the given seeds.
BitString LookaheadTag(const BitString& x, const BitString& y1, const BitString& y2, const ParameterProfile& p) {
  const auto r2 = la_ext(x, y2, y2.Slice(0, p.s0_len), p.t, p.row_len);
  return Concat(la_mac(r2, y1));
}

}  // namespace

std::size_t AkaAliceTapeLen(const ParameterProfile& p) { return p.y1_len + p.y2_len + p.y3_len; }
std::size_t AkaBobTapeLen(const ParameterProfile& p) { return p.w_len; }

std::pair<AkaAliceState, Message> aka2round_alice_round1(const BitString& x, const BitString& tape,
                                                         const ParameterProfile& p) {
  RequireAka(p);
  if (tape.size() < AkaAliceTapeLen(p)) throw Error("insufficient local randomness");
  if (x.size() != p.n) throw Error("source length does not match the profile");
  AkaAliceState st;
  st.x = x;
  st.y1 = tape.Slice(0, p.y1_len);
  st.y2 = tape.Slice(p.y1_len, p.y2_len);
  st.y3 = tape.Slice(p.y1_len + p.y2_len, p.y3_len);
  st.r2 = la_ext(x, st.y2, st.y2.Slice(0, p.s0_len), p.t, p.row_len);
  st.z = Concat(la_mac(st.r2, st.y1));
  st.r1 = ext_hash(x, st.y1, p.r1_len);
  Message m{Direction::kAliceToBob, 1, {{"Y1", st.y1}, {"Y2", st.y2}, {"Y3", st.y3}}};
  return {std::move(st), std::move(m)};
}

BobResult aka2round_bob(const BitString& x, const Message& delivered, const BitString& tape,
                        const ParameterProfile& p) {
  RequireAka(p);
  if (tape.size() < AkaBobTapeLen(p)) throw Error("insufficient local randomness");
  if (!delivered.Matches(Direction::kAliceToBob, 1, Round1Schema(p))) return {std::nullopt, PartyOutcome::Reject()};
  const BitString& y1 = delivered.Get("Y1");
  const BitString& y2 = delivered.Get("Y2");
  const BitString& y3 = delivered.Get("Y3");
  const BitString w = tape.Slice(0, p.w_len);
  const BitString z = LookaheadTag(x, y1, y2, p);
  const BitString r1 = ext_hash(x, y1, p.r1_len);
  Message reply{Direction::kBobToAlice, 2,
                {{"W", w}, {"T1", two_source_ip(y3, z, p.t1_len)}, {"T2", mac_tag(r1, w, p.tag_len)}}};
  return {std::move(reply), PartyOutcome::Accept(ext_hash(x, w, p.FinalKeyLen()))};
}

std::pair<BitString, BitString> AkaExpectedTags(const AkaAliceState& st, const BitString& w,
                                                const ParameterProfile& p) {
  return {two_source_ip(st.y3, st.z, p.t1_len), mac_tag(st.r1, w, p.tag_len)};
}

PartyOutcome aka2round_alice_round2(const AkaAliceState& st, const Message& delivered, const ParameterProfile& p) {
  RequireAka(p);
  if (!delivered.Matches(Direction::kBobToAlice, 2, Round2Schema(p))) return PartyOutcome::Reject();
  const BitString& w = delivered.Get("W");
  const auto [t1, t2] = AkaExpectedTags(st, w, p);
  if (delivered.Get("T1") != t1 || delivered.Get("T2") != t2) return PartyOutcome::Reject();
  return PartyOutcome::Accept(ext_hash(st.x, w, p.FinalKeyLen()));
}

Tapes DeriveTapes(std::uint64_t master, std::uint64_t run_index, std::size_t alice_len, std::size_t bob_len) {
  const std::uint64_t run = DeriveSeed(master, "run", run_index);
  Tapes t;
  t.alice_seed = DeriveSeed(run, "alice");
  t.bob_seed = DeriveSeed(run, "bob");
  t.source_seed = DeriveSeed(run, "source");
  t.alice = BitRng(t.alice_seed).Bits(alice_len);
  t.bob = BitRng(t.bob_seed).Bits(bob_len);
  return t;
}

Transcript RunAkaHonest(const BitString& x, const Tapes& tapes, const ParameterProfile& p, const std::string& run_id) {
  Transcript tr;
  tr.run_id = run_id;
  tr.alice_seed = SeedToHex(tapes.alice_seed);
  tr.bob_seed = SeedToHex(tapes.bob_seed);
  auto [st, m1] = aka2round_alice_round1(x, tapes.alice, p);
  tr.Relay(m1, m1);
  BobResult b = aka2round_bob(x, m1, tapes.bob, p);
  tr.bob = b.outcome;
  if (!b.reply) {
    tr.alice = PartyOutcome::Reject();
    return tr;
  }
  tr.Relay(*b.reply, *b.reply);
  tr.alice = aka2round_alice_round2(st, *b.reply, p);
  return tr;
}

}  // namespace nmc
