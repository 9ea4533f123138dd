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
#include <gtest/gtest.h>

#include <fstream>
#include <map>

#include "nmc/adversary.h"
#include "nmc/aka_multi.h"
#include "nmc/lookahead.h"
#include "nmc/mac.h"
#include "nmc/primitives.h"
#include "nmc/profile.h"
#include "nmc/protocol.h"
#include "nmc/schedule.h"
#include "nmc/sources.h"
#include "nmc/topheavy.h"

namespace nmc {
namespace {

using nlohmann::json;

ParameterProfile Load(const std::string& name) {
  return ParameterProfile::Load(std::string(NMC_DATA_DIR) + "/profiles/" + name + ".json");
}

json LoadJson(const std::string& rel) {
  std::ifstream in(std::string(NMC_DATA_DIR) + "/" + rel);
  return json::parse(in);
}

SourceSpec Flat(std::size_t n, std::size_t size, const std::string& seed) {
  return SourceSpec::FromJson({{"kind", "flat"}, {"n", n}, {"size", size}, {"seed", seed}});
}

AdversaryScript Builtin(Algorithm a, const std::string& id) {
  for (const auto& s : BuiltinScripts(a)) {
    if (s.id == id) return s;
  }
  throw Error("no builtin " + id);
}

BitString MaskOf(const AdversaryScript& s, const std::string& field, std::size_t len) {
  BitString m(len);
  auto it = s.flips.find(field);
  if (it != s.flips.end()) {
    for (std::size_t pos : it->second) m.Set(pos, !m.Get(pos));
  }
  return m;
}

Message Xored(Message m, const AdversaryScript& s) {
  for (auto& [name, v] : m.fields) v = v.Xor(MaskOf(s, name, v.size()));
  return m;
}

std::string ViewKey(const std::vector<Message>& seen) {
  std::string k;
  for (const auto& m : seen) {
    for (const auto& [name, v] : m.fields) k += name + ":" + v.ToString() + ";";
  }
  return k;
}

// Direct enumeration of the two-round protocol under a flip script over a
// flat source and every pair of tapes. A guessing Eve answers Alice's checks
// with the most likely (T1, T2) for her view, ties to the smaller string.
struct AkaOracleResult {
  Rational success, alice_accept, e_q, y_change, purify;
};

AkaOracleResult AkaOracle(const ParameterProfile& p, const SourceSpec& src, const AdversaryScript& s) {
  const std::size_t alen = AkaAliceTapeLen(p);
  const std::size_t blen = AkaBobTapeLen(p);
  struct World {
    BitString x, at, bt;
    std::string view;
    BitString expected;  // the (T1, T2) Alice accepts for the delivered W
    Message reply;
  };
  std::vector<World> worlds;
  for (const auto& x : src.points) {
    for (std::uint64_t a = 0; a < (1u << alen); ++a) {
      for (std::uint64_t b = 0; b < (1u << blen); ++b) {
        World w{x, BitString::FromU64(a, alen), BitString::FromU64(b, blen), "", {}, {}};
        auto [st, m1] = aka2round_alice_round1(x, w.at, p);
        const BobResult r = aka2round_bob(x, Xored(m1, s), w.bt, p);
        w.reply = *r.reply;
        w.view = ViewKey({m1, w.reply});
        const BitString wd = Xored(w.reply, s).Get("W");
        const auto [t1, t2] = AkaExpectedTags(st, wd, p);
        w.expected = Concat(t1, t2);
        worlds.push_back(std::move(w));
      }
    }
  }
  std::map<std::string, std::map<BitString, std::uint64_t>> counts;
  for (const auto& w : worlds) ++counts[w.view][w.expected];
  std::map<std::string, BitString> guess;
  for (const auto& [view, c] : counts) {
    auto best = c.begin();
    for (auto it = c.begin(); it != c.end(); ++it) {
      if (it->second > best->second) best = it;
    }
    guess[view] = best->first;
  }
  std::uint64_t success = 0, alice = 0, eq = 0, ychange = 0;
  std::map<std::string, std::map<BitString, std::int64_t>> keys;
  std::map<std::string, std::int64_t> accepted;
  for (const auto& w : worlds) {
    auto [st, m1] = aka2round_alice_round1(w.x, w.at, p);
    const Message d1 = Xored(m1, s);
    const BobResult r = aka2round_bob(w.x, d1, w.bt, p);
    Message d2 = Xored(w.reply, s);
    if (s.best_guess) {
      const BitString g = guess[w.view];
      d2 = Message{Direction::kBobToAlice, 2, {{"W", d2.Get("W")}, {"T1", g.Slice(0, p.t1_len)}, {"T2", g.Slice(p.t1_len, p.tag_len)}}};
    }
    const PartyOutcome ra = aka2round_alice_round2(st, d2, p);
    const bool both = !ra.rejected && !r.outcome.rejected;
    alice += !ra.rejected;
    eq += Concat(d2.Get("T1"), d2.Get("T2")) == w.expected;
    success += both && ra.key != r.outcome.key;
    ychange += both && !(d1 == m1);
    if (!ra.rejected) {
      ++keys[w.view][ra.key];
      ++accepted[w.view];
    }
  }
  const std::size_t kl = p.FinalKeyLen();
  const std::int64_t space = std::int64_t{1} << kl;
  std::int64_t dist = 0;
  for (const auto& [view, acc] : accepted) {
    for (std::uint64_t k = 0; k < static_cast<std::uint64_t>(space); ++k) {
      auto it = keys[view].find(BitString::FromU64(k, kl));
      const std::int64_t c = it == keys[view].end() ? 0 : it->second;
      dist += std::abs(c * space - acc);
    }
  }
  const std::int64_t total = static_cast<std::int64_t>(worlds.size());
  AkaOracleResult o;
  o.success = Rational(static_cast<long>(success), total);
  o.alice_accept = Rational(static_cast<long>(alice), total);
  o.e_q = Rational(static_cast<long>(eq), total);
  o.y_change = Rational(static_cast<long>(ychange), total);
  o.purify = Rational(dist, 2 * total * space);
  for (Rational* r : {&o.success, &o.alice_accept, &o.e_q, &o.y_change, &o.purify}) r->canonicalize();
  return o;
}

TEST(ScheduleTest, ParsesAndFormatsOps) {
  const auto g = ParseOps("P A I DII");
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g[1].head, BlockOp::kAlter);
  EXPECT_EQ(g[1].inserts, 1u);
  EXPECT_EQ(g[2].inserts, 2u);
  EXPECT_EQ(FormatOps(g), "P A I D I I");
  EXPECT_THROW(ParseOps("I P"), Error);
  EXPECT_THROW(ParseOps("P X"), Error);
}

TEST(ScheduleTest, ConsecutiveAliceInteractionsDelete) {
  // a a b: Alice's first block never reaches Bob.
  const auto g = ScheduleFromInteractions("aab");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].head, BlockOp::kDelete);
  EXPECT_EQ(g[1].head, BlockOp::kPass);
  const ScheduleClass sc = classify_schedule(ScheduleFromInteractions("aabb"), false, Rational(1, 2), 2);
  EXPECT_EQ(sc.canonical(), "DI");
}

TEST(ScheduleTest, ConsecutiveBobInteractionsInsert) {
  const auto g = ScheduleFromInteractions("abba");
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].head, BlockOp::kPass);
  EXPECT_EQ(g[0].inserts, 1u);
  EXPECT_EQ(g[1].head, BlockOp::kDelete);
  EXPECT_EQ(FormatOps(ScheduleFromInteractions("axb")), "A I");
  EXPECT_THROW(ScheduleFromInteractions("ba"), Error);
  EXPECT_THROW(ScheduleFromInteractions("az"), Error);
}

TEST(ScheduleTest, PureAlterationBound) {
  for (std::size_t c = 1; c <= 6; ++c) {
    std::string ops;
    for (std::size_t i = 0; i < c; ++i) ops += "A ";
    for (const Rational& e : {Rational(1, 2), Rational(1, 8), Rational(2, 3)}) {
      const ScheduleClass sc = classify_schedule(ops, true, e, c);
      EXPECT_EQ(sc.c, c);
      EXPECT_EQ(sc.a + sc.b + sc.d, 0u);
      EXPECT_EQ(sc.forced, c);
      // ceil(2ec/3) by integer arithmetic on the numerator and denominator.
      const unsigned long num = 2 * e.get_num().get_ui() * c;
      const unsigned long den = 3 * e.get_den().get_ui();
      EXPECT_EQ(sc.bound_ops, (num + den - 1) / den);
      EXPECT_EQ(sc.bound_blocks, sc.bound_ops);
      EXPECT_EQ(classify_schedule(ops, false, e, c).bound_ops, 0u);
    }
  }
}

TEST(ScheduleTest, AlterFollowedByInsertIsNotForced) {
  const ScheduleClass sc = classify_schedule("A I D", true, Rational(1, 2), 2);
  EXPECT_EQ(sc.canonical(), "AID");
  EXPECT_EQ(sc.d, 1u);
  EXPECT_EQ(sc.forced, 2u);
}

TEST(ScheduleTest, UnrealizableInterleavingsThrow) {
  EXPECT_THROW(classify_schedule("D P", false, Rational(1, 2), 2), Error);
  EXPECT_THROW(classify_schedule("P I", false, Rational(1, 2), 2), Error);
  EXPECT_THROW(classify_schedule("P P P", false, Rational(1, 2), 2), Error);
  try {
    classify_schedule("D P", false, Rational(1, 2), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("unrealizable interleaving"), std::string::npos);
  }
  EXPECT_NO_THROW(classify_schedule("D I P", false, Rational(1, 2), 0));
}

TEST(ScriptTest, JsonRoundTripAndValidation) {
  for (Algorithm a : {Algorithm::kAka, Algorithm::kAka2}) {
    const ParameterProfile p = Load(a == Algorithm::kAka ? "aka-micro" : "aka2-micro");
    for (const auto& s : BuiltinScripts(a)) {
      const AdversaryScript t = AdversaryScript::FromJson(s.ToJson());
      EXPECT_EQ(t.ToJson(), s.ToJson());
      EXPECT_NO_THROW(ValidateScript(s, p)) << s.id;
      EXPECT_NO_THROW(ValidateScript(s, Load(a == Algorithm::kAka ? "aka-desk" : "aka2-desk"))) << s.id;
    }
  }
  EXPECT_THROW(BuiltinScripts(Algorithm::kNmCond), Error);
  json j = Builtin(Algorithm::kAka, "aka-w-guess").ToJson();
  j["typo"] = 1;
  EXPECT_THROW(AdversaryScript::FromJson(j), Error);
  AdversaryScript bad = Builtin(Algorithm::kAka, "aka-w-guess");
  bad.flips["W"] = {2};
  EXPECT_THROW(ValidateScript(bad, Load("aka-micro")), Error);
  bad.flips = {{"M", {0}}};
  EXPECT_THROW(ValidateScript(bad, Load("aka-micro")), Error);
  EXPECT_THROW(ValidateScript(Builtin(Algorithm::kAka, "aka-passive"), Load("aka2-micro")), Error);
  AdversaryScript sched = Builtin(Algorithm::kAka2, "aka2-passive");
  sched.ops = "D P";
  EXPECT_THROW(ValidateScript(sched, Load("aka2-micro")), Error);
}

TEST(ScriptTest, SeedTamperTableXorsTheMask) {
  AdversaryScript s;
  s.flips = {{"Y1", {0}}, {"Y2", {1}}};
  const AdversaryTable t = RequireSeedTamper(s, 4, 1);
  for (std::uint32_t y = 0; y < 16; ++y) EXPECT_EQ(t[y], y ^ 0b1010u);
  EXPECT_THROW(SeedTamperTable(s, 1, 1), Error);
}

TEST(ScriptTest, IdentitySeedMapIsRejected) {
  AdversaryScript s = Builtin(Algorithm::kAka, "aka-w-guess");
  try {
    RequireSeedTamper(s, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(std::string(e.what()), "A(y)=y violates the non-malleability definition");
  }
  s.flips["Y1"] = {0, 0};
  EXPECT_THROW(RequireSeedTamper(s, 3), Error);
}

class AkaMicroSuite : public ::testing::Test {
 protected:
  const ParameterProfile p = Load("aka-micro");
  const SourceSpec src = Flat(6, 8, "1");
  const json baselines = LoadJson("baselines/aka-micro.json").at("baselines");
};

TEST_F(AkaMicroSuite, ExactReportsMatchTheDirectEnumeration) {
  for (const auto& s : BuiltinScripts(Algorithm::kAka)) {
    const AttackReport r = run_with_adversary(p, src, s, {});
    const AkaOracleResult o = AkaOracle(p, src, s);
    EXPECT_EQ(r.runs, 8u << (AkaAliceTapeLen(p) + AkaBobTapeLen(p)));
    EXPECT_EQ(r.success, o.success) << s.id;
    EXPECT_EQ(r.alice_accept, o.alice_accept) << s.id;
    EXPECT_EQ(r.y_change, o.y_change) << s.id;
    if (!s.passive()) {
      EXPECT_EQ(r.e_q, o.e_q) << s.id;
    }
    ASSERT_TRUE(r.purify_distance.has_value());
    EXPECT_EQ(*r.purify_distance, o.purify) << s.id;
    EXPECT_TRUE(r.product_holds()) << s.id;
    EXPECT_LE(r.success, r.both_accept);
  }
}

TEST_F(AkaMicroSuite, ReportsMatchTheRecordedBaselines) {
  for (const auto& s : BuiltinScripts(Algorithm::kAka)) {
    const json r = run_with_adversary(p, src, s, {}).ToJson();
    const json& b = baselines.at(s.id);
    for (const char* k : {"success", "y_change", "alice_accept", "bob_accept", "e_q"}) {
      EXPECT_EQ(r.at(k), b.at(k)) << s.id << " " << k;
    }
    EXPECT_TRUE(r.at("product_holds").get<bool>());
  }
}

TEST_F(AkaMicroSuite, PassiveRunHasNoChallenges) {
  const AttackReport r = run_with_adversary(p, src, Builtin(Algorithm::kAka, "aka-passive"), {});
  EXPECT_EQ(r.success, 0);
  EXPECT_EQ(r.both_accept, 1);
  const ChallengeLedger l = challenge_ledger(r);
  EXPECT_FALSE(l.approximate);
  EXPECT_TRUE(l.entries.empty());
}

TEST_F(AkaMicroSuite, KeptTagsPassOnlyOnMacCollisions) {
  const AttackReport r = run_with_adversary(p, src, Builtin(Algorithm::kAka, "aka-w-keep-tags"), {});
  // Fraction of (x, y1) with MAC_{R1}(W) = MAC_{R1}(W xor 10) for every W.
  std::uint64_t hits = 0, total = 0;
  for (const auto& x : src.points) {
    for (std::uint64_t y1 = 0; y1 < (1u << p.y1_len); ++y1) {
      const BitString r1 = ext_hash_reference(x, BitString::FromU64(y1, p.y1_len), p.r1_len);
      for (std::uint64_t w = 0; w < (1u << p.w_len); ++w) {
        const BitString wb = BitString::FromU64(w, p.w_len);
        hits += mac_tag(r1, wb, p.tag_len) == mac_tag(r1, wb.Xor(BitString::FromString("10")), p.tag_len);
        ++total;
      }
    }
  }
  Rational want(static_cast<long>(hits), static_cast<long>(total));
  want.canonicalize();
  EXPECT_EQ(r.alice_accept, want);
  ASSERT_EQ(r.ledger.size(), 2u);
  EXPECT_EQ(r.ledger[1].conditional, want);
}

TEST_F(AkaMicroSuite, AddingTampersNeverLowersTheTargetedRejectRate) {
  // Chains where each script adds one tamper to the previous one. The
  // targeted check is Alice's, so its reject rate is 1 - alice_accept.
  auto reject = [&](const AdversaryScript& s) { return Rational(1) - run_with_adversary(p, src, s, {}).alice_accept; };
  AdversaryScript keep = Builtin(Algorithm::kAka, "aka-w-keep-tags");
  AdversaryScript keep_t1 = keep;
  keep_t1.id = "w-and-t1";
  keep_t1.flips["T1"] = {0};
  const std::vector<std::vector<AdversaryScript>> chains = {
      {Builtin(Algorithm::kAka, "aka-passive"), keep, keep_t1},
      {Builtin(Algorithm::kAka, "aka-passive"), Builtin(Algorithm::kAka, "aka-t2-flip")},
  };
  for (const auto& chain : chains) {
    for (std::size_t i = 1; i < chain.size(); ++i) {
      EXPECT_GE(reject(chain[i]), reject(chain[i - 1])) << chain[i].id;
    }
  }
  for (const auto& s : BuiltinScripts(Algorithm::kAka)) {
    EXPECT_GE(reject(s), reject(Builtin(Algorithm::kAka, "aka-passive"))) << s.id;
  }
}

TEST_F(AkaMicroSuite, ExactReportsAreReproducibleAndThreadIndependent) {
  for (const char* id : {"aka-w-guess", "aka-y1-guess"}) {
    const AdversaryScript s = Builtin(Algorithm::kAka, id);
    const json a = run_with_adversary(p, src, s, {}).ToJson();
    const json b = run_with_adversary(p, src, s, {}).ToJson();
    AttackOptions serial;
    serial.serial = true;
    const json c = run_with_adversary(p, src, s, serial).ToJson();
    EXPECT_EQ(a.dump(), b.dump());
    EXPECT_EQ(a.dump(), c.dump());
    EXPECT_EQ(AttackReport::FromJson(a).ToJson(), a);
  }
}

TEST_F(AkaMicroSuite, SamplingApproximatesExact) {
  const AdversaryScript s = Builtin(Algorithm::kAka, "aka-w-keep-tags");
  AttackOptions opt;
  opt.exact = false;
  opt.trials = 20000;
  opt.seed = 0x5eed;
  const AttackReport r = run_with_adversary(p, src, s, opt);
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.runs, 20000u);
  EXPECT_FALSE(r.purify_distance.has_value());
  EXPECT_NEAR(r.alice_accept.get_d(), 5.0 / 16, 0.015);
  EXPECT_TRUE(challenge_ledger(r).approximate);
  opt.serial = true;
  EXPECT_EQ(run_with_adversary(p, src, s, opt).ToJson(), r.ToJson());
  opt.trials = 0;
  EXPECT_THROW(run_with_adversary(p, src, s, opt), Error);
}

TEST(AttackTest, ExactModeRefusesLargeSpaces) {
  const ParameterProfile p = Load("aka-desk");
  SourceSpec u;
  u.kind = SourceKind::kUniform;
  u.n = p.n;
  try {
    run_with_adversary(p, u, Builtin(Algorithm::kAka, "aka-passive"), {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("use sampling"), std::string::npos) << e.what();
  }
  SourceSpec wrong = Flat(5, 4, "1");
  EXPECT_THROW(run_with_adversary(Load("aka-micro"), wrong, Builtin(Algorithm::kAka, "aka-passive"), {}), Error);
}

// Raz(Y3, laMAC_{laExt(X, Y2)}(M)) from the primitives.
BitString BlockTag(const BitString& x, const BitString& m, const BitString& y2, const BitString& y3,
                   const ParameterProfile& p) {
  const auto rows = la_ext(x, y2, y2.Slice(0, p.s0_len), p.t, p.row_len);
  BitString z;
  for (std::size_t i : topheavy_map(m).elems) z = z.Concat(rows.at(i - 1));
  return two_source_ip(y3, z, p.tv_len);
}

class Aka2MicroScripts : public ::testing::Test {
 protected:
  const ParameterProfile p = Load("aka2-micro");
  const SourceSpec src = Flat(16, 4, "1");
  const json baselines = LoadJson("baselines/aka2-micro.json").at("baselines");

  // Block 1 fields from Alice's tape bits.
  struct Block1 {
    BitString m, y2, y3;
  };
  Block1 FirstBlock(const BitString& tape) const {
    const BitString cw = Aka2Code(p).Encode(tape.Slice(0, p.d1));
    return {cw.Slice(0, p.d2), tape.Slice(p.d1, p.yi2_len), tape.Slice(p.d1 + p.yi2_len, p.yi3_len)};
  }
};

TEST_F(Aka2MicroScripts, AlteredFirstBlockPassesOnTagCollisions) {
  const AttackReport r = run_with_adversary(p, src, Builtin(Algorithm::kAka2, "aka2-alter-first"), {});
  const std::size_t alen = Aka2AliceTapeLen(p);
  std::uint64_t same = 0, total = 0;
  for (const auto& x : src.points) {
    for (std::uint64_t a = 0; a < (1u << alen); ++a) {
      const Block1 b = FirstBlock(BitString::FromU64(a, alen));
      BitString altered = b.m;
      altered.Set(0, !altered.Get(0));
      same += BlockTag(x, altered, b.y2, b.y3, p) == BlockTag(x, b.m, b.y2, b.y3, p);
      ++total;
    }
  }
  Rational want(static_cast<long>(same), static_cast<long>(total));
  want.canonicalize();
  ASSERT_EQ(r.ledger.size(), 1u);
  EXPECT_EQ(r.ledger[0].op, 'A');
  EXPECT_EQ(r.ledger[0].phase, 1u);
  EXPECT_EQ(r.ledger[0].conditional, want);
  EXPECT_EQ(r.e_q, want);
  EXPECT_EQ(r.success, 0);
  EXPECT_EQ(r.bob_accept, 0);
  EXPECT_EQ(ToString(r.e_q), baselines.at("aka2-alter-first").at("e_q").get<std::string>());
  EXPECT_TRUE(r.product_holds());
}

TEST_F(Aka2MicroScripts, DeletedBlockChallengeIsTheBestGuessMass) {
  const AttackReport r = run_with_adversary(p, src, Builtin(Algorithm::kAka2, "aka2-delete-insert"), {});
  // Eve sees only block 1 when she must answer Alice's T check.
  const std::size_t alen = Aka2AliceTapeLen(p);
  std::map<std::string, std::map<BitString, std::uint64_t>> by_view;
  for (const auto& x : src.points) {
    for (std::uint64_t a = 0; a < (1u << alen); ++a) {
      const BitString tape = BitString::FromU64(a, alen);
      const Block1 b = FirstBlock(tape);
      const std::string view = tape.Slice(0, p.d1 + p.yi2_len + p.yi3_len).ToString();
      ++by_view[view][BlockTag(x, b.m, b.y2, b.y3, p)];
    }
  }
  std::uint64_t best = 0, total = 0;
  for (const auto& [v, c] : by_view) {
    std::uint64_t m = 0;
    for (const auto& [t, n] : c) {
      m = std::max(m, n);
      total += n;
    }
    best += m;
  }
  Rational want(static_cast<long>(best), static_cast<long>(total));
  want.canonicalize();
  ASSERT_FALSE(r.ledger.empty());
  EXPECT_EQ(r.ledger[0].op, 'D');
  EXPECT_EQ(r.ledger[0].label, "alice T check, phase 1");
  EXPECT_EQ(r.ledger[0].conditional, want);
  ASSERT_TRUE(r.schedule.has_value());
  EXPECT_EQ(r.schedule->canonical(), "DI");
  EXPECT_TRUE(r.product_holds());
  EXPECT_EQ(ToString(r.e_q), baselines.at("aka2-delete-insert").at("e_q").get<std::string>());
}

TEST(Aka2AttackTest, AlterThenInsertEntryIsNotForced) {
  const ParameterProfile p = Load("aka2-micro");
  const AttackReport r = run_with_adversary(p, Flat(16, 1, "1"), Builtin(Algorithm::kAka2, "aka2-alter-insert"), {});
  const ChallengeLedger l = challenge_ledger(r);
  EXPECT_FALSE(l.approximate);
  bool saw_a = false;
  for (const auto& e : l.entries) {
    if (e.op == 'A') {
      saw_a = true;
      EXPECT_FALSE(e.forced);
    } else {
      EXPECT_TRUE(e.forced);
    }
  }
  EXPECT_TRUE(saw_a);
  EXPECT_TRUE(r.product_holds());
  ASSERT_TRUE(r.schedule.has_value());
  EXPECT_EQ(r.schedule->d, 1u);
  EXPECT_TRUE(r.schedule->changes_y);
}

TEST(Aka2AttackTest, PassiveRunAgreesEverywhere) {
  const ParameterProfile p = Load("aka2-micro");
  const AttackReport r = run_with_adversary(p, Flat(16, 1, "1"), Builtin(Algorithm::kAka2, "aka2-passive"), {});
  EXPECT_EQ(r.both_accept, 1);
  EXPECT_EQ(r.success, 0);
  EXPECT_TRUE(r.ledger.empty());
}

}  // namespace
}  // namespace nmc
