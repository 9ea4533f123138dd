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

#include "golden.h"
#include "nmc/condenser.h"
#include "nmc/condenser_verify.h"
#include "nmc/lookahead.h"
#include "nmc/primitives.h"
#include "nmc/profile.h"
#include "nmc/seeds.h"
#include "nmc/somewhere.h"
#include "nmc/sources.h"
#include "nmc/topheavy.h"

namespace nmc {
namespace {

using nlohmann::json;

ParameterProfile Load(const std::string& name) {
  return ParameterProfile::Load(std::string(NMC_DATA_DIR) + "/profiles/" + name + ".json");
}

bool HasClause(const std::vector<Violation>& v, const std::string& clause) {
  for (const auto& x : v) {
    if (x.clause == clause) return true;
  }
  return false;
}

TEST(Profile, ShippedProfilesValidate) {
  for (const char* name : {"nmcond-paper", "nmcond-desk", "nmcond-micro", "nmcond2-paper", "nmcond2-desk",
                           "lookahead-paper", "lookahead-desk", "aka-paper", "aka-desk", "aka-micro", "aka2-paper",
                           "aka2-desk", "aka2-micro"}) {
    const ParameterProfile p = Load(name);
    const auto v = validate_profile(p);
    EXPECT_TRUE(v.empty()) << name << ": " << (v.empty() ? "" : v.front().clause);
    EXPECT_EQ(ParameterProfile::FromJson(p.ToJson()).ToJson(), p.ToJson());
  }
}

TEST(Profile, PaperModeEntropyClauseBoundary) {
  ParameterProfile p = Load("nmcond-paper");
  const std::size_t d = p.y1_len;
  p.k = 60 * d * d;
  EXPECT_FALSE(HasClause(validate_profile(p), "k >= 60 d^2"));
  p.k = 60 * d * d - 1;
  EXPECT_TRUE(HasClause(validate_profile(p), "k >= 60 d^2"));
  try {
    RequireValid(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("k >= 60 d^2"), std::string::npos);
  }
}

TEST(Profile, DeskModeKeepsStructuralClausesOnly) {
  ParameterProfile p = Load("nmcond-desk");
  p.k = 1;
  EXPECT_TRUE(validate_profile(p).empty());
  p.t += 1;
  EXPECT_TRUE(HasClause(validate_profile(p), "t = 4|y1|"));
}

TEST(Profile, UnknownKeysAreRejected) {
  json j = Load("nmcond-desk").ToJson();
  j["y1_lne"] = 3;
  EXPECT_THROW(ParameterProfile::FromJson(j), Error);
}

TEST(Shape, PaperModeLayouts) {
  const ParameterProfile a = Load("nmcond-paper");
  const std::size_t d = a.y1_len;
  const Layout la = CondenserLayout(a);
  ASSERT_EQ(la.parts.size(), 1 + 2 * d);
  EXPECT_EQ(la.parts[0].len, 8 * d * d);
  for (std::size_t i = 1; i < la.parts.size(); ++i) EXPECT_EQ(la.parts[i].len, d);
  EXPECT_GT(la.parts[0].len, la.total() - la.parts[0].len);

  const ParameterProfile b = Load("nmcond2-paper");
  const Layout lb = CondenserLayout(b);
  const std::size_t c = b.C, ell = b.ell;
  EXPECT_EQ(lb.parts[0].len, (std::size_t{1} << c) * 4 * ell);
  EXPECT_EQ(lb.total() - lb.parts[0].len, ((std::size_t{1} << c) - 1) * 2 * ell);
}

TEST(NmCond, MatchesStepByStepDefinition) {
  for (const char* name : {"nmcond-micro", "nmcond-desk"}) {
    const ParameterProfile p = Load(name);
    BitRng rng(DeriveSeed(7, name));
    for (int trial = 0; trial < 50; ++trial) {
      const BitString x = rng.Bits(p.n), y = rng.Bits(p.y1_len + p.y2_len);
      const BitString y1 = y.Slice(0, p.y1_len), y2 = y.Slice(p.y1_len, p.y2_len);
      const BitString w = ext_hash(x, y1, p.w_len);
      const AltExtTrace tr = alt_extract(x, y2, y2.Slice(0, p.s0_len), p.t, p.row_len);
      const std::vector<BitString> r(tr.r_rows.begin() + 1, tr.r_rows.end());
      std::vector<BitString> mac;
      for (std::size_t i : topheavy_map(y1).elems) mac.push_back(r[i - 1]);
      const CondenserOutput out = nm_cond(x, y, p);
      EXPECT_EQ(out.v1, nm_ip(w, y2.Resized(w.size()), p.v1_len));
      EXPECT_EQ(out.v2, mac);
      // The layout splits z back into its parts.
      std::size_t pos = 0;
      std::vector<BitString> parts;
      for (const auto& part : out.layout.parts) {
        parts.push_back(out.z.Slice(pos, part.len));
        pos += part.len;
      }
      EXPECT_EQ(pos, out.z.size());
      EXPECT_EQ(parts[0], out.v1);
      EXPECT_EQ(std::vector<BitString>(parts.begin() + 1, parts.end()), out.v2);
      EXPECT_EQ(nm_cond(x, Concat(y1, y2), p).z, out.z);
    }
  }
}

TEST(NmCondLinear, MatchesStepByStepDefinition) {
  const ParameterProfile p = Load("nmcond2-desk");
  BitRng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const BitString x = rng.Bits(p.n), y = rng.Bits(p.y1_len + p.y2_len);
    const BitString y1 = y.Slice(0, p.y1_len), y2 = y.Slice(p.y1_len, p.y2_len);
    std::vector<BitString> xbar;
    for (std::size_t i = 0; i < p.C; ++i) {
      xbar.push_back(nm_ip(x.Slice(i * p.n_prime, p.n_prime), y1.Resized(p.n_prime), p.m_prime));
    }
    const AltExtTrace tr = alt_extract_v(x, xbar, y2, y2.Slice(0, p.s0_len), p.C, p.v_unit, p.row_len);
    const CondenserOutput out = nm_cond_linear(x, y, p);
    const BitString w = ext_hash(x, y1, p.w_len);
    EXPECT_EQ(out.v1, nm_ip(w, y2.Resized(w.size()), p.nm2_len));
    EXPECT_EQ(out.v2, tr.v_rows);
    std::size_t vtotal = 0;
    for (const auto& v : out.v2) vtotal += v.size();
    EXPECT_EQ(vtotal, ((std::size_t{1} << p.C) - 1) * 2 * p.ell);
  }
}

TEST(NmCond, ErrorsNameTheProblem) {
  const ParameterProfile p = Load("nmcond-desk");
  EXPECT_THROW(nm_cond(BitString(p.n - 1), BitString(p.y1_len + p.y2_len), p), Error);
  EXPECT_THROW(nm_cond(BitString(p.n), BitString(p.y1_len), p), Error);
  try {
    nm_cond(BitString(4096), BitString(438), Load("nmcond-paper"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("not executable"), std::string::npos);
  }
  EXPECT_THROW(nm_cond_linear(BitString(p.n), BitString(p.y1_len + p.y2_len), p), Error);
}

TEST(Golden, DeskOutputs) {
  json g = json::object();
  for (const char* name : {"nmcond-micro", "nmcond-desk", "nmcond2-desk"}) {
    const ParameterProfile p = Load(name);
    BitRng rng(DeriveSeed(1, name));
    json runs = json::array();
    for (int i = 0; i < 4; ++i) {
      const BitString x = rng.Bits(p.n), y = rng.Bits(p.y1_len + p.y2_len);
      const CondenserOutput o = p.algorithm == Algorithm::kNmCond ? nm_cond(x, y, p) : nm_cond_linear(x, y, p);
      runs.push_back({{"x", x.ToHex()}, {"y", y.ToHex()}, {"z", o.z.ToString()}});
    }
    g[name] = {{"layout", CondenserLayout(p).ToJson()}, {"runs", runs}};
  }
  testing::ExpectGolden("condenser-desk.json", g);
}

TEST(NmCondVerify, MicroProfileMatchesBaselineAndSplitsCases) {
  const ParameterProfile p = Load("nmcond-micro");
  std::ifstream in(std::string(NMC_DATA_DIR) + "/baselines/nmcond-micro.json");
  const json base = json::parse(in);
  const json& q = base.at("query");
  const FlatFamily fam = MakeFlatFamily(p.n, q.at("k").get<std::size_t>(), q.at("cap").get<std::size_t>(),
                                        q.at("samples").get<std::size_t>(), ParseSeedHex(q.at("seed").get<std::string>()));
  NmCondOptions o;
  o.kprime = q.at("kprime").get<std::size_t>();
  o.prefix_len = p.y1_len;
  o.v1_len = p.v1_len;
  const NmCondReport r = verify_nm_condenser(NmCondTable(p), fam.sources, o);
  EXPECT_EQ(r.sources_checked, base.at("sources_checked").get<std::size_t>());
  for (const auto& [name, c] : {std::pair{"all", r.all}, {"same_prefix", r.same_prefix}, {"diff_prefix", r.diff_prefix}}) {
    EXPECT_EQ(ToString(c.worst.eps_seed), base.at(name).at("eps_seed").get<std::string>()) << name;
    EXPECT_EQ(ToString(c.worst.eps_inner), base.at(name).at("eps_inner").get<std::string>()) << name;
    const std::size_t d = p.y1_len + p.y2_len;
    const AdversaryTable& a = c.witness_adversary;
    ASSERT_EQ(a.size(), std::size_t{1} << d);
    EXPECT_TRUE(IsFixedPointFree(a));
    // Adversaries in the two cases keep or change the y1 prefix on every seed.
    for (std::size_t y = 0; y < a.size(); ++y) {
      const bool same = (y >> p.y2_len) == (a[y] >> p.y2_len);
      if (std::string(name) != "all") {
        EXPECT_EQ(same, std::string(name) == "same_prefix");
      }
    }
  }
  EXPECT_FALSE(r.all.worst < r.same_prefix.worst);
  EXPECT_FALSE(r.all.worst < r.diff_prefix.worst);
}

TEST(NmCondVerify, TripleMatchesDirectDefinition) {
  const ParameterProfile p = Load("nmcond-micro");
  const FnTable t = NmCondTable(p);
  const std::size_t d = p.y1_len + p.y2_len;
  const auto fam = MakeFlatFamily(p.n, p.k, 6, 0, 1).sources;
  for (const auto& src : fam) {
    const auto inner = InnerErrors(t, src, 1);
    const auto ref = InnerErrorsReference(t, src, 1);
    for (const auto& a : EnumerateAdversaries(d, 20, 20, 3)) {
      std::vector<std::pair<Rational, Rational>> items;
      for (std::size_t y = 0; y < a.size(); ++y) items.push_back({ref[y * a.size() + a[y]], Pow2(-static_cast<int>(d))});
      const Rational star = SmallestSelfBoundedEps(items);
      Rational seed = 0, in = 0;
      for (const auto& [v, pr] : items) {
        if (v > star) {
          seed += pr;
        } else {
          in = std::max(in, v);
        }
      }
      const NmCondTriple tr = CondenserTriple(inner, d, a);
      EXPECT_EQ(tr.eps_star, star);
      EXPECT_EQ(tr.eps_seed, seed);
      EXPECT_EQ(tr.eps_inner, in);
    }
  }
}

}  // namespace
}  // namespace nmc
