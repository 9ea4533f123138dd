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

#include <iostream>
#include <map>

#include "golden.h"
#include "nmc/fn_table.h"
#include "nmc/lookahead.h"
#include "nmc/oracle.h"
#include "nmc/primitives.h"
#include "nmc/profile.h"
#include "nmc/seeds.h"
#include "nmc/sources.h"
#include "nmc/topheavy.h"

namespace nmc {
namespace {

using nlohmann::json;

BitString B(const char* s) { return BitString::FromString(s); }

ParameterProfile DeskProfile() { return ParameterProfile::Load(std::string(NMC_DATA_DIR) + "/profiles/lookahead-desk.json"); }

// Suffix counts |S >= j| compared for every j in [1, t].
std::optional<std::size_t> BruteTopHeavyWitness(const std::vector<std::size_t>& s1, const std::vector<std::size_t>& s2,
                                                std::size_t t) {
  for (std::size_t j = 1; j <= t; ++j) {
    std::size_t c1 = 0, c2 = 0;
    for (auto e : s1) c1 += e >= j;
    for (auto e : s2) c2 += e >= j;
    if (c1 > c2) return j;
  }
  return std::nullopt;
}

json RowsJson(const std::vector<BitString>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(r.ToString());
  return a;
}

TEST(AltExtract, ZeroStepsHoldOnlyTheFirstRow) {
  const BitString x = B("10110010"), q = B("0110");
  const AltExtTrace tr = alt_extract(x, q, q.Slice(0, 2), 0, 2);
  ASSERT_EQ(tr.s_rows.size(), 1u);
  ASSERT_EQ(tr.r_rows.size(), 1u);
  EXPECT_EQ(tr.R(0), two_source_ip(q.Slice(0, 2), x, 2));
  EXPECT_TRUE(tr.v_rows.empty());
}

TEST(AltExtract, RowsFollowTheAlternatingDefinition) {
  BitRng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t d = 1 + rng.Below(3), t = rng.Below(6);
    const BitString x = rng.Bits(d + rng.Below(10));
    const BitString q = rng.Bits(d * (1 + rng.Below(4)));
    const BitString s0 = q.Slice(0, d);
    const AltExtTrace tr = alt_extract(x, q, s0, t, d);
    ASSERT_EQ(tr.s_rows.size(), t + 1);
    ASSERT_EQ(tr.r_rows.size(), t + 1);
    BitString r = two_source_ip(s0, x, d);
    EXPECT_EQ(tr.R(0), r);
    for (std::size_t i = 1; i <= t; ++i) {
      const BitString s = ext_hash(q, r, d);
      r = ext_hash(x, s, d);
      EXPECT_EQ(tr.S(i), s);
      EXPECT_EQ(tr.R(i), r);
      EXPECT_EQ(tr.R(i).size(), d);
    }
    EXPECT_EQ(alt_extract(x, q, s0, t, d), tr);
  }
}

TEST(AltExtract, ShortQIsZeroPaddedAndRecorded) {
  const AltExtTrace tr = alt_extract(B("1011"), B("1"), B("10"), 2, 2);
  EXPECT_EQ(tr.q_padding, 1u);
  EXPECT_EQ(tr.S(1), ext_hash(B("10"), tr.R(0), 2));
}

TEST(AltExtract, RejectsBadShapes) {
  EXPECT_THROW(alt_extract(B("1011"), B("1011"), B("101"), 2, 2), Error);
  EXPECT_THROW(alt_extract(B("1011"), B("1011"), B("10"), 2, 0), Error);
  EXPECT_THROW(alt_extract(B("1"), B("1011"), B("10"), 2, 2), Error);
  EXPECT_THROW(alt_extract_v(B("1011"), {B("1111")}, B("1011"), B("10"), 2, 1, 2), Error);
}

TEST(AltExtract, ChangingQLeavesEarlierRowsIntact) {
  // R_j depends on Q only through S_1..S_j, so rows before the first
  // differing S row must agree.
  BitRng rng(9);
  std::size_t crafted = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const BitString x = rng.Bits(8), q = rng.Bits(8);
    BitString q2 = q;
    const std::size_t pos = 2 + rng.Below(6);  // keep the S0 prefix
    q2.Set(pos, !q2[pos]);
    const AltExtTrace a = alt_extract(x, q, q.Slice(0, 2), 4, 2);
    const AltExtTrace b = alt_extract(x, q2, q2.Slice(0, 2), 4, 2);
    std::size_t first = 1;
    while (first <= 4 && a.S(first) == b.S(first)) ++first;
    for (std::size_t j = 0; j < first && j <= 4; ++j) EXPECT_EQ(a.R(j), b.R(j));
    crafted += first > 1;
  }
  EXPECT_GT(crafted, 0u);
}

TEST(AltExtractV, RowLengthsHalveDownToS) {
  const BitString x = B("1011001110001101");
  for (std::size_t t = 1; t <= 4; ++t) {
    std::vector<BitString> xbar(t, B("1101011000111010"));
    const AltExtTrace tr = alt_extract_v(x, xbar, B("01101100"), B("01"), t, 2, 2);
    ASSERT_EQ(tr.v_rows.size(), t);
    for (std::size_t i = 1; i <= t; ++i) {
      EXPECT_EQ(tr.V(i).size(), (std::size_t{1} << (t - i)) * 2);
      EXPECT_EQ(tr.V(i), ext_hash(xbar[i - 1], tr.S(i), tr.V(i).size()));
    }
    EXPECT_EQ(tr.V(t).size(), 2u);
  }
}

TEST(LaExt, ReturnsRowsOneThroughT) {
  const BitString x = B("10110010"), q = B("01101110");
  for (std::size_t t = 1; t <= 5; ++t) {
    const auto rows = la_ext(x, q, q.Slice(0, 4), t, 2);
    ASSERT_EQ(rows.size(), t);
    const AltExtTrace tr = alt_extract(x, q, q.Slice(0, 4), t, 2);
    for (std::size_t i = 1; i <= t; ++i) EXPECT_EQ(rows[i - 1], tr.R(i));
  }
}

TEST(TopHeavy, MapExamples) {
  EXPECT_EQ(topheavy_map(B("0")).elems, (std::vector<std::size_t>{1, 4}));
  EXPECT_EQ(topheavy_map(B("1")).elems, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(topheavy_map(B("10")).elems, (std::vector<std::size_t>{2, 3, 5, 8}));
  EXPECT_THROW(topheavy_map(BitString()), Error);
  BitRng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const BitString mu = rng.Bits(1 + rng.Below(12));
    const TopHeavySet s = topheavy_map(mu);
    EXPECT_EQ(s.elems.size(), 2 * mu.size());
    EXPECT_LE(s.elems.back(), 4 * mu.size());
    EXPECT_EQ(s.source_message, mu);
  }
}

TEST(TopHeavy, PredicateMatchesSuffixCounts) {
  const auto r = is_top_heavy({2, 3}, {1, 4}, 4);
  EXPECT_TRUE(r.top_heavy);
  EXPECT_EQ(r.witness, 2u);
  EXPECT_FALSE(is_top_heavy({1, 4}, {1, 4}, 4).top_heavy);
  EXPECT_THROW(is_top_heavy({5}, {1}, 4), Error);
  BitRng rng(2);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<std::size_t> a, b;
    for (std::size_t e = 1; e <= 8; ++e) {
      if (rng.Below(2)) a.push_back(e);
      if (rng.Below(2)) b.push_back(e);
    }
    const auto got = is_top_heavy(a, b, 8);
    const auto want = BruteTopHeavyWitness(a, b, 8);
    EXPECT_EQ(got.top_heavy, want.has_value());
    EXPECT_EQ(got.witness, want);
  }
}

TEST(TopHeavy, PairwiseExhaustiveUpToFiveBitsAgainstBruteForce) {
  for (std::size_t m = 1; m <= 5; ++m) {
    std::uint64_t failures = 0, pairs = 0;
    for (std::uint64_t a = 0; a < (1u << m); ++a) {
      for (std::uint64_t b = 0; b < (1u << m); ++b) {
        if (a == b) continue;
        ++pairs;
        failures += !BruteTopHeavyWitness(topheavy_map(BitString::FromU64(a, m)).elems,
                                          topheavy_map(BitString::FromU64(b, m)).elems, 4 * m);
      }
    }
    EXPECT_EQ(failures, 0u);
    const TopHeavySweep s = CheckPairwiseTopHeavy(m);
    EXPECT_EQ(s.pairs, pairs);
    EXPECT_EQ(s.failures, 0u);
    EXPECT_EQ(CheckPairwiseTopHeavySerial(m).pairs, pairs);
  }
}

TEST(LaMac, SelectsRowsOfTheMappedSet) {
  const std::vector<BitString> rows = {B("00"), B("01"), B("10"), B("11")};
  EXPECT_EQ(la_mac(rows, B("0")), (std::vector<BitString>{B("00"), B("11")}));
  EXPECT_EQ(la_mac(rows, B("1")), (std::vector<BitString>{B("01"), B("10")}));
  EXPECT_THROW(la_mac(rows, B("01")), Error);
  std::vector<BitString> eight;
  for (std::uint64_t i = 0; i < 8; ++i) eight.push_back(BitString::FromU64(i, 3));
  EXPECT_EQ(la_mac(eight, B("10")).size(), 4u);
}

TEST(Golden, DeskProfileTraces) {
  const ParameterProfile p = DeskProfile();
  BitRng rng(DeriveSeed(1, "lookahead-golden"));
  const BitString x = rng.Bits(p.n), q = rng.Bits(p.y2_len);
  const BitString s0 = q.Slice(0, p.s0_len);
  const AltExtTrace tr = alt_extract(x, q, s0, p.t, p.row_len);
  const auto rows = la_ext(x, q, s0, p.t, p.row_len);
  const BitString mu = rng.Bits(p.t / 4);
  std::vector<BitString> xbar;
  for (int i = 0; i < 2; ++i) xbar.push_back(rng.Bits(p.n));
  const AltExtTrace trv = alt_extract_v(x, xbar, q, s0, 2, 2, p.row_len);
  const json golden = {{"profile", p.name},
                       {"inputs", {{"x", x.ToHex()}, {"q", q.ToHex()}, {"s0", s0.ToHex()}, {"mu", mu.ToString()}}},
                       {"trace", tr.ToJson()},
                       {"la_ext", RowsJson(rows)},
                       {"la_mac", RowsJson(la_mac(rows, mu))},
                       {"trace_v", trv.ToJson()}};
  testing::ExpectGolden("lookahead-desk.json", golden);
  EXPECT_EQ(AltExtTrace::FromJson(tr.ToJson()), tr);
}

// Exact distance of R_i from uniform given R_0..R_{i-1}, the tampered rows
// R'_0..R'_{i-1} and Q, for X uniform on 4 bits, |Q| = 3, d = 1.
Rational TamperedRowDistance(std::size_t i, const AdversaryTable& a) {
  std::map<std::string, std::pair<Rational, Rational>> ctx;  // context -> (Pr[R_i=0, ctx], Pr[ctx])
  const Rational unit = Pow2(-7);
  for (std::uint64_t xv = 0; xv < 16; ++xv) {
    for (std::uint64_t qv = 0; qv < 8; ++qv) {
      const BitString x = BitString::FromU64(xv, 4), q = BitString::FromU64(qv, 3);
      const BitString q2 = BitString::FromU64(a[qv], 3);
      const AltExtTrace tr = alt_extract(x, q, q.Slice(0, 1), i, 1);
      const AltExtTrace tt = alt_extract(x, q2, q2.Slice(0, 1), i, 1);
      std::string key = q.ToString() + "|";
      for (std::size_t j = 0; j < i; ++j) key += tr.R(j).ToString() + tt.R(j).ToString();
      auto& e = ctx[key];
      if (!tr.R(i)[0]) e.first += unit;
      e.second += unit;
    }
  }
  Rational sum = 0;
  for (const auto& [k, e] : ctx) sum += abs(e.first - e.second / 2);
  return sum;
}

TEST(LookAheadProperty, TamperedRowsReportMarginsAgainstMeasuredErrors) {
  // Measured errors of the instantiations at these sizes.
  const FnTable ext_w = FnTable::Build(4, 1, 1, [](const BitString& x, const BitString& s) { return ext_hash(x, s, 1); });
  const FnTable ext_q = FnTable::Build(3, 1, 1, [](const BitString& q, const BitString& r) { return ext_hash(q, r, 1); });
  const FnTable raz = FnTable::Build(4, 1, 1, [](const BitString& x, const BitString& s) { return two_source_ip(s, x, 1); });
  const Rational eps = std::max({StrongExtDistance(ext_w, WeightedSource::Uniform(4)),
                                 StrongExtDistance(ext_q, WeightedSource::Uniform(3)),
                                 StrongExtDistance(raz, WeightedSource::Uniform(4))});
  const auto advs = EnumerateAdversaries(3, 60, 60, 5);
  for (std::size_t i = 1; i <= 3; ++i) {
    Rational worst = 0;
    for (const auto& a : advs) worst = std::max(worst, TamperedRowDistance(i, a));
    const Rational bound = (2 * static_cast<long>(i) + 2) * eps;
    std::cout << "row " << i << ": worst distance " << ToString(worst) << ", (2i+2)eps = " << ToString(bound)
              << ", margin " << ToString(bound - worst) << "\n";
    EXPECT_LE(worst, bound) << "row " << i;
  }
}

}  // namespace
}  // namespace nmc
