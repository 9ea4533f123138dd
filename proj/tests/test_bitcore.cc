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

#include <random>

#include "nmc/bitstring.h"
#include "nmc/gf2.h"
#include "nmc/rational.h"
#include "nmc/seeds.h"

namespace nmc {
namespace {

// Carry-less product followed by polynomial long division.
std::uint64_t PolyMulMod(std::uint64_t a, std::uint64_t b, std::uint64_t mod, int w) {
  unsigned __int128 prod = 0;
  for (int i = 0; i < w; ++i) {
    if ((b >> i) & 1u) prod ^= static_cast<unsigned __int128>(a) << i;
  }
  for (int deg = 2 * w - 2; deg >= w; --deg) {
    if ((prod >> deg) & 1u) prod ^= static_cast<unsigned __int128>(mod) << (deg - w);
  }
  return static_cast<std::uint64_t>(prod);
}

int Degree(std::uint64_t p) { return 63 - __builtin_clzll(p); }

std::uint64_t PolyRem(std::uint64_t a, std::uint64_t b) {
  const int db = Degree(b);
  while (a != 0 && Degree(a) >= db) a ^= b << (Degree(a) - db);
  return a;
}

bool IsIrreducible(std::uint64_t p) {
  const int deg = Degree(p);
  for (std::uint64_t q = 2; Degree(q) <= deg / 2; ++q) {
    if (PolyRem(p, q) == 0) return false;
  }
  return true;
}

BitString RandomBits(std::mt19937_64& rng, std::size_t n) {
  BitString b(n);
  for (std::size_t i = 0; i < n; ++i) b.Set(i, rng() & 1u);
  return b;
}

TEST(BitString, LeftmostBitIsBitZero) {
  const BitString b = BitString::FromString("100");
  EXPECT_TRUE(b[0]);
  EXPECT_FALSE(b[1]);
  EXPECT_EQ(BitString::FromU64(2, 2).ToString(), "10");
  EXPECT_EQ(BitString::FromString("1101").ToU64(), 13u);
}

TEST(BitString, SliceConcatXorExamples) {
  EXPECT_EQ(BitString::FromString("110101").Slice(0, 2).ToString(), "11");
  EXPECT_EQ(Concat(BitString::FromString("10"), BitString::FromString("01")).ToString(), "1001");
  EXPECT_EQ(BitString::FromString("1100").Xor(BitString::FromString("1010")).ToString(), "0110");
}

TEST(BitString, ErrorsOnBadArguments) {
  EXPECT_THROW(BitString::FromString("110").Slice(2, 2), Error);
  EXPECT_THROW(BitString::FromString("11").Xor(BitString::FromString("1")), Error);
  EXPECT_THROW(BitString::FromString("102"), Error);
  EXPECT_THROW(BitString::FromHex("ff", 4), Error);
}

TEST(BitString, HexIsMsbFirstWithZeroPadding) {
  EXPECT_EQ(BitString::FromString("1").ToHex(), "80");
  EXPECT_EQ(BitString::FromString("000100101").ToHex(), "1280");
  EXPECT_EQ(BitString().ToHex(), "");
}

TEST(BitString, SerializationRoundTrips) {
  std::mt19937_64 rng(7);
  for (std::size_t n = 0; n <= 200; ++n) {
    const BitString b = RandomBits(rng, n);
    EXPECT_EQ(BitString::FromHex(b.ToHex(), n), b);
    EXPECT_EQ(BitString::FromString(b.ToString()), b);
  }
}

TEST(BitString, ConsecutiveSlicesReassemble) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng() % 190;
    const BitString b = RandomBits(rng, n);
    std::vector<BitString> parts;
    std::size_t pos = 0;
    while (pos < n) {
      const std::size_t len = std::min<std::size_t>(n - pos, 1 + rng() % 70);
      parts.push_back(b.Slice(pos, len));
      pos += len;
    }
    EXPECT_EQ(Concat(parts), b);
  }
}

TEST(BitString, WordOperationsMatchBitLoops) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng() % 150;
    const BitString a = RandomBits(rng, n), b = RandomBits(rng, n);
    const BitString x = a.Xor(b);
    std::size_t pop = 0;
    bool ip = false;
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(x[i], a[i] != b[i]);
      pop += a[i];
      ip ^= a[i] && b[i];
    }
    EXPECT_EQ(a.Popcount(), pop);
    EXPECT_EQ(Ip(a, b), ip);
    const std::size_t m = rng() % 150;
    const BitString r = a.Resized(m);
    for (std::size_t i = 0; i < m; ++i) EXPECT_EQ(r[i], i < n && a[i]);
  }
}

TEST(BitString, OrderingIsLengthThenLexicographic) {
  EXPECT_LT(BitString::FromString("11"), BitString::FromString("000"));
  EXPECT_LT(BitString::FromString("001"), BitString::FromString("010"));
}

TEST(Ip, Examples) {
  EXPECT_TRUE(Ip(BitString::FromString("101"), BitString::FromString("110")));
  EXPECT_FALSE(Ip(BitString::FromString("1111"), BitString::FromString("1111")));
  for (std::uint64_t y = 0; y < 16; ++y) EXPECT_FALSE(Ip(BitString(4), BitString::FromU64(y, 4)));
  try {
    Ip(BitString(2), BitString(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "unequal lengths");
  }
}

TEST(Ip, IsBilinear) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 100;
    const BitString x = RandomBits(rng, n), x2 = RandomBits(rng, n), y = RandomBits(rng, n);
    EXPECT_EQ(Ip(x.Xor(x2), y), Ip(x, y) != Ip(x2, y));
  }
}

TEST(Gf, ModuliAreIrreducibleOfTheRightDegree) {
  for (int w = 1; w <= kMaxFieldWidth; ++w) {
    const std::uint64_t m = GfModulus(w);
    EXPECT_EQ(Degree(m), w);
    EXPECT_TRUE(IsIrreducible(m)) << "w=" << w;
  }
  EXPECT_THROW(GfModulus(0), Error);
  EXPECT_THROW(GfModulus(kMaxFieldWidth + 1), Error);
}

TEST(Gf, HandExampleInGf4) {
  EXPECT_EQ(GfModulus(2), 0b111u);
  const FieldElem x{0b10, 2};
  EXPECT_EQ(gf_mul(x, x), (FieldElem{0b11, 2}));
}

TEST(Gf, MultiplicationMatchesLongDivision) {
  std::mt19937_64 rng(9);
  for (int w = 1; w <= kMaxFieldWidth; ++w) {
    const std::uint64_t mask = (std::uint64_t{1} << w) - 1;
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t a = rng() & mask, b = rng() & mask;
      EXPECT_EQ(GfMul(a, b, w), PolyMulMod(a, b, GfModulus(w), w));
    }
  }
}

TEST(Gf, FieldAxiomsExhaustiveUpToWidthFour) {
  for (int w = 1; w <= 4; ++w) {
    const std::uint64_t q = std::uint64_t{1} << w;
    for (std::uint64_t a = 0; a < q; ++a) {
      EXPECT_EQ(GfMul(a, 1, w), a);
      EXPECT_EQ(GfMul(a, 0, w), 0u);
      std::vector<bool> seen(q, false);
      for (std::uint64_t b = 0; b < q; ++b) {
        EXPECT_EQ(GfMul(a, b, w), GfMul(b, a, w));
        seen[GfMul(a, b, w)] = true;
        for (std::uint64_t c = 0; c < q; ++c) {
          EXPECT_EQ(GfMul(GfMul(a, b, w), c, w), GfMul(a, GfMul(b, c, w), w));
          EXPECT_EQ(GfMul(a, b ^ c, w), GfMul(a, b, w) ^ GfMul(a, c, w));
        }
      }
      if (a != 0) {
        EXPECT_EQ(std::count(seen.begin(), seen.end(), true), static_cast<long>(q)) << "row " << a;
      }
    }
  }
}

TEST(Gf, PowerAndWidthChecks) {
  for (std::uint64_t a = 1; a < 16; ++a) EXPECT_EQ(GfPow(a, 15, 4), 1u);
  EXPECT_THROW(gf_mul(FieldElem{1, 2}, FieldElem{1, 3}), Error);
  EXPECT_THROW(gf_add(FieldElem{1, 2}, FieldElem{1, 3}), Error);
  EXPECT_EQ(gf_add(FieldElem{0b110, 3}, FieldElem{0b011, 3}), (FieldElem{0b101, 3}));
}

TEST(Rational, FormatAndParse) {
  EXPECT_EQ(ToString(MakeRational(2, 4)), "1/2");
  EXPECT_EQ(ToString(MakeRational(4, 2)), "2");
  EXPECT_EQ(ParseRational("6/8"), MakeRational(3, 4));
  EXPECT_EQ(Pow2(-3), MakeRational(1, 8));
  EXPECT_EQ(Pow2(70) * Pow2(-70), Rational(1));
  EXPECT_THROW(MakeRational(1, 0), Error);
  EXPECT_DOUBLE_EQ(Log2(Pow2(-1000)), -1000.0);
}

TEST(Seeds, DerivationIsDeterministicAndBranchSpecific) {
  EXPECT_EQ(DeriveSeed(1, "alice", 3), DeriveSeed(1, "alice", 3));
  EXPECT_NE(DeriveSeed(1, "alice", 3), DeriveSeed(1, "bob", 3));
  EXPECT_NE(DeriveSeed(1, "alice", 3), DeriveSeed(1, "alice", 4));
  EXPECT_EQ(ParseSeedHex(SeedToHex(0xdeadbeefULL)), 0xdeadbeefULL);
  BitRng a(42), b(42);
  EXPECT_EQ(a.Bits(300), b.Bits(300));
  for (int i = 0; i < 1000; ++i) EXPECT_LT(a.Below(7), 7u);
}

}  // namespace
}  // namespace nmc
