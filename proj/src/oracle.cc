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

#include "nmc/oracle.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "nmc/dist.h"

namespace nmc {
namespace {

using u128 = unsigned __int128;

Rational Ratio(u128 num, const mpz_class& den) {
  Rational r(ToMpz(num), den);
  r.canonicalize();
  return r;
}

mpz_class U64(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

void RequireMinEntropy(const WeightedSource& s, std::size_t k) {
  // max weight / total <= 2^-k  <=>  max weight * 2^k <= total
  if ((static_cast<u128>(s.MaxWeight()) << k) > static_cast<u128>(s.total)) {
    throw Error("source below min-entropy k");
  }
}

void RequireTableFits(const FnTable& t, const WeightedSource& s) {
  if (s.n != t.n) throw Error("source length does not match table");
}

// Deterministic max-merge: the largest value wins, ties go to the lowest index.
std::size_t ArgMax(const std::vector<Rational>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

u128 AbsDiff(u128 a, u128 b) { return a > b ? a - b : b - a; }

Tuple Pack(std::uint32_t a, std::size_t la, std::uint32_t b, std::size_t lb) {
  return {BitString::FromU64(a, la), BitString::FromU64(b, lb)};
}

Rational WeightProb(const WeightedSource& s, std::size_t i) {
  Rational r(U64(s.weights[i]), U64(s.total));
  r.canonicalize();
  return r;
}

}  // namespace

mpz_class ToMpz(unsigned __int128 v) {
  const std::uint64_t hi = static_cast<std::uint64_t>(v >> 64);
  const std::uint64_t lo = static_cast<std::uint64_t>(v);
  mpz_class z = U64(hi);
  z <<= 64;
  z += U64(lo);
  return z;
}

// ---- strong seeded extractors -------------------------------------------

Rational StrongExtDistance(const FnTable& t, const WeightedSource& src) {
  RequireTableFits(t, src);
  const std::size_t seeds = std::size_t{1} << t.d;
  const std::size_t outs = std::size_t{1} << t.m;
  std::vector<std::uint64_t> c(outs);
  u128 num = 0;
  for (std::size_t y = 0; y < seeds; ++y) {
    std::fill(c.begin(), c.end(), 0);
    for (std::size_t i = 0; i < src.points.size(); ++i) c[t.At(src.points[i], static_cast<std::uint32_t>(y))] += src.weights[i];
    for (std::size_t z = 0; z < outs; ++z) num += AbsDiff(static_cast<u128>(c[z]) << t.m, src.total);
  }
  mpz_class den = U64(src.total);
  den <<= static_cast<unsigned>(1 + t.m + t.d);
  return Ratio(num, den);
}

Rational StrongExtDistanceReference(const FnTable& t, const WeightedSource& src) {
  RequireTableFits(t, src);
  const Rational py = Pow2(-static_cast<int>(t.d));
  JointDist real({t.m, t.d});
  JointDist ideal({t.m, t.d});
  for (std::uint32_t y = 0; y < (1u << t.d); ++y) {
    for (std::size_t i = 0; i < src.points.size(); ++i) {
      real.Add(Pack(t.At(src.points[i], y), t.m, y, t.d), WeightProb(src, i) * py);
    }
    for (std::uint32_t z = 0; z < (1u << t.m); ++z) ideal.Add(Pack(z, t.m, y, t.d), py * Pow2(-static_cast<int>(t.m)));
  }
  return stat_distance(real, ideal);
}

namespace {

ExtractorReport VerifyStrong(const FnTable& t, const std::vector<WeightedSource>& family, std::size_t k,
                             bool parallel) {
  for (const auto& s : family) RequireMinEntropy(s, k);
  std::vector<Rational> dist(family.size());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(family.size()); ++i) {
      dist[static_cast<std::size_t>(i)] = StrongExtDistance(t, family[static_cast<std::size_t>(i)]);
    }
  } else {
    for (std::size_t i = 0; i < family.size(); ++i) dist[i] = StrongExtDistanceReference(t, family[i]);
  }
  ExtractorReport r;
  r.sources_checked = family.size();
  if (family.empty()) return r;
  r.witness_source = ArgMax(dist);
  r.worst_distance = dist[r.witness_source];
  return r;
}

}  // namespace

ExtractorReport verify_strong_extractor(const FnTable& t, const std::vector<WeightedSource>& family,
                                        std::size_t k) {
  return VerifyStrong(t, family, k, true);
}

ExtractorReport verify_strong_extractor_serial(const FnTable& t, const std::vector<WeightedSource>& family,
                                               std::size_t k) {
  return VerifyStrong(t, family, k, false);
}

// ---- two-source extractors ----------------------------------------------

TwoSourceReport verify_two_source(const FnTable& t, const std::vector<WeightedSource>& x_family,
                                  std::size_t k2) {
  if (k2 > t.d) throw Error("min-entropy exceeds seed length");
  const std::size_t seeds = std::size_t{1} << t.d;
  const std::size_t outs = std::size_t{1} << t.m;
  const std::size_t top = std::size_t{1} << k2;
  struct PerX {
    u128 num = 0;
    std::vector<std::uint32_t> ys;
  };
  std::vector<PerX> per(x_family.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(x_family.size()); ++xi) {
    const WeightedSource& src = x_family[static_cast<std::size_t>(xi)];
    RequireTableFits(t, src);
    std::vector<std::pair<u128, std::uint32_t>> per_y(seeds);
    std::vector<std::uint64_t> c(outs);
    for (std::size_t y = 0; y < seeds; ++y) {
      std::fill(c.begin(), c.end(), 0);
      for (std::size_t i = 0; i < src.points.size(); ++i) c[t.At(src.points[i], static_cast<std::uint32_t>(y))] += src.weights[i];
      u128 num = 0;
      for (std::size_t z = 0; z < outs; ++z) num += AbsDiff(static_cast<u128>(c[z]) << t.m, src.total);
      per_y[y] = {num, static_cast<std::uint32_t>(y)};
    }
    // Largest first; equal values keep the smaller seed first.
    std::stable_sort(per_y.begin(), per_y.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    PerX& out = per[static_cast<std::size_t>(xi)];
    for (std::size_t j = 0; j < top; ++j) {
      out.num += per_y[j].first;
      out.ys.push_back(per_y[j].second);
    }
    std::sort(out.ys.begin(), out.ys.end());
  }
  TwoSourceReport r;
  std::vector<Rational> dist(per.size());
  for (std::size_t i = 0; i < per.size(); ++i) {
    mpz_class den = U64(x_family[i].total);
    den <<= static_cast<unsigned>(1 + t.m + k2);
    dist[i] = Ratio(per[i].num, den);
  }
  if (per.empty()) return r;
  r.witness_x = ArgMax(dist);
  r.worst_distance = dist[r.witness_x];
  r.witness_y = per[r.witness_x].ys;
  return r;
}

Rational TwoSourceDistanceReference(const FnTable& t, const WeightedSource& x, const WeightedSource& y) {
  RequireTableFits(t, x);
  if (y.n != t.d) throw Error("seed source length does not match table");
  JointDist real({t.m, t.d});
  JointDist ideal({t.m, t.d});
  for (std::size_t j = 0; j < y.points.size(); ++j) {
    const Rational py = WeightProb(y, j);
    for (std::size_t i = 0; i < x.points.size(); ++i) {
      real.Add(Pack(t.At(x.points[i], y.points[j]), t.m, y.points[j], t.d), WeightProb(x, i) * py);
    }
    for (std::uint32_t z = 0; z < (1u << t.m); ++z) {
      ideal.Add(Pack(z, t.m, y.points[j], t.d), py * Pow2(-static_cast<int>(t.m)));
    }
  }
  return stat_distance(real, ideal);
}

// ---- non-malleable extractors -------------------------------------------

Rational NmPairTable::Distance(const AdversaryTable& a) const {
  const std::size_t seeds = std::size_t{1} << d;
  if (a.size() != seeds) throw Error("adversary table size mismatch");
  RequireFixedPointFree(a);
  u128 sum = 0;
  for (std::size_t y = 0; y < seeds; ++y) sum += num[y * seeds + a[y]];
  return Ratio(sum, den);
}

Rational NmPairTable::WorstDistance(AdversaryTable* witness) const {
  const std::size_t seeds = std::size_t{1} << d;
  AdversaryTable a(seeds);
  u128 sum = 0;
  for (std::size_t y = 0; y < seeds; ++y) {
    std::size_t best = y == 0 ? 1 : 0;
    for (std::size_t y2 = 0; y2 < seeds; ++y2) {
      if (y2 != y && num[y * seeds + y2] > num[y * seeds + best]) best = y2;
    }
    a[y] = static_cast<std::uint32_t>(best);
    sum += num[y * seeds + best];
  }
  if (witness != nullptr) *witness = a;
  return Ratio(sum, den);
}

NmPairTable BuildNmPairTable(const FnTable& t, const WeightedSource& src) {
  RequireTableFits(t, src);
  if (t.d == 0) throw Error("non-malleable extractor needs a non-empty seed");
  if (t.m > 12) throw Error("output too wide for the pair-table kernel");
  const std::size_t seeds = std::size_t{1} << t.d;
  const std::size_t outs = std::size_t{1} << t.m;
  NmPairTable p;
  p.d = t.d;
  p.num.assign(seeds * seeds, 0);
  std::vector<std::uint64_t> c(outs * outs);
  std::vector<std::uint64_t> cp(outs);
  for (std::size_t y = 0; y < seeds; ++y) {
    for (std::size_t y2 = 0; y2 < seeds; ++y2) {
      if (y2 == y) continue;
      std::fill(c.begin(), c.end(), 0);
      std::fill(cp.begin(), cp.end(), 0);
      for (std::size_t i = 0; i < src.points.size(); ++i) {
        const std::uint32_t z = t.At(src.points[i], static_cast<std::uint32_t>(y));
        const std::uint32_t z2 = t.At(src.points[i], static_cast<std::uint32_t>(y2));
        c[z * outs + z2] += src.weights[i];
        cp[z2] += src.weights[i];
      }
      u128 num = 0;
      for (std::size_t z2 = 0; z2 < outs; ++z2) {
        if (cp[z2] == 0) continue;
        for (std::size_t z = 0; z < outs; ++z) num += AbsDiff(static_cast<u128>(c[z * outs + z2]) << t.m, cp[z2]);
      }
      p.num[y * seeds + y2] = num;
    }
  }
  p.den = U64(src.total);
  p.den <<= static_cast<unsigned>(1 + t.m + t.d);
  return p;
}

Rational NmExtDistance(const FnTable& t, const WeightedSource& src, const AdversaryTable& a) {
  return BuildNmPairTable(t, src).Distance(a);
}

Rational NmExtDistanceReference(const FnTable& t, const WeightedSource& src, const AdversaryTable& a) {
  RequireTableFits(t, src);
  RequireFixedPointFree(a);
  const Rational py = Pow2(-static_cast<int>(t.d));
  const Rational pu = Pow2(-static_cast<int>(t.m));
  JointDist real({t.m, t.m, t.d});
  JointDist ideal({t.m, t.m, t.d});
  for (std::uint32_t y = 0; y < (1u << t.d); ++y) {
    const BitString ys = BitString::FromU64(y, t.d);
    for (std::size_t i = 0; i < src.points.size(); ++i) {
      const Rational p = WeightProb(src, i) * py;
      const BitString z = BitString::FromU64(t.At(src.points[i], y), t.m);
      const BitString z2 = BitString::FromU64(t.At(src.points[i], a[y]), t.m);
      real.Add({z, z2, ys}, p);
      for (std::uint32_t u = 0; u < (1u << t.m); ++u) ideal.Add({BitString::FromU64(u, t.m), z2, ys}, p * pu);
    }
  }
  return stat_distance(real, ideal);
}

namespace {

NmExtReport VerifyNm(const FnTable& t, const std::vector<WeightedSource>& family,
                     const std::vector<AdversaryTable>& adversaries, bool parallel) {
  for (const auto& a : adversaries) RequireFixedPointFree(a);
  struct PerSource {
    Rational worst = 0;
    std::size_t adversary = 0;
    Rational any = 0;
  };
  std::vector<PerSource> per(family.size());
  auto one = [&](std::size_t i) {
    PerSource& out = per[i];
    if (parallel) {
      const NmPairTable p = BuildNmPairTable(t, family[i]);
      for (std::size_t a = 0; a < adversaries.size(); ++a) {
        Rational v = p.Distance(adversaries[a]);
        if (a == 0 || v > out.worst) {
          out.worst = v;
          out.adversary = a;
        }
      }
      out.any = p.WorstDistance(nullptr);
    } else {
      for (std::size_t a = 0; a < adversaries.size(); ++a) {
        Rational v = NmExtDistanceReference(t, family[i], adversaries[a]);
        if (a == 0 || v > out.worst) {
          out.worst = v;
          out.adversary = a;
        }
      }
      out.any = out.worst;
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(family.size()); ++i) one(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < family.size(); ++i) one(i);
  }
  NmExtReport r;
  r.adversaries_checked = adversaries.size();
  for (std::size_t i = 0; i < per.size(); ++i) {
    if (i == 0 || per[i].worst > r.worst_distance) {
      r.worst_distance = per[i].worst;
      r.witness_source = i;
      r.witness_adversary = adversaries.empty() ? AdversaryTable{} : adversaries[per[i].adversary];
    }
    if (per[i].any > r.worst_any_adversary) r.worst_any_adversary = per[i].any;
  }
  return r;
}

}  // namespace

NmExtReport verify_nm_extractor(const FnTable& t, const std::vector<WeightedSource>& family,
                                const std::vector<AdversaryTable>& adversaries) {
  return VerifyNm(t, family, adversaries, true);
}

NmExtReport verify_nm_extractor_serial(const FnTable& t, const std::vector<WeightedSource>& family,
                                       const std::vector<AdversaryTable>& adversaries) {
  return VerifyNm(t, family, adversaries, false);
}

}  // namespace nmc
