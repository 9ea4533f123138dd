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

#include "nmc/condenser_verify.h"

#include <algorithm>
#include <functional>
#include <map>

#include "nmc/dist.h"

namespace nmc {
namespace {

Frac Reduce(Frac f) {
  std::int64_t a = f.num, b = f.den;
  while (b != 0) {
    std::int64_t r = a % b;
    a = b;
    b = r;
  }
  if (a > 1) {
    f.num /= a;
    f.den /= a;
  }
  return f;
}

Frac Sub(const Frac& a, const Frac& b) {
  __int128 num = static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
  __int128 den = static_cast<__int128>(a.den) * b.den;
  if (num < 0) throw Error("negative fraction");
  __int128 x = num, y = den;
  while (y != 0) {
    __int128 r = x % y;
    x = y;
    y = r;
  }
  if (x > 1) {
    num /= x;
    den /= x;
  }
  if (den > INT64_MAX) throw Error("fraction overflow");
  return {static_cast<std::int64_t>(num), static_cast<std::int64_t>(den)};
}

bool SamePrefix(std::size_t y, std::size_t y2, std::size_t d, std::size_t prefix_len) {
  const std::size_t shift = d - prefix_len;
  return (y >> shift) == (y2 >> shift);
}

// Per-seed argmax of e(y, y') over y' != y accepted by `keep`.
AdversaryTable BestResponse(const std::vector<Frac>& inner, std::size_t d,
                            const std::function<bool(std::size_t, std::size_t)>& keep) {
  const std::size_t seeds = std::size_t{1} << d;
  AdversaryTable a(seeds);
  for (std::size_t y = 0; y < seeds; ++y) {
    bool found = false;
    std::size_t best = 0;
    for (std::size_t y2 = 0; y2 < seeds; ++y2) {
      if (y2 == y || !keep(y, y2)) continue;
      if (!found || inner[y * seeds + y2] > inner[y * seeds + best]) {
        best = y2;
        found = true;
      }
    }
    if (!found) throw Error("adversary class is empty for some seed");
    a[y] = static_cast<std::uint32_t>(best);
  }
  return a;
}

// H~(part | Z') averaged over seeds, for output bits [lo, lo+len).
double PartEntropy(const FnTable& t, const WeightedSource& src, const AdversaryTable& a, std::size_t lo,
                   std::size_t len) {
  if (len == 0) return 0;
  const std::size_t seeds = std::size_t{1} << t.d;
  Rational guess = 0;
  for (std::size_t y = 0; y < seeds; ++y) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> joint;  // (part, z') -> weight
    for (std::size_t i = 0; i < src.points.size(); ++i) {
      const std::uint32_t z = t.At(src.points[i], static_cast<std::uint32_t>(y));
      const std::uint32_t part = static_cast<std::uint32_t>((std::uint64_t{z} >> (t.m - lo - len)) & ((std::uint64_t{1} << len) - 1));
      joint[{part, t.At(src.points[i], a[y])}] += src.weights[i];
    }
    std::map<std::uint32_t, std::uint64_t> best;
    for (const auto& [key, w] : joint) best[key.second] = std::max(best[key.second], w);
    std::uint64_t sum = 0;
    for (const auto& [zp, w] : best) sum += w;
    guess += Rational(mpz_class(std::to_string(sum)), mpz_class(std::to_string(src.total)));
  }
  guess /= static_cast<unsigned long>(seeds);
  return -Log2(guess);
}

}  // namespace

Rational Frac::ToRational() const {
  Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  r.canonicalize();
  return r;
}

Frac SmallestSelfBoundedEps(std::vector<std::pair<Frac, Frac>> items) {
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // Distinct values u_1 < ... < u_q. On [u_i, u_{i+1}) the tail mass is
  // constant, so the first interval admitting max(u_i, tail) wins.
  Frac tail{1, 1};
  Frac lo{0, 1};
  std::size_t i = 0;
  while (true) {
    const Frac cand = tail > lo ? tail : lo;
    if (i == items.size() || cand < items[i].first) return Reduce(cand);
    const Frac v = items[i].first;
    while (i < items.size() && items[i].first == v) tail = Sub(tail, items[i++].second);
    lo = v;
  }
}

Rational SmallestSelfBoundedEps(const std::vector<std::pair<Rational, Rational>>& items) {
  std::vector<std::pair<Rational, Rational>> sorted = items;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational tail = 1;
  Rational lo = 0;
  std::size_t i = 0;
  while (true) {
    const Rational cand = tail > lo ? tail : lo;
    if (i == sorted.size() || cand < sorted[i].first) return cand;
    const Rational v = sorted[i].first;
    while (i < sorted.size() && sorted[i].first == v) tail -= sorted[i++].second;
    lo = v;
  }
}

std::vector<Frac> InnerErrors(const FnTable& t, const WeightedSource& src, std::size_t kprime) {
  if (kprime > t.m) throw Error("target min-entropy exceeds output length");
  if (src.total >= (std::uint64_t{1} << 40)) throw Error("source weights too large for the condenser kernel");
  const std::size_t seeds = std::size_t{1} << t.d;
  const std::int64_t scale = std::int64_t{1} << kprime;
  const std::int64_t total = static_cast<std::int64_t>(src.total);
  std::vector<Frac> out(seeds * seeds, Frac{0, 1});
  struct Entry {
    std::uint32_t z2, z;
    std::uint64_t w;
  };
  std::vector<Entry> entries(src.points.size());
  std::vector<std::pair<Frac, Frac>> items;
  for (std::size_t y = 0; y < seeds; ++y) {
    for (std::size_t y2 = 0; y2 < seeds; ++y2) {
      if (y2 == y) continue;
      for (std::size_t i = 0; i < src.points.size(); ++i) {
        entries[i] = {t.At(src.points[i], static_cast<std::uint32_t>(y2)),
                      t.At(src.points[i], static_cast<std::uint32_t>(y)), src.weights[i]};
      }
      std::sort(entries.begin(), entries.end(),
                [](const Entry& a, const Entry& b) { return a.z2 != b.z2 ? a.z2 < b.z2 : a.z < b.z; });
      items.clear();
      std::size_t i = 0;
      while (i < entries.size()) {
        std::size_t j = i;
        std::int64_t cz2 = 0;
        while (j < entries.size() && entries[j].z2 == entries[i].z2) cz2 += static_cast<std::int64_t>(entries[j++].w);
        // delta(z') = sum_z max(0, c(z,z') * 2^k' - c(z')) / (c(z') * 2^k')
        std::int64_t excess = 0;
        std::size_t a = i;
        while (a < j) {
          std::size_t b = a;
          std::int64_t c = 0;
          while (b < j && entries[b].z == entries[a].z) c += static_cast<std::int64_t>(entries[b++].w);
          excess += std::max<std::int64_t>(0, c * scale - cz2);
          a = b;
        }
        items.push_back({Reduce({excess, cz2 * scale}), Reduce({cz2, total})});
        i = j;
      }
      out[y * seeds + y2] = SmallestSelfBoundedEps(items);
    }
  }
  return out;
}

std::vector<Rational> InnerErrorsReference(const FnTable& t, const WeightedSource& src, std::size_t kprime) {
  const std::size_t seeds = std::size_t{1} << t.d;
  std::vector<Rational> out(seeds * seeds, Rational(0));
  for (std::size_t y = 0; y < seeds; ++y) {
    for (std::size_t y2 = 0; y2 < seeds; ++y2) {
      if (y2 == y) continue;
      JointDist j({t.m, t.m});
      for (std::size_t i = 0; i < src.points.size(); ++i) {
        Rational p(mpz_class(std::to_string(src.weights[i])), mpz_class(std::to_string(src.total)));
        p.canonicalize();
        j.Add({BitString::FromU64(t.At(src.points[i], static_cast<std::uint32_t>(y)), t.m),
               BitString::FromU64(t.At(src.points[i], static_cast<std::uint32_t>(y2)), t.m)},
              p);
      }
      const Dist zp = j.MarginalDist(1);
      std::vector<std::pair<Rational, Rational>> items;
      for (const auto& [z2, mass] : zp.support()) {
        items.push_back({distance_to_min_entropy(condition(j, 1, z2), static_cast<int>(kprime)), mass});
      }
      out[y * seeds + y2] = SmallestSelfBoundedEps(items);
    }
  }
  return out;
}

NmCondTriple CondenserTriple(const std::vector<Frac>& inner, std::size_t d, const AdversaryTable& a) {
  const std::size_t seeds = std::size_t{1} << d;
  if (a.size() != seeds) throw Error("adversary table size mismatch");
  RequireFixedPointFree(a);
  std::vector<std::pair<Frac, Frac>> items;
  for (std::size_t y = 0; y < seeds; ++y) {
    items.push_back({inner[y * seeds + a[y]], Frac{1, static_cast<std::int64_t>(seeds)}});
  }
  const Frac star = SmallestSelfBoundedEps(items);
  NmCondTriple r;
  r.eps_star = star.ToRational();
  Frac inner_max{0, 1};
  std::int64_t above = 0;
  for (const auto& [v, mass] : items) {
    if (star < v) {
      ++above;
    } else if (inner_max < v) {
      inner_max = v;
    }
  }
  r.eps_seed = Rational(above, static_cast<unsigned long>(seeds));
  r.eps_seed.canonicalize();
  r.eps_inner = inner_max.ToRational();
  return r;
}

NmCondReport verify_nm_condenser(const FnTable& t, const std::vector<WeightedSource>& family,
                                 const NmCondOptions& opt) {
  if (t.d == 0) throw Error("condenser needs a non-empty seed");
  if (opt.prefix_len > t.d) throw Error("prefix longer than seed");
  if (family.empty()) throw Error("empty source family");
  const std::size_t d = t.d;
  const bool split = opt.prefix_len > 0;
  auto any = [](std::size_t, std::size_t) { return true; };
  auto same = [&](std::size_t y, std::size_t y2) { return SamePrefix(y, y2, d, opt.prefix_len); };
  auto diff = [&](std::size_t y, std::size_t y2) { return !SamePrefix(y, y2, d, opt.prefix_len); };
  const bool same_nonempty = split && opt.prefix_len < d;

  struct PerSource {
    NmCondTriple all, same, diff;
    AdversaryTable a_all, a_same, a_diff;
  };
  std::vector<PerSource> per(family.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(family.size()); ++i) {
    const auto& src = family[static_cast<std::size_t>(i)];
    if (src.n != t.n) throw Error("source length does not match table");
    const std::vector<Frac> inner = InnerErrors(t, src, opt.kprime);
    PerSource& p = per[static_cast<std::size_t>(i)];
    p.a_all = BestResponse(inner, d, any);
    p.all = CondenserTriple(inner, d, p.a_all);
    if (split) {
      if (same_nonempty) {
        p.a_same = BestResponse(inner, d, same);
        p.same = CondenserTriple(inner, d, p.a_same);
      }
      p.a_diff = BestResponse(inner, d, diff);
      p.diff = CondenserTriple(inner, d, p.a_diff);
    }
  }

  NmCondReport r;
  r.sources_checked = family.size();
  auto merge = [&](NmCondCase& c, auto triple_of, auto adv_of) {
    for (std::size_t i = 0; i < per.size(); ++i) {
      if (i == 0 || c.worst < triple_of(per[i])) {
        c.worst = triple_of(per[i]);
        c.witness_source = i;
        c.witness_adversary = adv_of(per[i]);
      }
    }
    if (!c.witness_adversary.empty() && opt.v1_len <= t.m) {
      const auto& src = family[c.witness_source];
      c.v1_entropy = PartEntropy(t, src, c.witness_adversary, 0, opt.v1_len);
      c.v2_entropy = PartEntropy(t, src, c.witness_adversary, opt.v1_len, t.m - opt.v1_len);
    }
  };
  merge(r.all, [](const PerSource& p) { return p.all; }, [](const PerSource& p) { return p.a_all; });
  if (split) {
    if (same_nonempty) {
      merge(r.same_prefix, [](const PerSource& p) { return p.same; }, [](const PerSource& p) { return p.a_same; });
    }
    merge(r.diff_prefix, [](const PerSource& p) { return p.diff; }, [](const PerSource& p) { return p.a_diff; });
  }
  return r;
}

}  // namespace nmc
