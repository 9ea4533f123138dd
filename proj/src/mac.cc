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

#include "nmc/mac.h"

#include <algorithm>
#include <map>

#include "nmc/gf2.h"

namespace nmc {
namespace {

constexpr double kExhaustiveBudget = 3.0e10;

std::uint32_t TagU(std::uint32_t key, std::uint32_t msg, std::size_t v, std::size_t chunks) {
  const int w = static_cast<int>(v);
  const std::uint32_t mask = (1u << v) - 1;
  const std::uint64_t k1 = key >> v;
  const std::uint64_t k2 = key & mask;
  std::uint64_t acc = 0;
  for (std::size_t i = chunks; i >= 1; --i) {
    const std::uint64_t mi = (msg >> ((chunks - i) * v)) & mask;  // chunk 1 is leftmost
    acc = GfMul(acc ^ mi, k1, w);
  }
  return static_cast<std::uint32_t>(acc ^ k2);
}

void RequireExhaustive(std::size_t v, std::size_t chunks, std::size_t keys) {
  if (v == 0) throw Error("tag length must be positive");
  if (v > 8 || v * chunks > 16) throw Error("parameters too large for exhaustive evaluation; use sampling mode");
  const double msgs = static_cast<double>(std::size_t{1} << (v * chunks));
  const double tags = static_cast<double>(std::size_t{1} << v);
  if (msgs * msgs * (static_cast<double>(keys) + tags * tags) > kExhaustiveBudget) {
    throw Error("forgery enumeration too large; use sampling mode");
  }
}

}  // namespace

BitString mac_tag(const BitString& key, const BitString& msg, std::size_t v) {
  if (v == 0 || v > static_cast<std::size_t>(kMaxFieldWidth)) throw Error("unsupported tag length");
  if (key.size() != 2 * v) throw Error("key length must be twice the tag length");
  const int w = static_cast<int>(v);
  const std::uint64_t k1 = key.Slice(0, v).ToU64();
  const std::uint64_t k2 = key.Slice(v, v).ToU64();
  const std::size_t chunks = (msg.size() + v - 1) / v;
  const BitString padded = msg.Resized(chunks * v);
  std::uint64_t acc = 0;
  for (std::size_t i = chunks; i >= 1; --i) acc = GfMul(acc ^ padded.Slice((i - 1) * v, v).ToU64(), k1, w);
  return BitString::FromU64(acc ^ k2, v);
}

KeyLeakDist KeyLeakDist::Uniform(std::size_t v) {
  KeyLeakDist d;
  for (std::uint32_t k = 0; k < (1u << (2 * v)); ++k) {
    d.keys.push_back(k);
    d.leaks.push_back(0);
    d.weights.push_back(1);
  }
  return d;
}

KeyLeakDist KeyLeakDist::FlatOn(const std::vector<std::uint32_t>& keys) {
  KeyLeakDist d;
  for (std::uint32_t k : keys) {
    d.keys.push_back(k);
    d.leaks.push_back(0);
    d.weights.push_back(1);
  }
  return d;
}

KeyLeakDist KeyLeakDist::Revealed(std::size_t v) {
  KeyLeakDist d = Uniform(v);
  d.leaks = d.keys;
  return d;
}

std::uint64_t KeyLeakDist::Total() const {
  std::uint64_t t = 0;
  for (auto w : weights) t += w;
  return t;
}

Rational KeyLeakDist::GuessProb() const {
  std::map<std::uint32_t, std::map<std::uint32_t, std::uint64_t>> by_leak;
  for (std::size_t i = 0; i < keys.size(); ++i) by_leak[leaks[i]][keys[i]] += weights[i];
  std::uint64_t sum = 0;
  for (const auto& [e, m] : by_leak) {
    std::uint64_t best = 0;
    for (const auto& [k, w] : m) best = std::max(best, w);
    sum += best;
  }
  Rational r(sum, Total());
  r.canonicalize();
  return r;
}

Rational mac_forgery_advantage(std::size_t v, std::size_t chunks) {
  return mac_forgery_advantage(v, chunks, KeyLeakDist::Uniform(v));
}

Rational mac_forgery_advantage(std::size_t v, std::size_t chunks, const KeyLeakDist& dist) {
  RequireExhaustive(v, chunks, dist.keys.size());
  if (chunks == 0) throw Error("message must have at least one chunk");
  const std::size_t msgs = std::size_t{1} << (v * chunks);
  const std::size_t tags = std::size_t{1} << v;

  std::map<std::uint32_t, std::vector<std::size_t>> groups;  // leak -> key indices
  for (std::size_t i = 0; i < dist.keys.size(); ++i) {
    if (dist.keys[i] >= (1u << (2 * v))) throw Error("key outside key space");
    groups[dist.leaks[i]].push_back(i);
  }

  std::uint64_t total_success = 0;
  for (const auto& [leak, idx] : groups) {
    const std::size_t nk = idx.size();
    // tag[w * nk + j] for the j-th key of the group.
    std::vector<std::uint8_t> tag(msgs * nk);
    for (std::size_t w = 0; w < msgs; ++w) {
      for (std::size_t j = 0; j < nk; ++j) {
        tag[w * nk + j] = static_cast<std::uint8_t>(TagU(dist.keys[idx[j]], static_cast<std::uint32_t>(w), v, chunks));
      }
    }
    std::vector<std::uint64_t> per_w(msgs, 0);
#pragma omp parallel
    {
      std::vector<std::uint64_t> cnt(tags * tags);
      std::vector<std::uint64_t> best(tags);
#pragma omp for schedule(dynamic, 16)
      for (std::int64_t wi = 0; wi < static_cast<std::int64_t>(msgs); ++wi) {
        const std::size_t w = static_cast<std::size_t>(wi);
        std::fill(best.begin(), best.end(), 0);
        for (std::size_t w2 = 0; w2 < msgs; ++w2) {
          if (w2 == w) continue;
          std::fill(cnt.begin(), cnt.end(), 0);
          for (std::size_t j = 0; j < nk; ++j) {
            cnt[tag[w * nk + j] * tags + tag[w2 * nk + j]] += dist.weights[idx[j]];
          }
          for (std::size_t t = 0; t < tags; ++t) {
            const auto row = cnt.begin() + static_cast<std::ptrdiff_t>(t * tags);
            best[t] = std::max(best[t], *std::max_element(row, row + static_cast<std::ptrdiff_t>(tags)));
          }
        }
        std::uint64_t s = 0;
        for (auto b : best) s += b;
        per_w[w] = s;
      }
    }
    total_success += *std::max_element(per_w.begin(), per_w.end());
  }
  Rational r(total_success, dist.Total());
  r.canonicalize();
  return r;
}

Rational MacForgeryAdvantageByForgerTables(std::size_t v, std::size_t chunks) {
  const std::size_t msgs = std::size_t{1} << (v * chunks);
  const std::size_t tags = std::size_t{1} << v;
  const std::size_t keys = std::size_t{1} << (2 * v);
  const std::size_t choices = (msgs - 1) * tags;  // (w' != w, t') per observed tag
  double count = 1;
  for (std::size_t t = 0; t < tags; ++t) count *= static_cast<double>(choices);
  if (count * static_cast<double>(msgs) * static_cast<double>(keys) > 5e8) {
    throw Error("forger-table enumeration too large");
  }
  std::uint64_t best = 0;
  for (std::size_t w = 0; w < msgs; ++w) {
    std::vector<std::size_t> digit(tags, 0);
    while (true) {
      std::uint64_t wins = 0;
      for (std::size_t k = 0; k < keys; ++k) {
        const std::uint32_t t = TagU(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(w), v, chunks);
        const std::size_t c = digit[t];
        std::size_t w2 = c / tags;
        if (w2 >= w) ++w2;
        const std::uint32_t t2 = static_cast<std::uint32_t>(c % tags);
        if (TagU(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(w2), v, chunks) == t2) ++wins;
      }
      best = std::max(best, wins);
      std::size_t p = 0;
      while (p < tags && ++digit[p] == choices) digit[p++] = 0;
      if (p == tags) break;
    }
  }
  Rational r(best, keys);
  r.canonicalize();
  return r;
}

Rational MacForgeryBound(std::size_t v, std::size_t chunks, const KeyLeakDist& dist) {
  return Rational(static_cast<unsigned long>(chunks)) * Pow2(static_cast<int>(v)) * dist.GuessProb();
}

}  // namespace nmc
