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

#include "nmc/topheavy.h"

namespace nmc {
namespace {

// Suffix counts c[j] = |{e in s : e >= j}| for j = 1..t+1.
std::vector<std::uint32_t> SuffixCounts(const std::vector<std::size_t>& s, std::size_t t) {
  std::vector<std::uint32_t> c(t + 2, 0);
  for (std::size_t e : s) {
    if (e < 1 || e > t) throw Error("set element outside [1, t]");
    ++c[e];
  }
  for (std::size_t j = t; j >= 1; --j) c[j] += c[j + 1];
  return c;
}

TopHeavySweep Sweep(std::size_t m, bool parallel) {
  if (m == 0 || m > 16) throw Error("top-heavy sweep needs 1 <= m <= 16");
  const std::size_t t = 4 * m;
  const std::size_t count = std::size_t{1} << m;
  std::vector<std::vector<std::uint32_t>> suffix(count);
  for (std::size_t mu = 0; mu < count; ++mu) {
    suffix[mu] = SuffixCounts(topheavy_map(BitString::FromU64(mu, m)).elems, t);
  }
  TopHeavySweep out;
  out.m = m;
  out.pairs = static_cast<std::uint64_t>(count) * (count - 1);
  std::uint64_t failures = 0;
  auto check = [&](std::size_t a) {
    std::uint64_t f = 0;
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b) continue;
      bool ok = false;
      for (std::size_t j = 1; j <= t && !ok; ++j) ok = suffix[a][j] > suffix[b][j];
      if (!ok) ++f;
    }
    return f;
  };
  if (parallel) {
#pragma omp parallel for reduction(+ : failures) schedule(static)
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(count); ++a) failures += check(static_cast<std::size_t>(a));
  } else {
    for (std::size_t a = 0; a < count; ++a) failures += check(a);
  }
  out.failures = failures;
  return out;
}

}  // namespace

TopHeavySet topheavy_map(const BitString& mu) {
  if (mu.empty()) throw Error("empty message");
  TopHeavySet s;
  s.source_message = mu;
  for (std::size_t i = 1; i <= mu.size(); ++i) {
    if (mu.Get(i - 1)) {
      s.elems.push_back(4 * i - 2);
      s.elems.push_back(4 * i - 1);
    } else {
      s.elems.push_back(4 * i - 3);
      s.elems.push_back(4 * i);
    }
  }
  return s;
}

TopHeavyResult is_top_heavy(const std::vector<std::size_t>& s1, const std::vector<std::size_t>& s2, std::size_t t) {
  const auto c1 = SuffixCounts(s1, t);
  const auto c2 = SuffixCounts(s2, t);
  for (std::size_t j = 1; j <= t; ++j) {
    if (c1[j] > c2[j]) return {true, j};
  }
  return {false, std::nullopt};
}

std::vector<BitString> la_mac(const std::vector<BitString>& r_rows, const BitString& mu) {
  if (r_rows.size() != 4 * mu.size()) throw Error("la_mac needs exactly 4|mu| rows");
  std::vector<BitString> out;
  for (std::size_t i : topheavy_map(mu).elems) out.push_back(r_rows[i - 1]);
  return out;
}

TopHeavySweep CheckPairwiseTopHeavy(std::size_t m) { return Sweep(m, true); }
TopHeavySweep CheckPairwiseTopHeavySerial(std::size_t m) { return Sweep(m, false); }

}  // namespace nmc
