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

#include "nmc/fn_table.h"

#include <limits>

#include "nmc/seeds.h"

namespace nmc {

FnTable FnTable::Build(std::size_t n, std::size_t d, std::size_t m, const Fn& f) {
  if (n + d > 26) throw Error("function table too large");
  if (m > 32) throw Error("table outputs limited to 32 bits");
  FnTable t;
  t.n = n;
  t.d = d;
  t.m = m;
  const std::size_t size = std::size_t{1} << (n + d);
  t.out.assign(size, 0);
  std::vector<BitString> seeds(std::size_t{1} << d);
  for (std::size_t y = 0; y < seeds.size(); ++y) seeds[y] = BitString::FromU64(y, d);
  bool failed = false;
  std::string failure;
#pragma omp parallel for schedule(static)
  for (std::int64_t xi = 0; xi < static_cast<std::int64_t>(std::size_t{1} << n); ++xi) {
    const BitString x = BitString::FromU64(static_cast<std::uint64_t>(xi), n);
    for (std::size_t y = 0; y < seeds.size(); ++y) {
      try {
        const BitString z = f(x, seeds[y]);
        if (z.size() != m) throw Error("function output length differs from table width");
        t.out[(static_cast<std::size_t>(xi) << d) | y] = static_cast<std::uint32_t>(z.ToU64());
      } catch (const std::exception& e) {
#pragma omp critical(fn_table_error)
        {
          failed = true;
          failure = e.what();
        }
      }
    }
  }
  if (failed) throw Error(failure);
  return t;
}

bool IsFixedPointFree(const AdversaryTable& a) {
  for (std::size_t y = 0; y < a.size(); ++y) {
    if (a[y] == y) return false;
  }
  return true;
}

void RequireFixedPointFree(const AdversaryTable& a) {
  if (!IsFixedPointFree(a)) throw Error("A(y)=y violates the non-malleability definition");
}

std::uint64_t CountFixedPointFree(std::size_t d) {
  const std::uint64_t base = (std::uint64_t{1} << d) - 1;
  const std::uint64_t digits = std::uint64_t{1} << d;
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i < digits; ++i) {
    if (base != 0 && c > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    c *= base;
  }
  return c;
}

AdversaryTable FixedPointFreeAt(std::size_t d, std::uint64_t index) {
  const std::size_t size = std::size_t{1} << d;
  const std::uint64_t base = size - 1;
  if (base == 0) throw Error("no fixed-point-free function on 0-bit seeds");
  AdversaryTable a(size);
  for (std::size_t pos = size; pos-- > 0;) {
    const std::uint64_t digit = index % base;
    index /= base;
    a[pos] = static_cast<std::uint32_t>(digit < pos ? digit : digit + 1);
  }
  return a;
}

std::vector<AdversaryTable> EnumerateAdversaries(std::size_t d, std::uint64_t cap, std::size_t samples,
                                                 std::uint64_t seed) {
  const std::uint64_t count = CountFixedPointFree(d);
  std::vector<AdversaryTable> out;
  const std::uint64_t first = count < cap ? count : cap;
  for (std::uint64_t i = 0; i < first; ++i) out.push_back(FixedPointFreeAt(d, i));
  if (count > cap) {
    const std::size_t size = std::size_t{1} << d;
    for (std::size_t s = 0; s < samples; ++s) {
      BitRng rng(DeriveSeed(seed, "adversary-sample", s));
      AdversaryTable a(size);
      for (std::size_t y = 0; y < size; ++y) {
        const std::uint64_t v = rng.Below(size - 1);
        a[y] = static_cast<std::uint32_t>(v < y ? v : v + 1);
      }
      out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace nmc
