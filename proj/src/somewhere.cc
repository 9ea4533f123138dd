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

#include "nmc/somewhere.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace nmc {
namespace {

// Distance of the row projection of a flat source to max probability 2^-k_out,
// as a count over |support| (excess = sum max(0, c - |S| / 2^k_out)).
Rational RowDistance(const std::vector<std::uint32_t>& support, const std::vector<std::size_t>& row, std::size_t n,
                     std::size_t k_out) {
  std::map<std::uint32_t, std::uint64_t> counts;
  for (std::uint32_t x : support) {
    std::uint32_t v = 0;
    for (std::size_t pos : row) v = (v << 1) | ((x >> (n - 1 - pos)) & 1u);
    ++counts[v];
  }
  // excess * 2^k_out / (|S| * 2^k_out)
  std::uint64_t excess = 0;
  for (const auto& [v, c] : counts) {
    const std::uint64_t scaled = c << k_out;
    if (scaled > support.size()) excess += scaled - support.size();
  }
  Rational r(excess, static_cast<unsigned long>(support.size()) << k_out);
  r.canonicalize();
  return r;
}

}  // namespace

std::vector<BitString> SomewhereCondenser::Apply(const BitString& x) const {
  if (x.size() != n) throw Error("condenser input length mismatch");
  std::vector<BitString> out;
  for (const auto& row : rows) {
    BitString r(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) r.Set(i, x.Get(row[i]));
    out.push_back(std::move(r));
  }
  return out;
}

SomewhereCondenser IdentityCondenser(std::size_t n) {
  SomewhereCondenser c;
  c.name = "identity";
  c.n = n;
  c.rows.emplace_back(n);
  std::iota(c.rows[0].begin(), c.rows[0].end(), 0);
  return c;
}

SomewhereCondenser BlockSplitCondenser(std::size_t n, std::size_t C) {
  if (C == 0 || n % C != 0) throw Error("block split needs C to divide n");
  SomewhereCondenser c;
  c.name = "block-split";
  c.n = n;
  const std::size_t len = n / C;
  for (std::size_t i = 0; i < C; ++i) {
    std::vector<std::size_t> row(len);
    std::iota(row.begin(), row.end(), i * len);
    c.rows.push_back(std::move(row));
  }
  return c;
}

SomewhereCertificate CertifySomewhere(const SomewhereCondenser& cond, std::size_t k_in, std::size_t k_out) {
  if (cond.n > 8) throw Error("certification limited to n <= 8");
  if (k_out > cond.row_len()) throw Error("target min-entropy exceeds row length");
  const std::size_t universe = std::size_t{1} << cond.n;
  const std::size_t size = std::size_t{1} << k_in;
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), universe, size);
  if (count > 2000000) throw Error("too many flat sources to certify exhaustively");

  std::vector<std::vector<std::uint32_t>> sources;
  std::vector<std::uint32_t> comb(size);
  std::iota(comb.begin(), comb.end(), 0u);
  while (true) {
    sources.push_back(comb);
    std::size_t i = size;
    while (i > 0 && comb[i - 1] == universe - size + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < size; ++j) comb[j] = comb[j - 1] + 1;
  }
  std::vector<Rational> best(sources.size());
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(sources.size()); ++s) {
    Rational b = 1;
    for (const auto& row : cond.rows) {
      Rational d = RowDistance(sources[static_cast<std::size_t>(s)], row, cond.n, k_out);
      if (d < b) b = d;
    }
    best[static_cast<std::size_t>(s)] = b;
  }
  SomewhereCertificate cert;
  cert.k_in = k_in;
  cert.k_out = k_out;
  cert.sources = sources.size();
  std::size_t arg = 0;
  for (std::size_t s = 1; s < best.size(); ++s) {
    if (best[s] > best[arg]) arg = s;
  }
  cert.eps = best[arg];
  cert.witness = sources[arg];
  return cert;
}

SomewhereCondenser SearchCertifiedCondenser(std::size_t n, std::size_t n_prime, std::size_t k_in,
                                            std::size_t k_out, SomewhereCertificate* cert) {
  if (n_prime == 0 || n_prime > n) throw Error("invalid row length");
  SomewhereCondenser best;
  SomewhereCertificate best_cert;
  bool have = false;
  std::vector<std::size_t> row1(n_prime);
  std::iota(row1.begin(), row1.end(), 0);
  std::vector<std::size_t> row2 = row1;
  while (true) {
    SomewhereCondenser cand;
    cand.name = "searched";
    cand.n = n;
    cand.rows = {row1, row2};
    SomewhereCertificate c = CertifySomewhere(cand, k_in, k_out);
    if (!have || c.eps < best_cert.eps) {
      best = cand;
      best_cert = c;
      have = true;
    }
    std::size_t i = n_prime;
    while (i > 0 && row2[i - 1] == n - n_prime + (i - 1)) --i;
    if (i == 0) break;
    ++row2[i - 1];
    for (std::size_t j = i; j < n_prime; ++j) row2[j] = row2[j - 1] + 1;
  }
  if (cert != nullptr) *cert = best_cert;
  return best;
}

const SomewhereCondenser& LookupSomewhereCondenser(std::size_t n, std::size_t C, std::size_t n_prime) {
  static std::mutex mu;
  static std::map<std::tuple<std::size_t, std::size_t, std::size_t>, SomewhereCondenser> cache;
  std::lock_guard<std::mutex> lock(mu);
  const auto key = std::make_tuple(n, C, n_prime);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  SomewhereCondenser c;
  if (C == 1 && n_prime == n) {
    c = IdentityCondenser(n);
  } else if (n == 6 && C == 2 && n_prime == 3) {
    c = SearchCertifiedCondenser(6, 3, 2, 2, nullptr);
    c.name = "searched-6-2-3";
  } else if (C > 0 && C * n_prime == n) {
    c = BlockSplitCondenser(n, C);
  } else {
    throw Error("no somewhere-condenser instantiation for these parameters");
  }
  return cache.emplace(key, std::move(c)).first->second;
}

std::vector<BitString> somewhere_condense(const BitString& x, std::size_t C, std::size_t n_prime) {
  return LookupSomewhereCondenser(x.size(), C, n_prime).Apply(x);
}

}  // namespace nmc
