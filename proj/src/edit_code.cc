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

#include "nmc/edit_code.h"

#include <algorithm>
#include <limits>
#include <set>
#include <vector>

namespace nmc {

Rational EditCode::rate() const {
  Rational r(lambda_m, lambda_c());
  r.canonicalize();
  return r;
}

BitString EditCode::Encode(const BitString& m) const {
  if (m.size() != lambda_m) throw Error("message length does not match the code");
  BitString c(lambda_c());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < r; ++j) c.Set(pos++, m.Get(i));
    ++pos;              // marker 0
    c.Set(pos++, true);  // marker 1
  }
  return c;
}

BitString edit_encode(const EditCode& code, const BitString& m) { return code.Encode(m); }

std::size_t edit_distance(const BitString& a, const BitString& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    const bool ai = a.Get(i - 1);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ai != b.Get(j - 1) ? 1 : 0)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

namespace {

EditCertificate Certify(const EditCode& code, bool parallel) {
  if (code.lambda_m > 10) throw Error("exhaustive certification limited to lambda_m <= 10");
  const std::size_t count = std::size_t{1} << code.lambda_m;
  std::vector<BitString> words(count);
  for (std::size_t m = 0; m < count; ++m) words[m] = code.Encode(BitString::FromU64(m, code.lambda_m));
  EditCertificate cert;
  cert.pairs = count * (count - 1) / 2;
  if (count < 2) {
    cert.min_distance = 0;
    return cert;
  }
  // Per first index: smallest distance and its partner.
  std::vector<std::pair<std::size_t, std::size_t>> best(count, {std::numeric_limits<std::size_t>::max(), 0});
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      auto& b = best[static_cast<std::size_t>(i)];
      for (std::size_t j = static_cast<std::size_t>(i) + 1; j < count; ++j) {
        const std::size_t d = edit_distance(words[static_cast<std::size_t>(i)], words[j]);
        if (d < b.first) b = {d, j};
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        const std::size_t d = edit_distance(words[i], words[j]);
        if (d < best[i].first) best[i] = {d, j};
      }
    }
  }
  std::size_t arg = 0;
  for (std::size_t i = 1; i < count; ++i) {
    if (best[i].first < best[arg].first) arg = i;
  }
  cert.min_distance = best[arg].first;
  cert.e = Rational(cert.min_distance, code.lambda_c());
  cert.e.canonicalize();
  cert.witness_a = words[arg];
  cert.witness_b = words[best[arg].second];
  return cert;
}

}  // namespace

EditCertificate CertifyEditCode(const EditCode& code) { return Certify(code, true); }
EditCertificate CertifyEditCodeSerial(const EditCode& code) { return Certify(code, false); }

bool IsInjective(const EditCode& code) {
  if (code.lambda_m > 16) throw Error("injectivity check limited to lambda_m <= 16");
  std::set<BitString> seen;
  for (std::size_t m = 0; m < (std::size_t{1} << code.lambda_m); ++m) {
    if (!seen.insert(code.Encode(BitString::FromU64(m, code.lambda_m))).second) return false;
  }
  return true;
}

}  // namespace nmc
