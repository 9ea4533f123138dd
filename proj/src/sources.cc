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

#include "nmc/sources.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "nmc/seeds.h"

namespace nmc {

Dist SourceSpec::ToDist() const {
  switch (kind) {
    case SourceKind::kUniform:
      return Dist::Uniform(n);
    case SourceKind::kFlat:
      return Dist::Flat(points);
    case SourceKind::kExplicit: {
      if (points.size() != probs.size()) throw Error("explicit source needs one probability per point");
      Dist d(n);
      for (std::size_t i = 0; i < points.size(); ++i) d.Add(points[i], probs[i]);
      d.Validate();
      return d;
    }
  }
  throw Error("unknown source kind");
}

double SourceSpec::MinEntropy() const { return min_entropy(ToDist()); }

nlohmann::json SourceSpec::ToJson() const {
  static const char* kKinds[] = {"explicit", "flat", "uniform"};
  nlohmann::json j = {{"kind", kKinds[static_cast<int>(kind)]}, {"n", n}};
  if (kind != SourceKind::kUniform) {
    std::vector<std::string> pts;
    for (const auto& x : points) pts.push_back(x.ToString());
    j["points"] = pts;
  }
  if (kind == SourceKind::kExplicit) {
    std::vector<std::string> ps;
    for (const auto& q : probs) ps.push_back(nmc::ToString(q));
    j["probs"] = ps;
  }
  return j;
}

SourceSpec SourceSpec::FromJson(const nlohmann::json& j) {
  static const std::set<std::string> kKeys = {"kind", "n", "points", "probs", "size", "seed", "comment"};
  for (const auto& item : j.items()) {
    if (!kKeys.count(item.key())) throw Error("unknown source field '" + item.key() + "'");
  }
  SourceSpec s;
  const std::string kind = j.at("kind").get<std::string>();
  s.n = j.at("n").get<std::size_t>();
  if (kind == "uniform") {
    s.kind = SourceKind::kUniform;
    return s;
  }
  if (kind == "flat") {
    s.kind = SourceKind::kFlat;
  } else if (kind == "explicit") {
    s.kind = SourceKind::kExplicit;
  } else {
    throw Error("unknown source kind '" + kind + "'");
  }
  if (j.contains("points")) {
    for (const auto& x : j.at("points")) {
      BitString b = BitString::FromString(x.get<std::string>());
      if (b.size() != s.n) throw Error("source point length does not match n");
      s.points.push_back(std::move(b));
    }
  } else if (s.kind == SourceKind::kFlat && j.contains("size")) {
    const auto pts = RandomSubset(s.n, j.at("size").get<std::size_t>(), ParseSeedHex(j.at("seed").get<std::string>()));
    for (std::uint32_t x : pts) s.points.push_back(BitString::FromU64(x, s.n));
  } else {
    throw Error("source needs points");
  }
  if (s.kind == SourceKind::kExplicit) {
    for (const auto& q : j.at("probs")) s.probs.push_back(ParseRational(q.get<std::string>()));
    if (s.probs.size() != s.points.size()) throw Error("explicit source needs one probability per point");
  }
  return s;
}

WeightedSource WeightedSource::Flat(std::size_t n, std::vector<std::uint32_t> points) {
  if (points.empty()) throw Error("flat source needs at least one point");
  WeightedSource s;
  s.n = n;
  s.points = std::move(points);
  s.weights.assign(s.points.size(), 1);
  s.total = s.points.size();
  return s;
}

WeightedSource WeightedSource::Uniform(std::size_t n) {
  if (n > 30) throw Error("source too large to enumerate");
  std::vector<std::uint32_t> pts(std::size_t{1} << n);
  std::iota(pts.begin(), pts.end(), 0u);
  return Flat(n, std::move(pts));
}

WeightedSource WeightedSource::FromDist(const Dist& d) {
  if (d.domain_len() > 30) throw Error("source too large to enumerate");
  mpz_class lcm = 1;
  for (const auto& [x, p] : d.support()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), p.get_den().get_mpz_t());
  if (lcm >= (mpz_class(1) << 62)) throw Error("source weights overflow");
  WeightedSource s;
  s.n = d.domain_len();
  for (const auto& [x, p] : d.support()) {
    mpz_class w = p.get_num() * (lcm / p.get_den());
    s.points.push_back(static_cast<std::uint32_t>(x.ToU64()));
    s.weights.push_back(w.get_ui());
    s.total += w.get_ui();
  }
  return s;
}

Dist WeightedSource::ToDist() const {
  Dist d(n);
  for (std::size_t i = 0; i < points.size(); ++i) {
    d.Add(BitString::FromU64(points[i], n),
          Rational(mpz_class(std::to_string(weights[i])), mpz_class(std::to_string(total))));
  }
  return d;
}

std::uint64_t WeightedSource::MaxWeight() const {
  return weights.empty() ? 0 : *std::max_element(weights.begin(), weights.end());
}

std::vector<std::uint32_t> RandomSubset(std::size_t n, std::size_t size, std::uint64_t seed) {
  const std::uint64_t universe = std::uint64_t{1} << n;
  if (size > universe) throw Error("subset larger than universe");
  BitRng rng(seed);
  std::vector<std::uint32_t> out;
  if (size * 2 > universe) {
    // Partial Fisher-Yates over the whole universe.
    std::vector<std::uint32_t> all(universe);
    std::iota(all.begin(), all.end(), 0u);
    for (std::size_t i = 0; i < size; ++i) {
      std::size_t j = i + rng.Below(universe - i);
      std::swap(all[i], all[j]);
    }
    out.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
  } else {
    std::set<std::uint32_t> chosen;
    while (chosen.size() < size) chosen.insert(static_cast<std::uint32_t>(rng.Below(universe)));
    out.assign(chosen.begin(), chosen.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

FlatFamily MakeFlatFamily(std::size_t n, std::size_t k, std::size_t cap, std::size_t samples,
                          std::uint64_t seed) {
  if (k > n) throw Error("min-entropy exceeds source length");
  if (n > 30) throw Error("source too large to enumerate");
  const std::uint64_t universe = std::uint64_t{1} << n;
  const std::size_t size = std::size_t{1} << k;
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), universe, size);

  FlatFamily fam;
  fam.exhaustive = count <= cap;
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::uint32_t> comb(size);
  std::iota(comb.begin(), comb.end(), 0u);
  while (fam.sources.size() < cap) {
    seen.insert(comb);
    fam.sources.push_back(WeightedSource::Flat(n, comb));
    // Next combination in lexicographic order.
    std::size_t i = size;
    while (i > 0 && comb[i - 1] == universe - size + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < size; ++j) comb[j] = comb[j - 1] + 1;
  }
  if (!fam.exhaustive) {
    for (std::size_t s = 0; s < samples; ++s) {
      auto pts = RandomSubset(n, size, DeriveSeed(seed, "flat-sample", s));
      if (seen.insert(pts).second) fam.sources.push_back(WeightedSource::Flat(n, std::move(pts)));
    }
  }
  fam.description = "flat " + std::to_string(k) + "-sources on " + std::to_string(n) + " bits, " +
                    (fam.exhaustive ? "exhaustive" : "first " + std::to_string(cap) + " + seeded sample") +
                    " (" + std::to_string(fam.sources.size()) + " sources)";
  return fam;
}

}  // namespace nmc
