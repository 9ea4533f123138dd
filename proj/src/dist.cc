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

#include "nmc/dist.h"

#include <set>

namespace nmc {

Dist Dist::Uniform(std::size_t n) {
  if (n > 24) throw Error("uniform distribution too large to enumerate");
  Dist d(n);
  const Rational p = Pow2(-static_cast<int>(n));
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) d.Add(BitString::FromU64(v, n), p);
  return d;
}

Dist Dist::PointMass(const BitString& x) {
  Dist d(x.size());
  d.Add(x, Rational(1));
  return d;
}

Dist Dist::Flat(const std::vector<BitString>& points) {
  if (points.empty()) throw Error("flat distribution needs at least one point");
  std::set<BitString> distinct(points.begin(), points.end());
  if (distinct.size() != points.size()) throw Error("flat distribution points must be distinct");
  Dist d(points.front().size());
  const Rational p(1, static_cast<unsigned long>(points.size()));
  for (const auto& x : points) d.Add(x, p);
  return d;
}

void Dist::Add(const BitString& x, const Rational& p) {
  if (x.size() != domain_len_) throw Error("domain length mismatch");
  if (sgn(p) < 0) throw Error("negative probability");
  if (sgn(p) == 0) return;
  support_[x] += p;
}

Rational Dist::Total() const {
  Rational t = 0;
  for (const auto& [x, p] : support_) t += p;
  return t;
}

void Dist::Validate() const {
  if (Total() != 1) throw Error("probabilities do not sum to 1");
}

Rational Dist::Prob(const BitString& x) const {
  auto it = support_.find(x);
  return it == support_.end() ? Rational(0) : it->second;
}

Rational Dist::MaxProb() const {
  if (support_.empty()) throw Error("empty support");
  Rational m = 0;
  for (const auto& [x, p] : support_) {
    if (p > m) m = p;
  }
  return m;
}

JointDist JointDist::Product(const Dist& a, const Dist& b) {
  JointDist j({a.domain_len(), b.domain_len()});
  for (const auto& [x, p] : a.support()) {
    for (const auto& [y, q] : b.support()) j.Add({x, y}, p * q);
  }
  return j;
}

void JointDist::Add(const Tuple& x, const Rational& p) {
  if (x.size() != lengths_.size()) throw Error("tuple arity mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].size() != lengths_[i]) throw Error("component length mismatch");
  }
  if (sgn(p) < 0) throw Error("negative probability");
  if (sgn(p) == 0) return;
  support_[x] += p;
}

void JointDist::Validate() const {
  Rational t = 0;
  for (const auto& [x, p] : support_) t += p;
  if (t != 1) throw Error("probabilities do not sum to 1");
}

Dist JointDist::MarginalDist(std::size_t index) const {
  if (index >= arity()) throw Error("component index out of range");
  Dist d(lengths_[index]);
  for (const auto& [x, p] : support_) d.Add(x[index], p);
  return d;
}

JointDist JointDist::Marginal(const std::vector<std::size_t>& indices) const {
  std::vector<std::size_t> lens;
  for (std::size_t i : indices) {
    if (i >= arity()) throw Error("component index out of range");
    lens.push_back(lengths_[i]);
  }
  JointDist j(lens);
  for (const auto& [x, p] : support_) {
    Tuple t;
    for (std::size_t i : indices) t.push_back(x[i]);
    j.Add(t, p);
  }
  return j;
}

JointDist JointDist::Condition(std::size_t index, const BitString& value) const {
  if (index >= arity()) throw Error("component index out of range");
  std::vector<std::size_t> lens;
  for (std::size_t i = 0; i < arity(); ++i) {
    if (i != index) lens.push_back(lengths_[i]);
  }
  Rational mass = 0;
  for (const auto& [x, p] : support_) {
    if (x[index] == value) mass += p;
  }
  if (sgn(mass) == 0) throw Error("zero-probability condition");
  JointDist j(lens);
  for (const auto& [x, p] : support_) {
    if (x[index] != value) continue;
    Tuple t;
    for (std::size_t i = 0; i < arity(); ++i) {
      if (i != index) t.push_back(x[i]);
    }
    j.Add(t, p / mass);
  }
  return j;
}

Dist JointDist::Flatten() const {
  std::size_t total = 0;
  for (std::size_t l : lengths_) total += l;
  Dist d(total);
  for (const auto& [x, p] : support_) d.Add(Concat(x), p);
  return d;
}

Rational stat_distance(const Dist& a, const Dist& b) {
  if (a.domain_len() != b.domain_len()) throw Error("domain length mismatch");
  Rational sum = 0;
  for (const auto& [x, p] : a.support()) sum += abs(p - b.Prob(x));
  for (const auto& [x, q] : b.support()) {
    if (a.support().count(x) == 0) sum += q;
  }
  return sum / 2;
}

Rational stat_distance(const JointDist& a, const JointDist& b) {
  if (a.lengths() != b.lengths()) throw Error("domain length mismatch");
  Rational sum = 0;
  for (const auto& [x, p] : a.support()) {
    auto it = b.support().find(x);
    sum += abs(p - (it == b.support().end() ? Rational(0) : it->second));
  }
  for (const auto& [x, q] : b.support()) {
    if (a.support().count(x) == 0) sum += q;
  }
  return sum / 2;
}

double min_entropy(const Dist& d) {
  if (d.support().empty()) throw Error("empty support");
  return -Log2(d.MaxProb());
}

Rational avg_guess_prob(const JointDist& j) {
  if (j.arity() != 2) throw Error("average conditional min-entropy needs a joint of arity 2");
  std::map<BitString, Rational> best;  // w -> max_x Pr[X=x, W=w]
  for (const auto& [t, p] : j.support()) {
    Rational& b = best[t[1]];
    if (p > b) b = p;
  }
  Rational sum = 0;
  for (const auto& [w, p] : best) sum += p;
  return sum;
}

double avg_cond_min_entropy(const JointDist& j) { return -Log2(avg_guess_prob(j)); }

Dist condition(const JointDist& j, std::size_t index, const BitString& value) {
  if (j.arity() != 2) throw Error("condition needs a joint of arity 2");
  JointDist c = j.Condition(index, value);
  return c.MarginalDist(0);
}

Rational distance_to_cap(const Dist& d, const Rational& cap) {
  if (d.domain_len() < 63 && cap * Rational(mpz_class(1) << static_cast<unsigned>(d.domain_len())) < 1) {
    throw Error("cap unattainable on this domain");
  }
  Rational excess = 0;
  for (const auto& [x, p] : d.support()) {
    if (p > cap) excess += p - cap;
  }
  return excess;
}

Rational distance_to_min_entropy(const Dist& d, int k) { return distance_to_cap(d, Pow2(-k)); }

Dist Map(const Dist& d, std::size_t out_len, const std::function<BitString(const BitString&)>& f) {
  Dist out(out_len);
  for (const auto& [x, p] : d.support()) out.Add(f(x), p);
  return out;
}

}  // namespace nmc
