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

#ifndef NMC_REGISTRY_H_
#define NMC_REGISTRY_H_

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "nmc/bitstring.h"
#include "nmc/rational.h"

namespace nmc {

enum class PrimitiveKind { kStrongExt, kTwoSourceExt, kNmExt, kMac, kSomewhereCond, kEditCode };

std::string KindName(PrimitiveKind k);
PrimitiveKind ParseKind(const std::string& s);

// A registered instantiation: its signature and claimed contract.
//   strong_ext:     inputs [n, d], output m, claims (k, eps)
//   two_source_ext: inputs [n1, n2], output m, claims (k, k2, eps)
//   nm_ext:         inputs [n, d], output m, claims (k, eps)
//   mac:            inputs [2v, chunks * v], output v, claims eps
//   somewhere_cond: inputs [n], output n' per row, rows C, claims (k, k_out, eps)
//   edit_code:      inputs [lambda_m], output lambda_c, param r, claims e
struct PrimitiveId {
  std::string name;
  PrimitiveKind kind = PrimitiveKind::kStrongExt;
  std::vector<std::size_t> input_lengths;
  std::size_t output_len = 0;
  std::size_t claimed_k = 0;
  std::size_t claimed_k2 = 0;  // two_source_ext: k2; somewhere_cond: k_out
  std::size_t rows = 0;        // somewhere_cond: C
  std::size_t param_r = 0;     // edit_code: repetition count
  Rational claimed_eps = 0;    // edit_code: claimed e (a lower bound)
  // Verification family: flat sources (cap + seeded samples), adversaries.
  std::size_t family_cap = 500;
  std::size_t family_samples = 0;
  std::uint64_t adversary_cap = 100000;
  std::size_t adversary_samples = 0;
  std::uint64_t seed = 1;

  nlohmann::json ToJson() const;
  static PrimitiveId FromJson(const nlohmann::json& j);
};

struct Certification {
  std::string name;
  std::string kind;
  bool passed = false;
  Rational measured = 0;  // worst distance / advantage / certified e
  Rational claimed = 0;
  std::string witness;    // human-readable worst case
  std::size_t instances = 0;

  nlohmann::json ToJson() const;
  static Certification FromJson(const nlohmann::json& j);
};

Certification CertifyPrimitive(const PrimitiveId& p);

// Immutable after load. Every entry is certified by Certify() before a
// protocol may rely on it.
class Registry {
 public:
  static Registry FromJson(const nlohmann::json& j);
  // Throws Error if the file is unreadable or malformed.
  static Registry LoadManifest(const std::string& path);
  nlohmann::json ToJson() const;

  const std::vector<PrimitiveId>& entries() const { return entries_; }
  const PrimitiveId& Get(const std::string& name) const;

  // Throws Error("signature violation: ...") unless the input and output
  // lengths match the declared signature.
  void CheckCall(const std::string& name, const std::vector<std::size_t>& input_lengths,
                 std::size_t output_len) const;
  // Signature-checked call of a function-valued primitive (extractors, MAC).
  BitString Call(const std::string& name, const std::vector<BitString>& inputs) const;

  std::vector<Certification> CertifyAll() const;

 private:
  std::vector<PrimitiveId> entries_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace nmc

#endif  // NMC_REGISTRY_H_
