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

#ifndef NMC_EDIT_CODE_H_
#define NMC_EDIT_CODE_H_

#include "nmc/bitstring.h"
#include "nmc/rational.h"

namespace nmc {

// Repetition-and-marker code: each message bit b becomes b^r followed by
// the marker "01", so lambda_c = lambda_m * (r + 2).
struct EditCode {
  std::size_t lambda_m = 1;
  std::size_t r = 2;

  std::size_t lambda_c() const { return lambda_m * (r + 2); }
  Rational rate() const;  // lambda_m / lambda_c
  BitString Encode(const BitString& m) const;
};

// Throws Error on a message of the wrong length.
BitString edit_encode(const EditCode& code, const BitString& m);

// Levenshtein distance over bits (insert, delete, alter).
std::size_t edit_distance(const BitString& a, const BitString& b);

struct EditCertificate {
  std::size_t min_distance = 0;
  Rational e = 0;  // min_distance / lambda_c
  std::size_t pairs = 0;
  BitString witness_a, witness_b;
};

// Exhaustive over all message pairs. Requires lambda_m <= 10.
EditCertificate CertifyEditCode(const EditCode& code);
EditCertificate CertifyEditCodeSerial(const EditCode& code);

// True iff all 2^lambda_m codewords are distinct. Requires lambda_m <= 16.
bool IsInjective(const EditCode& code);

}  // namespace nmc

#endif  // NMC_EDIT_CODE_H_
