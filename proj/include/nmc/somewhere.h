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

#ifndef NMC_SOMEWHERE_H_
#define NMC_SOMEWHERE_H_

#include <string>
#include <vector>

#include "nmc/bitstring.h"
#include "nmc/rational.h"

namespace nmc {

// A somewhere condenser whose rows are fixed selections of input bits.
struct SomewhereCondenser {
  std::string name;
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> rows;  // bit positions of each row, in order

  std::size_t C() const { return rows.size(); }
  std::size_t row_len() const { return rows.empty() ? 0 : rows.front().size(); }
  std::vector<BitString> Apply(const BitString& x) const;
};

SomewhereCondenser IdentityCondenser(std::size_t n);
// Requires C to divide n.
SomewhereCondenser BlockSplitCondenser(std::size_t n, std::size_t C);

// Worst case over flat k_in-sources on {0,1}^n of the best row's distance to
// an (n', k_out) source. Exhaustive; requires C(2^n, 2^k_in) <= 2e6.
struct SomewhereCertificate {
  std::size_t k_in = 0;
  std::size_t k_out = 0;
  Rational eps = 0;
  std::size_t sources = 0;
  std::vector<std::uint32_t> witness;  // support of the worst source
};
SomewhereCertificate CertifySomewhere(const SomewhereCondenser& cond, std::size_t k_in, std::size_t k_out);

// Exhaustive search for a C = 2 bit-selection condenser on n bits with rows
// of n' bits: row 1 is fixed to the first n' positions (every other choice is
// a relabeling) and row 2 ranges over all n'-subsets in lexicographic order.
// Returns the candidate with the smallest certificate, ties to the first.
SomewhereCondenser SearchCertifiedCondenser(std::size_t n, std::size_t n_prime, std::size_t k_in,
                                            std::size_t k_out, SomewhereCertificate* cert);

// Registered instances: identity (C == 1, n' == n), the searched instance for
// (6, 2, 3) and block split when C * n' == n. Throws Error otherwise.
std::vector<BitString> somewhere_condense(const BitString& x, std::size_t C, std::size_t n_prime);
const SomewhereCondenser& LookupSomewhereCondenser(std::size_t n, std::size_t C, std::size_t n_prime);

}  // namespace nmc

#endif  // NMC_SOMEWHERE_H_
