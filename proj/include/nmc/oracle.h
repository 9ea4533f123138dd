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

#ifndef NMC_ORACLE_H_
#define NMC_ORACLE_H_

#include <cstdint>
#include <vector>

#include "nmc/fn_table.h"
#include "nmc/rational.h"
#include "nmc/sources.h"

namespace nmc {

// Exact verifiers for extractor definitions. Seeds are uniform on {0,1}^d
// throughout. Each verifier has an OpenMP kernel that counts with integer
// weights and a serial reference built from Dist/JointDist; tests check that
// both agree.

// mpz value of a non-negative 128-bit integer.
mpz_class ToMpz(unsigned __int128 v);

// ---- strong seeded extractors -------------------------------------------

// Delta((Ext(X,Y), Y), (U_m, Y)).
Rational StrongExtDistance(const FnTable& t, const WeightedSource& src);
Rational StrongExtDistanceReference(const FnTable& t, const WeightedSource& src);

struct ExtractorReport {
  Rational worst_distance = 0;
  std::size_t witness_source = 0;
  std::size_t sources_checked = 0;
};

// Max over the family. Throws Error("source below min-entropy k") if some
// source has min-entropy below k.
ExtractorReport verify_strong_extractor(const FnTable& t, const std::vector<WeightedSource>& family,
                                        std::size_t k);
ExtractorReport verify_strong_extractor_serial(const FnTable& t, const std::vector<WeightedSource>& family,
                                               std::size_t k);

// ---- two-source extractors ----------------------------------------------

struct TwoSourceReport {
  Rational worst_distance = 0;
  std::size_t witness_x = 0;             // index into the X family
  std::vector<std::uint32_t> witness_y;  // support of the worst flat Y
};

// Max over X in the family and over all flat k2-sources Y of
// Delta((Ext(X,Y), Y), (U_m, Y)). For fixed X the distance is an average of
// per-seed distances, so the worst flat Y takes the 2^k2 largest.
TwoSourceReport verify_two_source(const FnTable& t, const std::vector<WeightedSource>& x_family,
                                  std::size_t k2);
// Delta for one explicit pair of sources, from joint distributions.
Rational TwoSourceDistanceReference(const FnTable& t, const WeightedSource& x, const WeightedSource& y);

// ---- non-malleable extractors -------------------------------------------

// For one source, D[y][y'] = sum_{z,z'} |c(z,z')*2^m - c'(z')| where c counts
// weight of x with (f(x,y), f(x,y')) = (z,z'). The definitional distance of an
// adversary A is sum_y D[y][A(y)] / (2 * 2^m * W * 2^d).
struct NmPairTable {
  std::size_t d = 0;
  std::vector<unsigned __int128> num;  // index y * 2^d + y'
  mpz_class den;
  Rational Distance(const AdversaryTable& a) const;
  // Per-seed best response: the worst distance over every fixed-point-free A.
  Rational WorstDistance(AdversaryTable* witness) const;
};
NmPairTable BuildNmPairTable(const FnTable& t, const WeightedSource& src);

// Delta((nmExt(X,Y), nmExt(X,A(Y)), Y), (U_m, nmExt(X,A(Y)), Y)).
Rational NmExtDistance(const FnTable& t, const WeightedSource& src, const AdversaryTable& a);
Rational NmExtDistanceReference(const FnTable& t, const WeightedSource& src, const AdversaryTable& a);

struct NmExtReport {
  Rational worst_distance = 0;  // over the supplied adversaries
  std::size_t witness_source = 0;
  AdversaryTable witness_adversary;
  Rational worst_any_adversary = 0;  // over all fixed-point-free A
  std::size_t adversaries_checked = 0;
};

// Throws Error if any supplied adversary has a fixed point.
NmExtReport verify_nm_extractor(const FnTable& t, const std::vector<WeightedSource>& family,
                                const std::vector<AdversaryTable>& adversaries);
NmExtReport verify_nm_extractor_serial(const FnTable& t, const std::vector<WeightedSource>& family,
                                       const std::vector<AdversaryTable>& adversaries);

}  // namespace nmc

#endif  // NMC_ORACLE_H_
