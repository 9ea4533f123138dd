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

#ifndef NMC_RATIONAL_H_
#define NMC_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace nmc {

using Rational = mpq_class;

// 2^e for any integer e.
Rational Pow2(int e);
// num / den in lowest terms. Throws Error on den == 0.
Rational MakeRational(std::int64_t num, std::int64_t den);
// "p/q" (or "p" when q == 1), and its inverse.
std::string ToString(const Rational& r);
Rational ParseRational(const std::string& s);
// log2(r) for r > 0, accurate to double precision even for huge numerators
// and denominators.
double Log2(const Rational& r);
double ToDouble(const Rational& r);

}  // namespace nmc

#endif  // NMC_RATIONAL_H_
