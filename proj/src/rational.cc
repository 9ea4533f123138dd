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

#include "nmc/rational.h"

#include <cmath>

#include "nmc/bitstring.h"

namespace nmc {
namespace {

double Log2Integer(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log2(mant) + static_cast<double>(exp);
}

}  // namespace

Rational Pow2(int e) {
  mpz_class p = 1;
  const unsigned long shift = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), shift);
  Rational r = e < 0 ? Rational(mpz_class(1), p) : Rational(p);
  r.canonicalize();
  return r;
}

Rational MakeRational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("zero denominator");
  Rational r(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_str();
}

Rational ParseRational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw Error("invalid rational: " + s);
  if (r.get_den() == 0) throw Error("zero denominator");
  r.canonicalize();
  return r;
}

double Log2(const Rational& r) {
  if (sgn(r) <= 0) throw Error("log2 of non-positive value");
  return Log2Integer(r.get_num()) - Log2Integer(r.get_den());
}

double ToDouble(const Rational& r) { return r.get_d(); }

}  // namespace nmc
