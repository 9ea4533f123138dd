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

#ifndef NMC_BITSTRING_H_
#define NMC_BITSTRING_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace nmc {

// Thrown for violated preconditions throughout the library.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Fixed-length bit vector. Bit 0 is the leftmost bit of the written string
// "b0 b1 ... b(n-1)". Storage packs bits MSB-first into 64-bit words and keeps
// the unused tail of the last word zero, so equality and hashing can work on
// whole words.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t n);  // n zero bits

  // Parses a string over {'0','1'}.
  static BitString FromString(std::string_view bits);
  // The low `n` bits of `value`, most significant first: FromU64(2, 2) = "10".
  static BitString FromU64(std::uint64_t value, std::size_t n);
  // Inverse of ToHex(): `hex` must have exactly ceil(n/8)*2 digits and zero
  // padding in the final byte.
  static BitString FromHex(std::string_view hex, std::size_t n);

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool Get(std::size_t i) const;
  void Set(std::size_t i, bool value);
  bool operator[](std::size_t i) const { return Get(i); }

  // Throws Error("slice out of range") unless pos + len <= size().
  BitString Slice(std::size_t pos, std::size_t len) const;
  BitString Concat(const BitString& other) const;
  // Throws Error("unequal lengths") on length mismatch.
  BitString Xor(const BitString& other) const;
  // Truncates, or zero-pads on the right, to exactly n bits.
  BitString Resized(std::size_t n) const;

  std::size_t Popcount() const;
  bool IsZero() const;

  // Integer value with bit 0 as the most significant bit. Requires size() <= 64.
  std::uint64_t ToU64() const;
  std::string ToString() const;
  // Bytes MSB-first, final byte zero-padded in its low-order positions.
  std::string ToHex() const;

  using Words = boost::container::small_vector<std::uint64_t, 2>;
  const Words& words() const { return words_; }

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }
  // Orders by length first, then lexicographically by bits.
  friend std::strong_ordering operator<=>(const BitString& a, const BitString& b);

 private:
  Words words_;
  std::size_t size_ = 0;
};

BitString Concat(const BitString& a, const BitString& b);
BitString Concat(const std::vector<BitString>& parts);

// GF(2) inner product sum_i x_i y_i mod 2. Throws Error("unequal lengths").
bool Ip(const BitString& x, const BitString& y);

struct BitStringHash {
  std::size_t operator()(const BitString& b) const noexcept;
};

}  // namespace nmc

#endif  // NMC_BITSTRING_H_
