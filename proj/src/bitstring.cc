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

#include "nmc/bitstring.h"

#include <bit>

namespace nmc {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t WordsFor(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

std::uint64_t Mask(std::size_t i) { return std::uint64_t{1} << (63 - i % kWordBits); }

int HexDigit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

BitString::BitString(std::size_t n) : words_(WordsFor(n), 0), size_(n) {}

BitString BitString::FromString(std::string_view bits) {
  BitString out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.Set(i, true);
    } else if (bits[i] != '0') {
      throw Error("bit string may only contain '0' and '1'");
    }
  }
  return out;
}

BitString BitString::FromU64(std::uint64_t value, std::size_t n) {
  if (n > 64) throw Error("FromU64 supports at most 64 bits");
  BitString out(n);
  if (n > 0) {
    std::uint64_t v = n == 64 ? value : (value & ((std::uint64_t{1} << n) - 1));
    out.words_[0] = v << (64 - n);
  }
  return out;
}

BitString BitString::FromHex(std::string_view hex, std::size_t n) {
  const std::size_t bytes = (n + 7) / 8;
  if (hex.size() != 2 * bytes) throw Error("hex length does not match bit length");
  BitString out(n);
  for (std::size_t b = 0; b < bytes; ++b) {
    int hi = HexDigit(hex[2 * b]);
    int lo = HexDigit(hex[2 * b + 1]);
    if (hi < 0 || lo < 0) throw Error("invalid hex digit");
    unsigned byte = static_cast<unsigned>(hi * 16 + lo);
    for (int j = 0; j < 8; ++j) {
      bool bit = (byte >> (7 - j)) & 1u;
      std::size_t pos = 8 * b + static_cast<std::size_t>(j);
      if (pos < n) {
        out.Set(pos, bit);
      } else if (bit) {
        throw Error("nonzero padding bits in hex");
      }
    }
  }
  return out;
}

bool BitString::Get(std::size_t i) const {
  if (i >= size_) throw Error("bit index out of range");
  return (words_[i / kWordBits] & Mask(i)) != 0;
}

void BitString::Set(std::size_t i, bool value) {
  if (i >= size_) throw Error("bit index out of range");
  if (value) {
    words_[i / kWordBits] |= Mask(i);
  } else {
    words_[i / kWordBits] &= ~Mask(i);
  }
}

BitString BitString::Slice(std::size_t pos, std::size_t len) const {
  if (pos > size_ || len > size_ - pos) throw Error("slice out of range");
  BitString out(len);
  for (std::size_t w = 0; w < out.words_.size(); ++w) {
    const std::size_t start = pos + w * kWordBits;
    const std::size_t a = start / kWordBits;
    const std::size_t s = start % kWordBits;
    std::uint64_t v = words_[a] << s;
    if (s != 0 && a + 1 < words_.size()) v |= words_[a + 1] >> (kWordBits - s);
    out.words_[w] = v;
  }
  if (len % kWordBits != 0) out.words_.back() &= ~std::uint64_t{0} << (kWordBits - len % kWordBits);
  return out;
}

BitString BitString::Concat(const BitString& other) const {
  BitString out(size_ + other.size_);
  out.words_.assign(WordsFor(out.size_), 0);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  const std::size_t shift = size_ % kWordBits;
  const std::size_t base = size_ / kWordBits;
  for (std::size_t w = 0; w < other.words_.size(); ++w) {
    const std::uint64_t word = other.words_[w];
    if (shift == 0) {
      out.words_[base + w] |= word;
    } else {
      out.words_[base + w] |= word >> shift;
      if (base + w + 1 < out.words_.size()) out.words_[base + w + 1] |= word << (64 - shift);
    }
  }
  return out;
}

BitString BitString::Xor(const BitString& other) const {
  if (size_ != other.size_) throw Error("unequal lengths");
  BitString out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] ^= other.words_[w];
  return out;
}

BitString BitString::Resized(std::size_t n) const {
  if (n <= size_) return Slice(0, n);
  return Concat(BitString(n - size_));
}

std::size_t BitString::Popcount() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool BitString::IsZero() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::uint64_t BitString::ToU64() const {
  if (size_ > 64) throw Error("ToU64 requires at most 64 bits");
  if (size_ == 0) return 0;
  return words_[0] >> (64 - size_);
}

std::string BitString::ToString() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (Get(i)) s[i] = '1';
  }
  return s;
}

std::string BitString::ToHex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  const std::size_t bytes = (size_ + 7) / 8;
  std::string s;
  s.reserve(2 * bytes);
  for (std::size_t b = 0; b < bytes; ++b) {
    const std::uint64_t word = words_[b / 8];
    const unsigned byte = static_cast<unsigned>((word >> (56 - 8 * (b % 8))) & 0xffu);
    s.push_back(kDigits[byte >> 4]);
    s.push_back(kDigits[byte & 0xfu]);
  }
  return s;
}

std::strong_ordering operator<=>(const BitString& a, const BitString& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    if (auto c = a.words_[w] <=> b.words_[w]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

BitString Concat(const BitString& a, const BitString& b) { return a.Concat(b); }

BitString Concat(const std::vector<BitString>& parts) {
  BitString out;
  for (const auto& p : parts) out = out.Concat(p);
  return out;
}

bool Ip(const BitString& x, const BitString& y) {
  if (x.size() != y.size()) throw Error("unequal lengths");
  std::uint64_t parity = 0;
  for (std::size_t w = 0; w < x.words().size(); ++w) {
    parity ^= static_cast<std::uint64_t>(std::popcount(x.words()[w] & y.words()[w]));
  }
  return (parity & 1u) != 0;
}

std::size_t BitStringHash::operator()(const BitString& b) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(b.size());
  for (std::uint64_t w : b.words()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace nmc
