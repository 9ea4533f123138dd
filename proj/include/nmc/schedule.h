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

#ifndef NMC_SCHEDULE_H_
#define NMC_SCHEDULE_H_

#include <string>
#include <vector>

#include "nmc/rational.h"

namespace nmc {

// Block operations of the multi-round protocol. For each block Alice sends,
// Eve either relays it (P), alters it (A) or deletes it (D), and may then
// insert further blocks to Bob (I) before answering Alice.
enum class BlockOp { kPass, kAlter, kDelete, kInsert };

char OpChar(BlockOp op);

struct BlockGroup {
  BlockOp head = BlockOp::kPass;  // P, A or D
  std::size_t inserts = 0;        // I operations that follow it
};

// Parses "P A D I ..." (whitespace optional). Every group starts with P, A or
// D; I tokens attach to the preceding group. Throws Error on a leading I or
// an unknown token.
std::vector<BlockGroup> ParseOps(const std::string& ops);
std::string FormatOps(const std::vector<BlockGroup>& groups);

// Converts an interaction sequence into block operations. Each character is
// one interaction: 'a' with Alice (she emits her next block), 'b' with Bob
// delivering Alice's latest block unchanged, 'x' with Bob delivering a
// different block. Two 'a' in a row delete the first block (D); every Bob
// interaction after the first since the last 'a' inserts a block (I).
std::vector<BlockGroup> ScheduleFromInteractions(const std::string& seq);

struct ScheduleClass {
  std::vector<BlockOp> ops;  // D/I/A in order, passes omitted
  std::size_t a = 0;         // D count
  std::size_t b = 0;         // I count
  std::size_t c = 0;         // A count
  std::size_t d = 0;         // A immediately followed by I
  std::size_t forced = 0;    // a + b + c - d: operations that force a challenge
  // ceil(2e(a+b+c)/3) and ceil(2eL/3); meaningful when the script changes Y.
  std::size_t bound_ops = 0;
  std::size_t bound_blocks = 0;
  bool changes_y = false;
  std::string canonical() const;
};

// Throws Error("unrealizable interleaving ...") unless #D == #I, or when
// the group count differs from L (L == 0 skips that check).
ScheduleClass classify_schedule(const std::vector<BlockGroup>& groups, bool changes_y, const Rational& e,
                                std::size_t L);
ScheduleClass classify_schedule(const std::string& ops, bool changes_y, const Rational& e, std::size_t L);

}  // namespace nmc

#endif  // NMC_SCHEDULE_H_
