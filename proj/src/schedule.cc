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

#include "nmc/schedule.h"

#include <cctype>

#include "nmc/bitstring.h"

namespace nmc {
namespace {

std::size_t CeilRational(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q <= 0 ? 0 : q.get_ui();
}

}  // namespace

char OpChar(BlockOp op) {
  switch (op) {
    case BlockOp::kPass:
      return 'P';
    case BlockOp::kAlter:
      return 'A';
    case BlockOp::kDelete:
      return 'D';
    case BlockOp::kInsert:
      return 'I';
  }
  return '?';
}

std::vector<BlockGroup> ParseOps(const std::string& ops) {
  std::vector<BlockGroup> groups;
  for (char ch : ops) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') continue;
    switch (ch) {
      case 'P':
        groups.push_back({BlockOp::kPass, 0});
        break;
      case 'A':
        groups.push_back({BlockOp::kAlter, 0});
        break;
      case 'D':
        groups.push_back({BlockOp::kDelete, 0});
        break;
      case 'I':
        if (groups.empty()) throw Error("an I operation needs a preceding Alice block");
        ++groups.back().inserts;
        break;
      default:
        throw Error(std::string("unknown block operation '") + ch + "'");
    }
  }
  return groups;
}

std::string FormatOps(const std::vector<BlockGroup>& groups) {
  std::string s;
  for (const auto& g : groups) {
    if (!s.empty()) s += ' ';
    s += OpChar(g.head);
    for (std::size_t i = 0; i < g.inserts; ++i) s += " I";
  }
  return s;
}

std::vector<BlockGroup> ScheduleFromInteractions(const std::string& seq) {
  std::vector<BlockGroup> groups;
  bool delivered = false;  // whether the current Alice block reached Bob
  for (char ch : seq) {
    if (ch == 'a') {
      groups.push_back({BlockOp::kDelete, 0});
      delivered = false;
    } else if (ch == 'b' || ch == 'x') {
      if (groups.empty()) throw Error("unrealizable interleaving: the scheduler starts with Alice's first message");
      if (!delivered) {
        groups.back().head = ch == 'b' ? BlockOp::kPass : BlockOp::kAlter;
        delivered = true;
      } else {
        ++groups.back().inserts;
      }
    } else {
      throw Error(std::string("unknown interaction '") + ch + "'");
    }
  }
  return groups;
}

std::string ScheduleClass::canonical() const {
  std::string s;
  for (BlockOp op : ops) s += OpChar(op);
  return s;
}

ScheduleClass classify_schedule(const std::vector<BlockGroup>& groups, bool changes_y, const Rational& e,
                                std::size_t L) {
  ScheduleClass sc;
  sc.changes_y = changes_y;
  for (const auto& g : groups) {
    if (g.head == BlockOp::kDelete) ++sc.a;
    if (g.head == BlockOp::kAlter) {
      ++sc.c;
      if (g.inserts > 0) ++sc.d;
    }
    if (g.head != BlockOp::kPass) sc.ops.push_back(g.head);
    for (std::size_t i = 0; i < g.inserts; ++i) sc.ops.push_back(BlockOp::kInsert);
    sc.b += g.inserts;
  }
  if (sc.a != sc.b) {
    throw Error("unrealizable interleaving: " + std::to_string(sc.a) + " deletions but " + std::to_string(sc.b) +
                " insertions change the codeword length");
  }
  if (L != 0 && groups.size() != L) {
    throw Error("unrealizable interleaving: " + std::to_string(groups.size()) + " Alice blocks for L = " +
                std::to_string(L));
  }
  sc.forced = sc.a + sc.b + sc.c - sc.d;
  if (changes_y) {
    sc.bound_ops = CeilRational(Rational(2) * e * static_cast<unsigned long>(sc.a + sc.b + sc.c) / 3);
    sc.bound_blocks = CeilRational(Rational(2) * e * static_cast<unsigned long>(L) / 3);
  }
  return sc;
}

ScheduleClass classify_schedule(const std::string& ops, bool changes_y, const Rational& e, std::size_t L) {
  return classify_schedule(ParseOps(ops), changes_y, e, L);
}

}  // namespace nmc
