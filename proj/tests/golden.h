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

#ifndef NMC_TESTS_GOLDEN_H_
#define NMC_TESTS_GOLDEN_H_

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

namespace nmc::testing {

// Compares `actual` with the committed file tests/golden/<name>. Setting
// NMC_UPDATE_GOLDEN=1 rewrites the file instead.
inline void ExpectGolden(const std::string& name, const nlohmann::json& actual) {
  const std::string path = std::string(NMC_GOLDEN_DIR) + "/" + name;
  if (const char* u = std::getenv("NMC_UPDATE_GOLDEN"); u != nullptr && std::string(u) == "1") {
    std::ofstream(path) << actual.dump(2) << "\n";
    return;
  }
  std::ifstream in(path);
  ASSERT_TRUE(in.good()) << "missing golden file " << path;
  const nlohmann::json want = nlohmann::json::parse(in);
  EXPECT_EQ(actual, want) << "golden mismatch in " << name;
}

}  // namespace nmc::testing

#endif  // NMC_TESTS_GOLDEN_H_
