// Copyright 2026 The ghzbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ghzbell/settings.h"

#include <stdexcept>

#include "gtest/gtest.h"

namespace ghzbell {
namespace {

TEST(BuildSettings, TwoParties) {
  const SettingsGrid g = build_settings(2);
  ASSERT_EQ(g.n_parties(), 2);
  EXPECT_EQ(g.phase(0, 0), PiFraction(1, 6));
  EXPECT_EQ(g.phase(0, 1), PiFraction(1, 2));
  EXPECT_EQ(g.phase(0, 2), PiFraction(5, 6));
  EXPECT_EQ(g.phase(1, 0), PiFraction(0, 1));
  EXPECT_EQ(g.phase(1, 1), PiFraction(1, 3));
  EXPECT_EQ(g.phase(1, 2), PiFraction(2, 3));
}

TEST(BuildSettings, LaterPartiesShareTriple) {
  const SettingsGrid g = build_settings(5);
  for (int k = 2; k < 5; ++k) EXPECT_EQ(g.party(k), g.party(1));
}

TEST(BuildSettings, PhasesSpacedByPiOverThree) {
  const SettingsGrid g = build_settings(4);
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i + 1 < 3; ++i) {
      EXPECT_EQ(g.phase(k, i + 1) - g.phase(k, i), PiFraction(1, 3));
    }
  }
  EXPECT_EQ(g.base_class(0), 1);
  EXPECT_EQ(g.base_class(3), 0);
}

TEST(BuildSettings, RejectsFewerThanTwoParties) {
  EXPECT_THROW(build_settings(1), std::invalid_argument);
  EXPECT_THROW(build_settings(0), std::invalid_argument);
}

TEST(SettingsGrid, PhaseSumAndBounds) {
  const SettingsGrid g = build_settings(3);
  const int idx[] = {1, 2, 2};
  EXPECT_EQ(g.phase_sum(idx), PiFraction(11, 6));
  const int short_idx[] = {0, 0};
  EXPECT_THROW(g.phase_sum(short_idx), std::invalid_argument);
  EXPECT_THROW(g.phase(0, 3), std::out_of_range);
  EXPECT_THROW(g.party(3), std::out_of_range);
}

}  // namespace
}  // namespace ghzbell
