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

#include "ghzbell/rng.h"

#include <cmath>
#include <set>

#include "gtest/gtest.h"

namespace ghzbell {
namespace {

TEST(SplitMix64, ReferenceOutput) {
  // First outputs for seed 0 from the public-domain reference code.
  SplitMix64 g(0);
  EXPECT_EQ(g.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(g.next(), 0x6e789e6aa1b965f4ULL);
}

TEST(Xoshiro256, DeterministicPerSeed) {
  Xoshiro256 a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    differs = differs || x != c();
  }
  EXPECT_TRUE(differs);
}

TEST(Xoshiro256, StreamsDiffer) {
  std::set<std::uint64_t> firsts;
  for (std::uint64_t s = 0; s < 64; ++s) firsts.insert(Xoshiro256::stream(9, s)());
  EXPECT_EQ(firsts.size(), 64u);
}

TEST(Xoshiro256, UniformMoments) {
  Xoshiro256 g(1);
  constexpr int kN = 200000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < kN; ++i) {
    const double u = g.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sum_sq += u * u;
  }
  // Mean 1/2 with σ = sqrt(1/12 / N); variance 1/12.
  EXPECT_NEAR(sum / kN, 0.5, 4 * std::sqrt(1.0 / 12 / kN));
  EXPECT_NEAR(sum_sq / kN - (sum / kN) * (sum / kN), 1.0 / 12, 2e-3);
}

TEST(Xoshiro256, BelowIsInRangeAndCoversAll) {
  Xoshiro256 g(5);
  int counts[27] = {};
  for (int i = 0; i < 27000; ++i) {
    const auto v = g.below(27);
    ASSERT_LT(v, 27u);
    ++counts[v];
  }
  for (int c : counts) EXPECT_GT(c, 800);
}

}  // namespace
}  // namespace ghzbell
