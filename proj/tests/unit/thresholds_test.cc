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

#include "ghzbell/thresholds.h"

#include <cmath>
#include <stdexcept>

#include "gtest/gtest.h"

namespace ghzbell {
namespace {

const double kSqrt3 = std::sqrt(3.0);

double formula(int n) { return kSqrt3 * std::pow(2.0 / 3.0, n); }

TEST(CriticalVisibility, PerfectEfficiencyValues) {
  EXPECT_EQ(format_percent(critical_visibility(3, 1.0).v_critical), "51.3");
  EXPECT_EQ(format_percent(critical_visibility(4, 1.0).v_critical), "34.2");
  EXPECT_EQ(format_percent(critical_visibility(10, 1.0).v_critical), "3.0");
  // √3(2/3)² = 4√3/9; the 77.8% sometimes quoted for N=2 does not follow
  // from the formula.
  EXPECT_NEAR(critical_visibility(2, 1.0).v_critical, 4 * kSqrt3 / 9, 1e-15);
  EXPECT_EQ(format_percent(critical_visibility(2, 1.0).v_critical), "77.0");
}

TEST(CriticalVisibility, ClosedFormAtUnitEfficiency) {
  for (int n = 2; n <= 20; ++n) {
    const ThresholdResult r = critical_visibility(n, 1.0);
    EXPECT_NEAR(r.v_critical, formula(n), 1e-12) << n;
    EXPECT_TRUE(r.attainable);
    EXPECT_NEAR(r.bound_lhs, std::ldexp(kSqrt3, n - 1), 1e-9);
  }
}

TEST(CriticalVisibility, NonIncreasingInEfficiency) {
  for (int n = 2; n <= 12; ++n) {
    double prev = critical_visibility(n, 0.01).v_critical;
    for (int i = 2; i <= 100; ++i) {
      const double v = critical_visibility(n, i / 100.0).v_critical;
      EXPECT_LE(v, prev * (1 + 1e-12)) << n << " " << i;
      prev = v;
    }
  }
}

TEST(CriticalVisibility, Errors) {
  EXPECT_THROW(critical_visibility(3, 0.0), std::invalid_argument);
  EXPECT_THROW(critical_visibility(3, 1.5), std::invalid_argument);
  EXPECT_THROW(critical_visibility(1, 1.0), std::invalid_argument);
}

TEST(CriticalVisibility, UnattainableSentinelAtVanishingEfficiency) {
  // For n = 2 the corrected bound 2√3 - 2√3(1-η)² vanishes as η → 0 and
  // underflows to zero for tiny η.
  const ThresholdResult r = critical_visibility(2, 1e-300);
  EXPECT_FALSE(r.attainable);
  EXPECT_TRUE(std::isinf(r.v_critical));
  EXPECT_GT(critical_visibility(2, 0.5).v_critical, 1.0);
}

TEST(CriticalEfficiency, PublishedValues) {
  EXPECT_EQ(format_percent(critical_efficiency(2)), "87.0");
  EXPECT_EQ(format_percent(critical_efficiency(3)), "79.8");
  EXPECT_EQ(format_percent(critical_efficiency(4)), "76.5");
  EXPECT_EQ(format_percent(critical_efficiency(5)), "74.4");
}

TEST(CriticalEfficiency, ClosedFormWhenEntrySumVanishes) {
  for (int n : {4, 7, 10, 13}) {
    const double closed =
        std::pow(std::ldexp(kSqrt3, n - 1) * 2 / std::pow(3.0, n), 1.0 / n);
    EXPECT_NEAR(critical_efficiency(n), closed, 1e-12) << n;
  }
}

TEST(CriticalEfficiency, TwoPartyClosedForm) {
  // 4.5η² + 2√3(1-η)² = 2√3  ⇒  η = 4√3 / (4.5 + 2√3).
  EXPECT_NEAR(critical_efficiency(2), 4 * kSqrt3 / (4.5 + 2 * kSqrt3), 1e-12);
}

TEST(CriticalEfficiency, ConsistentWithCriticalVisibility) {
  for (int n = 2; n <= 30; ++n) {
    EXPECT_NEAR(critical_visibility(n, critical_efficiency(n)).v_critical, 1.0, 1e-9) << n;
  }
}

TEST(CriticalEfficiency, ApproachesTwoThirds) {
  const double eta40 = critical_efficiency(40);
  EXPECT_GT(eta40, 0.6667);
  EXPECT_LT(eta40, 0.68);
  EXPECT_GT(critical_efficiency(400), 2.0 / 3.0);
  EXPECT_LT(critical_efficiency(400), critical_efficiency(40));
}

TEST(OldThreshold, Values) {
  EXPECT_EQ(format_percent(old_visibility_threshold(2)), "70.7");
  EXPECT_EQ(format_percent(old_visibility_threshold(3)), "50.0");
  EXPECT_EQ(format_percent(old_visibility_threshold(4)), "35.4");
  EXPECT_EQ(format_percent(old_visibility_threshold(5)), "25.0");
  EXPECT_EQ(format_percent(old_visibility_threshold(10)), "4.4");
}

TEST(ThresholdTable, CrossoverAtFourParties) {
  const auto rows = threshold_table(20);
  ASSERT_EQ(rows.size(), 19u);
  for (const ThresholdRow& r : rows) {
    EXPECT_EQ(r.v_cr_new < r.v_cr_old, r.n >= 4) << r.n;
  }
  EXPECT_EQ(format_percent(rows[2].v_cr_new), "34.2");
  EXPECT_EQ(format_percent(rows[2].v_cr_old), "35.4");
  EXPECT_EQ(format_percent(rows[2].eta_cr), "76.5");
  EXPECT_GT(rows[1].v_cr_new, rows[1].v_cr_old);
  EXPECT_THROW(threshold_table(1), std::invalid_argument);
}

TEST(FormatPercent, RoundsHalfAwayFromZero) {
  EXPECT_EQ(format_percent(0.51320), "51.3");
  EXPECT_EQ(format_percent(0.00025), "0.0");
  EXPECT_EQ(format_percent(0.0625), "6.3");
  EXPECT_EQ(format_percent(-0.0625), "-6.3");
  EXPECT_EQ(format_percent(1.0), "100.0");
}

}  // namespace
}  // namespace ghzbell
