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

#include "ghzbell/json_io.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "ghzbell/ghz.h"
#include "gtest/gtest.h"

namespace ghzbell {
namespace {

using nlohmann::json;

TEST(TensorJson, SchemaAndRoundTrip) {
  const CorrelationTensor q = build_q_tensor(build_settings(2));
  const json j = tensor_to_json(q);
  EXPECT_EQ(j["n_parties"], 2);
  ASSERT_EQ(j["entries"].size(), 9u);
  EXPECT_EQ(j["entries"][5].get<double>(), q[5]);
  const CorrelationTensor back = tensor_from_json(json::parse(j.dump()));
  for (std::size_t i = 0; i < q.size(); ++i) EXPECT_EQ(back[i], q[i]);
}

TEST(TensorJson, RejectsBadDocuments) {
  EXPECT_THROW(tensor_from_json(json{{"entries", json::array()}}), std::invalid_argument);
  EXPECT_THROW(tensor_from_json(json{{"n_parties", 2}, {"entries", {1, 2}}}),
               std::invalid_argument);
  EXPECT_THROW(tensor_from_json(json{{"n_parties", 1}, {"entries", {0, "x", 0}}}),
               std::invalid_argument);
}

TEST(MaximizerJson, Schema) {
  const FactorizedResult f = max_s_factorized(3);
  const json j = maximizer_to_json(3, f.max_s, f.argmax);
  EXPECT_EQ(j["n"], 3);
  EXPECT_DOUBLE_EQ(j["bound"].get<double>(), lhv_bound(3));
  EXPECT_DOUBLE_EQ(j["max_s"].get<double>(), f.max_s);
  ASSERT_EQ(j["argmax"].size(), 3u);
  EXPECT_EQ(j["argmax"][0].size(), 3u);
}

TEST(ThresholdCsv, HeaderAndRows) {
  const auto rows = threshold_table(3);
  const std::string csv = threshold_table_to_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,v_cr_new,v_cr_old,eta_cr");
  EXPECT_NE(csv.find("\n3,0.513200,0.500000,0.798433\n"), std::string::npos);
}

TEST(SummaryJson, NonFiniteErrorIsNull) {
  ExperimentConfig c;
  c.n_parties = 3;
  c.trials = 5;
  c.setting_policy = SettingPolicy::kUniformRandom;
  const json j = summary_to_json(run_experiment(c), c);
  EXPECT_TRUE(j["standard_error_lhs"].is_null());
  EXPECT_FALSE(j["standard_error_finite"].get<bool>());
  EXPECT_EQ(j["config"]["setting_policy"], "uniform-random");
  for (const char* key : {"estimated_tensor", "p_all_zero", "lhs", "rhs", "violated"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_TRUE(number_or_null(std::numeric_limits<double>::infinity()).is_null());
}

}  // namespace
}  // namespace ghzbell
