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

#include "ghzbell/records.h"

#include <sstream>
#include <stdexcept>

#include "gtest/gtest.h"

namespace ghzbell {
namespace {

TEST(Records, LineFormat) {
  const TrialRecord r{{0, 2, 1}, {1, 0, -1}};
  EXPECT_EQ(format_record(r), "1 3 2 | 1 0 -1");
  EXPECT_EQ(parse_record("1 3 2 | 1 0 -1"), r);
}

TEST(Records, RoundTripThroughStream) {
  ExperimentConfig c;
  c.n_parties = 4;
  c.visibility = 0.8;
  c.efficiency = 0.7;
  c.trials = 500;
  c.seed = 3;
  const std::vector<TrialRecord> records = simulate_records(c);
  std::stringstream buf;
  write_records(buf, records);
  EXPECT_EQ(read_records(buf), records);
}

TEST(Records, ParseErrors) {
  EXPECT_THROW(parse_record("1 2 1 0"), std::invalid_argument);
  EXPECT_THROW(parse_record("1 2 | 1"), std::invalid_argument);
  EXPECT_THROW(parse_record("0 2 | 1 1"), std::invalid_argument);
  EXPECT_THROW(parse_record("1 4 | 1 1"), std::invalid_argument);
  EXPECT_THROW(parse_record("1 2 | 1 2"), std::invalid_argument);
  EXPECT_THROW(parse_record("1 x | 1 1"), std::invalid_argument);
  EXPECT_THROW(parse_record("1 2 | 1 | 1"), std::invalid_argument);
  EXPECT_THROW(parse_record(" | "), std::invalid_argument);
}

TEST(Records, ReaderSkipsBlankLinesAndChecksWidth) {
  std::istringstream ok("1 1 | 1 -1\n\n2 3 | 0 0\n");
  EXPECT_EQ(read_records(ok).size(), 2u);
  std::istringstream bad("1 1 | 1 -1\n2 3 1 | 0 0 1\n");
  EXPECT_THROW(read_records(bad), std::invalid_argument);
}

TEST(Records, SummaryRejectsMismatchedParties) {
  ExperimentConfig c;
  c.n_parties = 3;
  const std::vector<TrialRecord> records = {{{0, 0}, {1, 1}}};
  EXPECT_THROW(summarize_records(records, c), std::invalid_argument);
}

}  // namespace
}  // namespace ghzbell
