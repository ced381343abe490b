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

#include "ghzbell/verify.h"

#include <stdexcept>

#include "gtest/gtest.h"

namespace ghzbell {
namespace {

TEST(Verify, DefaultRunPasses) {
  const auto results = run_verification({});
  ASSERT_EQ(results.size(), verification_check_names().size());
  for (const CheckResult& r : results) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Verify, EveryInjectedFaultIsCaughtByName) {
  for (const std::string& name : verification_check_names()) {
    VerifyOptions opt;
    opt.n_max_brute = 3;
    opt.inject_fault = name;
    for (const CheckResult& r : run_verification(opt)) {
      EXPECT_EQ(r.passed, r.name != name) << "fault " << name << " check " << r.name;
    }
  }
}

TEST(Verify, OptionErrors) {
  VerifyOptions opt;
  opt.inject_fault = "no_such_check";
  EXPECT_THROW(run_verification(opt), std::invalid_argument);
  opt.inject_fault.clear();
  opt.n_max_brute = 9;
  EXPECT_THROW(run_verification(opt), std::invalid_argument);
}

}  // namespace
}  // namespace ghzbell
