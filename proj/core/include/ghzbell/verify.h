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

#ifndef GHZBELL_VERIFY_H_
#define GHZBELL_VERIFY_H_

#include <string>
#include <vector>

namespace ghzbell {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyOptions {
  // Largest n for the exhaustive strategy search (2..kMaxBruteParties).
  int n_max_brute = 6;
  int workers = 1;
  // Name of a check whose computed quantity is perturbed so that it fails.
  // Empty for a normal run.
  std::string inject_fault;
};

// Names of every check run_verification performs, in order.
std::vector<std::string> verification_check_names();

// Runs the identity suite: tensor norms and entry sums, exhaustive vs
// factorized bound, violation factors, threshold formulas and roots,
// phasor value sets and the f-mapping. Throws std::invalid_argument for an
// unknown inject_fault name or an out-of-range n_max_brute.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace ghzbell

#endif  // GHZBELL_VERIFY_H_
