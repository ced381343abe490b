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

#ifndef GHZBELL_THRESHOLDS_H_
#define GHZBELL_THRESHOLDS_H_

#include <string>
#include <vector>

namespace ghzbell {

// Critical visibility of an n-party experiment at collection efficiency eta.
struct ThresholdResult {
  int n_parties = 0;
  double eta = 1.0;
  // Smallest visibility that still violates the detection-corrected
  // inequality. +inf when `attainable` is false; values above 1 mean no
  // physical visibility suffices.
  double v_critical = 0.0;
  bool attainable = true;
  // Right-hand side of the corrected inequality at this eta:
  // 2^(n-1)√3 - |q_n| (1-eta)^n.
  double bound_lhs = 0.0;
  double q_n_abs = 0.0;
};

// Throws std::invalid_argument unless n >= 2 and 0 < eta <= 1.
ThresholdResult critical_visibility(int n, double eta);

// Efficiency at which a perfect-visibility experiment stops violating the
// inequality: the root of (3η/2)^n + 2|sin((n-1)π/3)|(1-η)^n = √3 on
// (1e-6, 1], found by bisection to 1e-12. Throws std::invalid_argument for
// n < 2 and std::logic_error if the bracket does not isolate a single root.
double critical_efficiency(int n);

// Two-setting threshold 2^((1-n)/2).
double old_visibility_threshold(int n);

struct ThresholdRow {
  int n = 0;
  double v_cr_new = 0.0;
  double v_cr_old = 0.0;
  double eta_cr = 0.0;
};

// Rows for n = 2..n_max. Throws std::invalid_argument for n_max < 2.
std::vector<ThresholdRow> threshold_table(int n_max);

// Percent with one decimal, rounding half away from zero: 0.51320 -> "51.3".
std::string format_percent(double fraction);

}  // namespace ghzbell

#endif  // GHZBELL_THRESHOLDS_H_
