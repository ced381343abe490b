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

#include "ghzbell/ghz.h"

#include <cmath>
#include <stdexcept>

namespace ghzbell {

double joint_probability(std::span<const int> results,
                         std::span<const double> angles) {
  if (results.size() != angles.size() || results.empty()) {
    throw std::invalid_argument("joint_probability: length mismatch");
  }
  int parity = 1;
  for (int r : results) {
    if (r != 1 && r != -1) {
      throw std::invalid_argument("joint_probability: result must be +1 or -1");
    }
    parity *= r;
  }
  const double scale = std::ldexp(1.0, -static_cast<int>(results.size()));
  return scale * (1.0 + parity * quantum_correlation(angles));
}

double quantum_correlation(std::span<const double> angles) {
  double sum = 0.0;
  for (double a : angles) sum += a;
  return std::cos(sum);
}

std::vector<HalfSurd> build_q_tensor_exact(const SettingsGrid& grid) {
  const int n = grid.n_parties();
  std::vector<HalfSurd> out(pow3(n));
  std::vector<int> index(static_cast<std::size_t>(n));
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    unflatten(flat, index);
    out[flat] = cos_twelfth(grid.phase_sum(index).twelfth_class());
  }
  return out;
}

CorrelationTensor build_q_tensor(const SettingsGrid& grid) {
  const int n = grid.n_parties();
  CorrelationTensor q(n);
  std::vector<int> index(static_cast<std::size_t>(n));
  for (std::size_t flat = 0; flat < q.size(); ++flat) {
    unflatten(flat, index);
    q.set(flat, cos_twelfth(grid.phase_sum(index).twelfth_class()).value());
  }
  return q;
}

double q_norm_sq_closed_form(int n) { return 0.5 * std::pow(3.0, n); }

double q_entry_sum_closed_form(int n) {
  // sin((n-1)π/3) = cos((n-1)π/3 - π/2), i.e. class 2(n-1) - 3 in π/6 units.
  const HalfSurd s = cos_twelfth(mod12(2 * static_cast<std::int64_t>(n - 1) - 3));
  return -std::ldexp(s.value(), n);
}

}  // namespace ghzbell
