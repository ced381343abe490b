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

#ifndef GHZBELL_GHZ_H_
#define GHZBELL_GHZ_H_

#include <span>
#include <vector>

#include "ghzbell/phase.h"
#include "ghzbell/settings.h"
#include "ghzbell/tensor.h"

namespace ghzbell {

// Probability that N stations measuring a GHZ state at the given phases
// report `results` (each ±1): 2^-N [1 + (∏ r) cos(Σ φ)].
// Throws std::invalid_argument if a result is not ±1 or the lengths differ.
double joint_probability(std::span<const int> results,
                         std::span<const double> angles);

// cos(Σ φ_k).
double quantum_correlation(std::span<const double> angles);

// Q(i_1..i_N) = cos(Σ_k φ^k_{i_k}) over the settings grid. Phase sums are
// reduced exactly before the cosine is taken, so every entry is one of
// {0, ±1/2, ±√3/2, ±1} with only √3/2 subject to rounding.
CorrelationTensor build_q_tensor(const SettingsGrid& grid);

// The same tensor with each entry held exactly as a HalfSurd.
std::vector<HalfSurd> build_q_tensor_exact(const SettingsGrid& grid);

// Closed forms for the quantum tensor of n parties.
double q_norm_sq_closed_form(int n);    // 3^n / 2
double q_entry_sum_closed_form(int n);  // -2^n sin((n-1)π/3)

}  // namespace ghzbell

#endif  // GHZBELL_GHZ_H_
