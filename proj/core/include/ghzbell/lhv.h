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

#ifndef GHZBELL_LHV_H_
#define GHZBELL_LHV_H_

#include <complex>
#include <cstdint>

#include "ghzbell/phase.h"
#include "ghzbell/settings.h"
#include "ghzbell/strategy.h"
#include "ghzbell/tensor.h"

namespace ghzbell {

// Exhaustive search enumerates 8^n strategies; beyond this use the
// factorized evaluator.
inline constexpr int kMaxBruteParties = 8;

// 2^n·√3/2 stays finite in a double well past this.
inline constexpr int kMaxFactorizedParties = 1000;

// 2^(n-1)·√3, the largest value of (Q, H) over local hidden variable
// tensors H.
double lhv_bound(int n);

// (3^n/2) / (2^(n-1)√3) = (3/2)^n / √3.
double violation_factor(int n);

// H(i_1..i_N) = ∏_k v^k_{i_k}. Works for either alphabet.
CorrelationTensor hv_tensor(const DeterministicStrategy& strategy,
                            const SettingsGrid& grid);

// (Q, hv_tensor(strategy)). Throws std::invalid_argument for three-outcome
// strategies (remap with map_f first) or on a party-count mismatch.
double s_lambda(const DeterministicStrategy& strategy, const CorrelationTensor& q);

// Σ_i v_i exp(iφ_i) for one party. With ±1 outcomes on three phases spaced
// by π/3 the sum is either 0 or has modulus 2 and a phase that is a
// multiple of π/6, so it is held exactly as (magnitude, phase class).
struct PartyPhasor {
  int magnitude = 0;    // 0 or 2
  int phase_class = 0;  // phase in units of π/6, in [0, 12); 0 when magnitude is 0

  bool is_zero() const { return magnitude == 0; }
  std::complex<double> value() const;

  friend bool operator==(const PartyPhasor&, const PartyPhasor&) = default;
};

// Throws std::invalid_argument if an outcome is not ±1.
PartyPhasor party_phasor(const PartyAssignment& assignment, int party_index,
                         const SettingsGrid& grid);

// Re(∏_k z_k), evaluated from the exact phase classes. Equals s_lambda for
// every two-outcome strategy; works for any party count.
double s_lambda_factorized(const DeterministicStrategy& strategy,
                           const SettingsGrid& grid);

struct BruteForceResult {
  int n = 0;
  double max_s = 0.0;
  HalfSurd exact_max;
  // Lexicographically smallest maximizer (party-major, setting-minor, -1 < +1).
  DeterministicStrategy argmax{Alphabet::kTwoOutcome, {{1, 1, 1}}};
  std::uint64_t maximizer_count = 0;
};

// Maximum of s_lambda over all 8^n two-outcome strategies, evaluated in
// exact arithmetic by contracting Q one party at a time. The result does not
// depend on `workers`. Throws std::invalid_argument unless
// 2 <= n <= kMaxBruteParties and workers >= 1.
BruteForceResult max_s_brute(int n, int workers = 1);

struct FactorizedResult {
  int n = 0;
  double max_s = 0.0;
  int phase_class = 0;  // phase of the optimal product ∏ z_k, units of π/6
  DeterministicStrategy argmax{Alphabet::kTwoOutcome, {{1, 1, 1}}};
};

// Maximum of Re(∏ z_k) by dynamic programming over the twelve phase classes.
// O(n) time. argmax is the lexicographically smallest maximizer, so it
// matches max_s_brute. Throws std::invalid_argument unless
// 2 <= n <= kMaxFactorizedParties.
FactorizedResult max_s_factorized(int n);

}  // namespace ghzbell

#endif  // GHZBELL_LHV_H_
