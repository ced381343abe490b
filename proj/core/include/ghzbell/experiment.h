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

#ifndef GHZBELL_EXPERIMENT_H_
#define GHZBELL_EXPERIMENT_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "ghzbell/rng.h"
#include "ghzbell/tensor.h"

namespace ghzbell {

enum class SettingPolicy {
  kUniformRandom,  // each trial draws its setting combination uniformly
  kRoundRobin,     // trial t uses setting combination t mod 3^N
};

std::string_view to_string(SettingPolicy p);
// Accepts "uniform-random" and "round-robin"; throws std::invalid_argument.
SettingPolicy parse_setting_policy(std::string_view s);

struct ExperimentConfig {
  int n_parties = 3;
  double visibility = 1.0;
  double efficiency = 1.0;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  SettingPolicy setting_policy = SettingPolicy::kRoundRobin;

  // Throws std::invalid_argument on any out-of-range field.
  void validate() const;
};

// Trials per RNG stream. Trial t always belongs to block t / kTrialsPerBlock
// and draws from stream (seed, block), so output is independent of how
// blocks are spread over workers.
inline constexpr std::uint64_t kTrialsPerBlock = 1 << 16;

// One trial. Settings are 0-based indices into each party's triple;
// outcomes are +1, -1, or 0 for a non-detection.
struct TrialRecord {
  std::vector<int> settings;
  std::vector<int> outcomes;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// Draws outcomes for one trial. Each station registers independently with
// probability eta. When every station registers, the sign pattern r has
// probability 2^-N (1 + V ∏r cos Σφ). When at least one station misses,
// every registered sign is an independent fair coin.
class TrialSampler {
 public:
  explicit TrialSampler(const ExperimentConfig& config);

  int n_parties() const { return n_; }
  std::size_t n_setting_combinations() const { return p_even_.size(); }

  // Probability that the product of signs is +1 given that every station
  // registered, for a flat setting index.
  double even_parity_probability(std::size_t setting_flat) const {
    return p_even_[setting_flat];
  }

  void sample(std::size_t setting_flat, Xoshiro256& rng,
              std::span<int> outcomes) const;

 private:
  int n_;
  double eta_;
  std::vector<double> p_even_;
};

TrialRecord sample_trial(const ExperimentConfig& config,
                         std::span<const int> settings, Xoshiro256& rng);

// Raw counts for one setting combination.
struct SettingTally {
  std::uint64_t trials = 0;
  std::uint64_t all_detected = 0;  // trials where ∏m ≠ 0
  std::int64_t product_sum = 0;    // Σ ∏ m_k
  std::int64_t remapped_sum = 0;   // Σ ∏ f(m_k), f(0) = -1

  friend bool operator==(const SettingTally&, const SettingTally&) = default;
};

struct ExperimentSummary {
  CorrelationTensor estimated_tensor{2};
  CorrelationTensor auxiliary_tensor{2};
  std::vector<SettingTally> tallies;
  std::uint64_t trials = 0;
  std::uint64_t all_zero_trials = 0;
  double p_all_zero = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool violated = false;
  // 1σ error of lhs; +inf when some setting combination has fewer than two
  // trials.
  double standard_error_lhs = 0.0;
  bool standard_error_finite = true;
};

// Sample variance-based 1σ errors of each estimated-tensor entry (+inf for
// fewer than two trials).
std::vector<double> entry_standard_errors(const ExperimentSummary& s);

// Runs config.trials trials. Bit-identical for any workers >= 1.
ExperimentSummary run_experiment(const ExperimentConfig& config, int workers = 1);

// The same trials as run_experiment, materialized.
std::vector<TrialRecord> simulate_records(const ExperimentConfig& config);

// Summary computed from stored records; equals run_experiment on the
// records simulate_records produces.
ExperimentSummary summarize_records(std::span<const TrialRecord> records,
                                    const ExperimentConfig& config);

// Mean of ∏ m_k per setting combination.
CorrelationTensor estimated_tensor(std::span<const TrialRecord> records,
                                   const ExperimentConfig& config);
// Mean of ∏ f(m_k) per setting combination, with f(0) = -1.
CorrelationTensor auxiliary_tensor(std::span<const TrialRecord> records,
                                   const ExperimentConfig& config);

struct SweepPoint {
  double visibility = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool violated = false;
  double standard_error_lhs = 0.0;
};

// One experiment per grid visibility, all sharing `seed`.
std::vector<SweepPoint> visibility_sweep(int n, double eta,
                                         std::span<const double> v_grid,
                                         std::uint64_t trials_per_point,
                                         std::uint64_t seed, int workers = 1);

}  // namespace ghzbell

#endif  // GHZBELL_EXPERIMENT_H_
