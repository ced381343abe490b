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

#include "ghzbell/experiment.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

#include "ghzbell/ghz.h"
#include "ghzbell/lhv.h"
#include "ghzbell/settings.h"
#include "ghzbell/strategy.h"

namespace ghzbell {

std::string_view to_string(SettingPolicy p) {
  switch (p) {
    case SettingPolicy::kUniformRandom:
      return "uniform-random";
    case SettingPolicy::kRoundRobin:
      return "round-robin";
  }
  return "unknown";
}

SettingPolicy parse_setting_policy(std::string_view s) {
  if (s == "uniform-random") return SettingPolicy::kUniformRandom;
  if (s == "round-robin") return SettingPolicy::kRoundRobin;
  throw std::invalid_argument("unknown setting policy '" + std::string(s) + "'");
}

void ExperimentConfig::validate() const {
  if (n_parties < 2 || n_parties > kMaxTensorParties) {
    throw std::invalid_argument("n_parties must be in [2, " +
                                std::to_string(kMaxTensorParties) + "]");
  }
  if (!(visibility >= 0.0 && visibility <= 1.0)) {
    throw std::invalid_argument("visibility must be in [0, 1]");
  }
  if (!(efficiency >= 0.0 && efficiency <= 1.0)) {
    throw std::invalid_argument("efficiency must be in [0, 1]");
  }
  if (trials == 0) throw std::invalid_argument("trials must be positive");
}

TrialSampler::TrialSampler(const ExperimentConfig& config)
    : n_(config.n_parties), eta_(config.efficiency) {
  config.validate();
  const CorrelationTensor q = build_q_tensor(build_settings(n_));
  p_even_.resize(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    // Sign patterns of either parity have probability 2^-N (1 ± V cos Σφ).
    const double p = 0.5 * (1.0 + config.visibility * q[i]);
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::logic_error("TrialSampler: negative outcome probability");
    }
    p_even_[i] = p;
  }
}

void TrialSampler::sample(std::size_t setting_flat, Xoshiro256& rng,
                          std::span<int> outcomes) const {
  bool all_detected = true;
  for (int& m : outcomes) {
    m = rng.uniform() < eta_ ? 1 : 0;
    all_detected = all_detected && m != 0;
  }
  if (!all_detected) {
    for (int& m : outcomes) {
      if (m != 0 && rng.coin()) m = -1;
    }
    return;
  }
  // Parity first, then a uniform pattern with that parity.
  int parity = rng.uniform() < p_even_[setting_flat] ? 1 : -1;
  for (std::size_t k = 0; k + 1 < outcomes.size(); ++k) {
    outcomes[k] = rng.coin() ? -1 : 1;
    parity *= outcomes[k];
  }
  outcomes.back() = parity;
}

TrialRecord sample_trial(const ExperimentConfig& config,
                         std::span<const int> settings, Xoshiro256& rng) {
  if (static_cast<int>(settings.size()) != config.n_parties) {
    throw std::invalid_argument("sample_trial: settings length mismatch");
  }
  const TrialSampler sampler(config);
  TrialRecord rec{std::vector<int>(settings.begin(), settings.end()),
                  std::vector<int>(settings.size())};
  sampler.sample(flat_index(settings), rng, rec.outcomes);
  return rec;
}

namespace {

class Tally {
 public:
  explicit Tally(std::size_t n_settings) : per_setting_(n_settings) {}

  void add(std::size_t flat, std::span<const int> outcomes) {
    int product = 1;
    int remapped = 1;
    bool any_detected = false;
    for (int m : outcomes) {
      product *= m;
      remapped *= map_f(m);
      any_detected = any_detected || m != 0;
    }
    SettingTally& t = per_setting_[flat];
    ++t.trials;
    if (product != 0) ++t.all_detected;
    t.product_sum += product;
    t.remapped_sum += remapped;
    if (!any_detected) ++all_zero_;
    ++trials_;
  }

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < per_setting_.size(); ++i) {
      SettingTally& t = per_setting_[i];
      const SettingTally& o = other.per_setting_[i];
      t.trials += o.trials;
      t.all_detected += o.all_detected;
      t.product_sum += o.product_sum;
      t.remapped_sum += o.remapped_sum;
    }
    all_zero_ += other.all_zero_;
    trials_ += other.trials_;
  }

  const std::vector<SettingTally>& per_setting() const { return per_setting_; }
  std::uint64_t all_zero() const { return all_zero_; }
  std::uint64_t trials() const { return trials_; }

 private:
  std::vector<SettingTally> per_setting_;
  std::uint64_t all_zero_ = 0;
  std::uint64_t trials_ = 0;
};

template <class Visitor>
void generate_block(const ExperimentConfig& config, const TrialSampler& sampler,
                    std::uint64_t block, Visitor&& visit) {
  const std::uint64_t begin = block * kTrialsPerBlock;
  const std::uint64_t end = std::min(config.trials, begin + kTrialsPerBlock);
  const std::uint64_t n_settings = sampler.n_setting_combinations();
  Xoshiro256 rng = Xoshiro256::stream(config.seed, block);
  std::vector<int> outcomes(static_cast<std::size_t>(config.n_parties));
  for (std::uint64_t t = begin; t < end; ++t) {
    const std::uint64_t flat = config.setting_policy == SettingPolicy::kRoundRobin
                                   ? t % n_settings
                                   : rng.below(n_settings);
    sampler.sample(static_cast<std::size_t>(flat), rng, outcomes);
    visit(static_cast<std::size_t>(flat), std::span<const int>(outcomes));
  }
}

std::uint64_t block_count(const ExperimentConfig& config) {
  return (config.trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
}

double mean(std::int64_t sum, std::uint64_t n) {
  return n == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(n);
}

ExperimentSummary summarize(const ExperimentConfig& config, const Tally& tally) {
  const int n = config.n_parties;
  const CorrelationTensor q = build_q_tensor(build_settings(n));
  ExperimentSummary s;
  s.estimated_tensor = CorrelationTensor(n);
  s.auxiliary_tensor = CorrelationTensor(n);
  s.tallies = tally.per_setting();
  for (std::size_t i = 0; i < s.tallies.size(); ++i) {
    const SettingTally& t = s.tallies[i];
    s.estimated_tensor.set(i, mean(t.product_sum, t.trials));
    s.auxiliary_tensor.set(i, mean(t.remapped_sum, t.trials));
  }
  s.trials = tally.trials();
  s.all_zero_trials = tally.all_zero();
  s.p_all_zero = static_cast<double>(s.all_zero_trials) /
                 static_cast<double>(std::max<std::uint64_t>(s.trials, 1));
  s.lhs = std::abs(scalar_product(q, s.estimated_tensor));
  s.rhs = lhv_bound(n) - s.p_all_zero * std::abs(q_entry_sum_closed_form(n));
  s.violated = s.lhs > s.rhs;

  const std::vector<double> se = entry_standard_errors(s);
  double variance = 0.0;
  for (std::size_t i = 0; i < se.size(); ++i) {
    if (q[i] != 0.0) variance += q[i] * q[i] * se[i] * se[i];
  }
  s.standard_error_lhs = std::sqrt(variance);
  s.standard_error_finite = std::isfinite(s.standard_error_lhs);
  return s;
}

Tally tally_records(std::span<const TrialRecord> records,
                    const ExperimentConfig& config) {
  config.validate();
  Tally tally(pow3(config.n_parties));
  for (const TrialRecord& r : records) {
    if (static_cast<int>(r.settings.size()) != config.n_parties ||
        r.outcomes.size() != r.settings.size()) {
      throw std::invalid_argument("trial record does not match n_parties");
    }
    for (int m : r.outcomes) {
      if (m < -1 || m > 1) throw std::invalid_argument("outcome outside {-1,0,1}");
    }
    tally.add(flat_index(r.settings), r.outcomes);
  }
  return tally;
}

}  // namespace

std::vector<double> entry_standard_errors(const ExperimentSummary& s) {
  std::vector<double> se(s.tallies.size());
  for (std::size_t i = 0; i < se.size(); ++i) {
    const SettingTally& t = s.tallies[i];
    if (t.trials < 2) {
      se[i] = std::numeric_limits<double>::infinity();
      continue;
    }
    const double n = static_cast<double>(t.trials);
    const double m = static_cast<double>(t.product_sum) / n;
    // ∏m is 0 or ±1, so Σ(∏m)² is the all-detected count.
    const double var =
        std::max(0.0, (static_cast<double>(t.all_detected) - n * m * m) / (n - 1));
    se[i] = std::sqrt(var / n);
  }
  return se;
}

ExperimentSummary run_experiment(const ExperimentConfig& config, int workers) {
  config.validate();
  if (workers < 1) throw std::invalid_argument("run_experiment: workers < 1");
  const TrialSampler sampler(config);
  const std::uint64_t blocks = block_count(config);
  const auto used = static_cast<std::size_t>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), blocks));
  std::vector<Tally> partial(used, Tally(sampler.n_setting_combinations()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < used; ++w) {
      pool.emplace_back([&, w] {
        Tally& tally = partial[w];
        for (std::uint64_t b = w; b < blocks; b += used) {
          generate_block(config, sampler, b,
                         [&](std::size_t flat, std::span<const int> outcomes) {
                           tally.add(flat, outcomes);
                         });
        }
      });
    }
  }
  Tally total(sampler.n_setting_combinations());
  for (const Tally& t : partial) total.merge(t);
  return summarize(config, total);
}

std::vector<TrialRecord> simulate_records(const ExperimentConfig& config) {
  config.validate();
  const TrialSampler sampler(config);
  std::vector<TrialRecord> records;
  records.reserve(static_cast<std::size_t>(config.trials));
  std::vector<int> settings(static_cast<std::size_t>(config.n_parties));
  for (std::uint64_t b = 0; b < block_count(config); ++b) {
    generate_block(config, sampler, b,
                   [&](std::size_t flat, std::span<const int> outcomes) {
                     unflatten(flat, settings);
                     records.push_back(
                         {settings, std::vector<int>(outcomes.begin(), outcomes.end())});
                   });
  }
  return records;
}

ExperimentSummary summarize_records(std::span<const TrialRecord> records,
                                    const ExperimentConfig& config) {
  return summarize(config, tally_records(records, config));
}

CorrelationTensor estimated_tensor(std::span<const TrialRecord> records,
                                   const ExperimentConfig& config) {
  return summarize_records(records, config).estimated_tensor;
}

CorrelationTensor auxiliary_tensor(std::span<const TrialRecord> records,
                                   const ExperimentConfig& config) {
  return summarize_records(records, config).auxiliary_tensor;
}

std::vector<SweepPoint> visibility_sweep(int n, double eta,
                                         std::span<const double> v_grid,
                                         std::uint64_t trials_per_point,
                                         std::uint64_t seed, int workers) {
  std::vector<SweepPoint> out;
  out.reserve(v_grid.size());
  for (double v : v_grid) {
    ExperimentConfig config;
    config.n_parties = n;
    config.visibility = v;
    config.efficiency = eta;
    config.trials = trials_per_point;
    config.seed = seed;
    const ExperimentSummary s = run_experiment(config, workers);
    out.push_back({v, s.lhs, s.rhs, s.violated, s.standard_error_lhs});
  }
  return out;
}

}  // namespace ghzbell
