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

#include "ghzbell/lhv.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ghzbell/ghz.h"

namespace ghzbell {

double lhv_bound(int n) { return std::ldexp(kSqrt3, n - 1); }

double violation_factor(int n) {
  if (n < 2) throw std::invalid_argument("violation_factor: n < 2");
  return q_norm_sq_closed_form(n) / lhv_bound(n);
}

CorrelationTensor hv_tensor(const DeterministicStrategy& strategy,
                            const SettingsGrid& grid) {
  const int n = grid.n_parties();
  if (strategy.n_parties() != n) {
    throw std::invalid_argument("hv_tensor: strategy has " +
                                std::to_string(strategy.n_parties()) +
                                " parties, grid has " + std::to_string(n));
  }
  CorrelationTensor h(n);
  std::vector<int> index(static_cast<std::size_t>(n));
  for (std::size_t flat = 0; flat < h.size(); ++flat) {
    unflatten(flat, index);
    int prod = 1;
    for (int k = 0; k < n; ++k) {
      prod *= strategy.party(k)[static_cast<std::size_t>(index[static_cast<std::size_t>(k)])];
    }
    h.set(flat, prod);
  }
  return h;
}

double s_lambda(const DeterministicStrategy& strategy, const CorrelationTensor& q) {
  if (strategy.alphabet() != Alphabet::kTwoOutcome) {
    throw std::invalid_argument("s_lambda: three-outcome strategy; apply map_f");
  }
  if (strategy.n_parties() != q.n_parties()) {
    throw std::invalid_argument("s_lambda: party-count mismatch");
  }
  return scalar_product(q, hv_tensor(strategy, build_settings(q.n_parties())));
}

std::complex<double> PartyPhasor::value() const {
  return std::polar(static_cast<double>(magnitude),
                    static_cast<double>(phase_class) * kPi / 6.0);
}

PartyPhasor party_phasor(const PartyAssignment& assignment, int party_index,
                         const SettingsGrid& grid) {
  const auto [a, b, c] = assignment;
  for (int v : assignment) {
    if (v != 1 && v != -1) {
      throw std::invalid_argument("party_phasor: outcome must be +1 or -1");
    }
  }
  // With phases θ, θ+π/3, θ+2π/3 and e^{iπ/3} = 1 + e^{i2π/3}:
  //   a + b e^{iπ/3} + c e^{i2π/3} = (a + b) + (b + c) e^{i2π/3}.
  const int base = grid.base_class(party_index);
  const auto flip = [](int sign) { return sign < 0 ? 6 : 0; };
  if (a == b && b == c) return {2, mod12(base + 2 + flip(a))};
  if (a == b) return {2, mod12(base + flip(a))};
  if (b == c) return {2, mod12(base + 4 + flip(b))};
  return {0, 0};
}

double s_lambda_factorized(const DeterministicStrategy& strategy,
                           const SettingsGrid& grid) {
  if (strategy.alphabet() != Alphabet::kTwoOutcome) {
    throw std::invalid_argument(
        "s_lambda_factorized: three-outcome strategy; apply map_f");
  }
  if (strategy.n_parties() != grid.n_parties()) {
    throw std::invalid_argument("s_lambda_factorized: party-count mismatch");
  }
  int phase = 0;
  for (int k = 0; k < grid.n_parties(); ++k) {
    const PartyPhasor z = party_phasor(strategy.party(k), k, grid);
    if (z.is_zero()) return 0.0;
    phase = mod12(phase + z.phase_class);
  }
  return std::ldexp(cos_twelfth(phase).value(), grid.n_parties());
}

namespace {

struct Best {
  HalfSurd value;
  std::uint64_t code = 0;
  std::uint64_t count = 0;
  bool valid = false;

  void offer(const HalfSurd& v, std::uint64_t c, std::uint64_t k = 1) {
    if (!valid) {
      *this = {v, c, k, true};
      return;
    }
    const int cmp = compare(v, value);
    if (cmp > 0) {
      *this = {v, c, k, true};
    } else if (cmp == 0) {
      count += k;
      code = std::min(code, c);
    }
  }
};

// Contracts the slot of party `k` (the last remaining index of `t`) against
// every ±1 triple and recurses toward party 0.
class Contractor {
 public:
  explicit Contractor(int n) : n_(n), buffers_(static_cast<std::size_t>(n)) {
    for (int k = 0; k < n; ++k) {
      buffers_[static_cast<std::size_t>(k)].resize(pow3(k));
    }
  }

  void contract_triple(std::span<const HalfSurd> t, int k, int triple,
                       std::uint64_t code, Best& best) {
    const PartyAssignment v = triple_from_code(triple);
    const std::uint64_t full_code =
        code | (static_cast<std::uint64_t>(triple) << (3 * (n_ - 1 - k)));
    auto& out = buffers_[static_cast<std::size_t>(k)];
    for (std::size_t j = 0; j < out.size(); ++j) {
      out[j] = v[0] * t[3 * j] + v[1] * t[3 * j + 1] + v[2] * t[3 * j + 2];
    }
    if (k == 0) {
      best.offer(out[0], full_code);
      return;
    }
    for (int next = 0; next < 8; ++next) {
      contract_triple(out, k - 1, next, full_code, best);
    }
  }

 private:
  int n_;
  std::vector<std::vector<HalfSurd>> buffers_;
};

}  // namespace

BruteForceResult max_s_brute(int n, int workers) {
  if (n < 2 || n > kMaxBruteParties) {
    throw std::invalid_argument("max_s_brute: n must be in [2, " +
                                std::to_string(kMaxBruteParties) + "], got " +
                                std::to_string(n));
  }
  if (workers < 1) throw std::invalid_argument("max_s_brute: workers < 1");
  const std::vector<HalfSurd> q = build_q_tensor_exact(build_settings(n));

  // Task t fixes the last party's triple; workers take tasks by stride and
  // the merge is order-independent.
  constexpr int kTasks = 8;
  const int used = std::min(workers, kTasks);
  std::vector<Best> partial(static_cast<std::size_t>(used));
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < used; ++w) {
      pool.emplace_back([&, w] {
        Contractor contractor(n);
        for (int task = w; task < kTasks; task += used) {
          contractor.contract_triple(q, n - 1, task, 0,
                                     partial[static_cast<std::size_t>(w)]);
        }
      });
    }
  }
  Best best;
  for (const Best& b : partial) {
    if (b.valid) best.offer(b.value, b.code, b.count);
  }

  BruteForceResult r;
  r.n = n;
  r.exact_max = best.value;
  r.max_s = best.value.value();
  r.argmax = DeterministicStrategy::from_code(n, best.code);
  r.maximizer_count = best.count;
  return r;
}

FactorizedResult max_s_factorized(int n) {
  if (n < 2 || n > kMaxFactorizedParties) {
    throw std::invalid_argument("max_s_factorized: n out of range");
  }
  const SettingsGrid grid = build_settings(n);

  // Nonzero phasor class for each triple code, -1 for a zero phasor. Party 0
  // and the remaining parties have different phase offsets.
  auto classes_for = [&](int party) {
    std::array<int, 8> cls{};
    for (int t = 0; t < 8; ++t) {
      const PartyPhasor z = party_phasor(triple_from_code(t), party, grid);
      cls[static_cast<std::size_t>(t)] = z.is_zero() ? -1 : z.phase_class;
    }
    return cls;
  };
  const std::array<int, 8> first = classes_for(0);
  const std::array<int, 8> rest = classes_for(1);
  auto party_classes = [&](int k) -> const std::array<int, 8>& {
    return k == 0 ? first : rest;
  };

  // reach[k][c]: parties k..n-1, all with nonzero phasors, can produce a
  // total phase class c.
  using Row = std::array<bool, 12>;
  std::vector<Row> reach(static_cast<std::size_t>(n) + 1, Row{});
  reach[static_cast<std::size_t>(n)][0] = true;
  for (int k = n - 1; k >= 0; --k) {
    Row& row = reach[static_cast<std::size_t>(k)];
    const Row& next = reach[static_cast<std::size_t>(k) + 1];
    for (int c = 0; c < 12; ++c) {
      for (int cls : party_classes(k)) {
        if (cls >= 0 && next[static_cast<std::size_t>(mod12(c - cls))]) {
          row[static_cast<std::size_t>(c)] = true;
          break;
        }
      }
    }
  }

  std::vector<int> targets;
  HalfSurd best_cos{-2, 0};
  for (int c = 0; c < 12; ++c) {
    if (!reach[0][static_cast<std::size_t>(c)]) continue;
    const int cmp = compare(cos_twelfth(c), best_cos);
    if (cmp > 0) {
      best_cos = cos_twelfth(c);
      targets.assign(1, c);
    } else if (cmp == 0) {
      targets.push_back(c);
    }
  }
  if (targets.empty() || compare(best_cos, HalfSurd{}) <= 0) {
    throw std::logic_error("max_s_factorized: no positive product phase");
  }

  // Greedy reconstruction in code order gives the lexicographically smallest
  // maximizer.
  std::vector<PartyAssignment> parties;
  parties.reserve(static_cast<std::size_t>(n));
  int acc = 0;
  for (int k = 0; k < n; ++k) {
    const Row& next = reach[static_cast<std::size_t>(k) + 1];
    bool chosen = false;
    for (int t = 0; t < 8 && !chosen; ++t) {
      const int cls = party_classes(k)[static_cast<std::size_t>(t)];
      if (cls < 0) continue;
      for (int target : targets) {
        if (next[static_cast<std::size_t>(mod12(target - acc - cls))]) {
          parties.push_back(triple_from_code(t));
          acc = mod12(acc + cls);
          chosen = true;
          break;
        }
      }
    }
    if (!chosen) throw std::logic_error("max_s_factorized: reconstruction failed");
  }

  FactorizedResult r;
  r.n = n;
  r.phase_class = acc;
  r.max_s = std::ldexp(best_cos.value(), n);
  r.argmax = DeterministicStrategy(Alphabet::kTwoOutcome, std::move(parties));
  return r;
}

}  // namespace ghzbell
