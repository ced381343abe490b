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

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ghzbell/ghz.h"
#include "ghzbell/lhv.h"
#include "ghzbell/rng.h"
#include "ghzbell/thresholds.h"

namespace ghzbell {

namespace {

constexpr int kIdentityMaxN = 10;

const std::array<const char*, 9> kCheckNames = {
    "norm_identity",       "entry_sum_identity",   "brute_bound",
    "brute_vs_factorized", "violation_factor",     "critical_visibility",
    "critical_efficiency", "phasor_value_sets",    "f_mapping",
};

class Checker {
 public:
  explicit Checker(std::string fault) : fault_(std::move(fault)) {}

  // Added to every quantity measured by check `name`.
  double offset(const std::string& name) const {
    return name == fault_ ? 1e3 : 0.0;
  }

  void record(const std::string& name, bool passed, std::string detail) {
    results_.push_back({name, passed, std::move(detail)});
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string fault_;
  std::vector<CheckResult> results_;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

void check_norms(Checker& c) {
  const std::string name = "norm_identity";
  double worst = 0.0;
  for (int n = 2; n <= kIdentityMaxN; ++n) {
    const double got = tensor_norm_sq(build_q_tensor(build_settings(n))) + c.offset(name);
    worst = std::max(worst, std::abs(got - q_norm_sq_closed_form(n)));
  }
  c.record(name, worst < 1e-9, "max |‖Q‖² - 3^N/2| = " + fmt(worst) + " for N=2..10");
}

void check_entry_sums(Checker& c) {
  const std::string name = "entry_sum_identity";
  double worst = 0.0;
  bool zeros_ok = true;
  for (int n = 2; n <= kIdentityMaxN; ++n) {
    const double got = tensor_entry_sum(build_q_tensor(build_settings(n))) + c.offset(name);
    worst = std::max(worst, std::abs(got - q_entry_sum_closed_form(n)));
    if (n % 3 == 1) zeros_ok = zeros_ok && std::abs(got) < 1e-9;
  }
  c.record(name, worst < 1e-9 && zeros_ok,
           "max |q_N - closed form| = " + fmt(worst) +
               (zeros_ok ? ", zero at N=4,7,10" : ", nonzero at N=4,7,10"));
}

void check_brute(Checker& c, int n_max, int workers) {
  const std::string bound_name = "brute_bound";
  const std::string pair_name = "brute_vs_factorized";
  double worst_bound = 0.0;
  bool agree = true;
  std::string mismatch;
  for (int n = 2; n <= n_max; ++n) {
    const BruteForceResult brute = max_s_brute(n, workers);
    const FactorizedResult fact = max_s_factorized(n);
    worst_bound = std::max(
        worst_bound, std::abs(brute.max_s + c.offset(bound_name) - lhv_bound(n)));
    const double b = std::round(brute.max_s * 1e9);
    const double f = std::round((fact.max_s + c.offset(pair_name)) * 1e9);
    if (b != f || !(brute.argmax == fact.argmax)) {
      agree = false;
      mismatch = " (first mismatch at N=" + std::to_string(n) + ")";
    }
  }
  const std::string range = " for N=2.." + std::to_string(n_max);
  c.record(bound_name, worst_bound < 1e-9,
           "max |max S - 2^(N-1)√3| = " + fmt(worst_bound) + range);
  c.record(pair_name, agree,
           (agree ? "maxima and argmax agree" : "disagreement") + range + mismatch);
}

void check_violation_factor(Checker& c) {
  const std::string name = "violation_factor";
  double worst = 0.0;
  for (int n = 2; n <= kIdentityMaxN; ++n) {
    const CorrelationTensor q = build_q_tensor(build_settings(n));
    const double ratio = scalar_product(q, q) / lhv_bound(n) + c.offset(name);
    worst = std::max(worst, std::abs(ratio - std::pow(1.5, n) / kSqrt3));
  }
  c.record(name, worst < 1e-12,
           "max |(Q,Q)/bound - (3/2)^N/√3| = " + fmt(worst) + " for N=2..10");
}

void check_visibility(Checker& c) {
  const std::string name = "critical_visibility";
  bool ok = true;
  std::string detail;
  for (int n = 2; n <= 20; ++n) {
    const double v = critical_visibility(n, 1.0).v_critical + c.offset(name);
    if (std::abs(v - kSqrt3 * std::pow(2.0 / 3.0, n)) >= 1e-12) {
      ok = false;
      detail += " formula mismatch at N=" + std::to_string(n) + ";";
    }
    const bool new_lower = v < old_visibility_threshold(n);
    if (new_lower != (n >= 4)) {
      ok = false;
      detail += " crossover wrong at N=" + std::to_string(n) + ";";
    }
  }
  const std::array<std::pair<int, const char*>, 4> expect_new = {
      {{3, "51.3"}, {4, "34.2"}, {5, "22.8"}, {10, "3.0"}}};
  for (const auto& [n, pct] : expect_new) {
    const std::string got = format_percent(critical_visibility(n, 1.0).v_critical +
                                           c.offset(name));
    if (got != pct) {
      ok = false;
      detail += " V_cr(" + std::to_string(n) + ")=" + got + "%;";
    }
  }
  const std::array<std::pair<int, const char*>, 5> expect_old = {
      {{2, "70.7"}, {3, "50.0"}, {4, "35.4"}, {5, "25.0"}, {10, "4.4"}}};
  for (const auto& [n, pct] : expect_old) {
    const std::string got = format_percent(old_visibility_threshold(n));
    if (got != pct) {
      ok = false;
      detail += " V_old(" + std::to_string(n) + ")=" + got + "%;";
    }
  }
  c.record(name, ok, ok ? "√3(2/3)^N for N=2..20; table percentages match" : detail);
}

void check_efficiency(Checker& c) {
  const std::string name = "critical_efficiency";
  bool ok = true;
  std::string detail;
  const std::array<std::pair<int, const char*>, 4> expect = {
      {{2, "87.0"}, {3, "79.8"}, {4, "76.5"}, {5, "74.4"}}};
  for (const auto& [n, pct] : expect) {
    const std::string got = format_percent(critical_efficiency(n) + c.offset(name));
    if (got != pct) {
      ok = false;
      detail += " eta_cr(" + std::to_string(n) + ")=" + got + "%;";
    }
  }
  for (int n : {4, 7, 10}) {
    const double closed = std::pow(kSqrt3 / std::pow(1.5, n), 1.0 / n);
    if (std::abs(critical_efficiency(n) + c.offset(name) - closed) >= 1e-12) {
      ok = false;
      detail += " closed form mismatch at N=" + std::to_string(n) + ";";
    }
  }
  for (int n = 2; n <= 12; ++n) {
    const double v = critical_visibility(n, critical_efficiency(n)).v_critical;
    if (std::abs(v + c.offset(name) - 1.0) >= 1e-9) {
      ok = false;
      detail += " V_cr(eta_cr) != 1 at N=" + std::to_string(n) + ";";
    }
  }
  const double eta40 = critical_efficiency(40) + c.offset(name);
  if (!(eta40 > 0.6667 && eta40 < 0.68)) {
    ok = false;
    detail += " eta_cr(40)=" + fmt(eta40) + ";";
  }
  c.record(name, ok, ok ? "roots, closed forms and consistency hold" : detail);
}

void check_phasors(Checker& c) {
  const std::string name = "phasor_value_sets";
  const SettingsGrid grid = build_settings(2);
  // (magnitude, class) pairs: party 0 at odd classes, others at even.
  const std::set<std::pair<int, int>> expect_first = {
      {0, 0}, {2, 1}, {2, 3}, {2, 5}, {2, 7}, {2, 9}, {2, 11}};
  const std::set<std::pair<int, int>> expect_rest = {
      {0, 0}, {2, 0}, {2, 2}, {2, 4}, {2, 6}, {2, 8}, {2, 10}};
  bool ok = true;
  for (int party = 0; party < 2; ++party) {
    std::set<std::pair<int, int>> got;
    for (int t = 0; t < 8; ++t) {
      const PartyAssignment a = triple_from_code(t);
      const PartyPhasor z = party_phasor(a, party, grid);
      got.insert({z.magnitude, z.phase_class});
      std::complex<double> direct;
      for (int i = 0; i < 3; ++i) {
        direct += static_cast<double>(a[static_cast<std::size_t>(i)]) *
                  std::polar(1.0, grid.phase(party, i).radians());
      }
      if (std::abs(direct - z.value()) + c.offset(name) > 1e-12) ok = false;
    }
    if (got != (party == 0 ? expect_first : expect_rest)) ok = false;
  }
  c.record(name, ok, ok ? "8 sign triples map onto the 7-element sets"
                        : "phasor value set mismatch");
}

void check_f_mapping(Checker& c) {
  const std::string name = "f_mapping";
  constexpr int kN = 3;
  constexpr int kSamples = 10000;
  const SettingsGrid grid = build_settings(kN);
  const CorrelationTensor q = build_q_tensor(grid);
  const double bound = lhv_bound(kN);
  Xoshiro256 rng(20260101);
  int violations = 0;
  for (int s = 0; s < kSamples; ++s) {
    std::vector<PartyAssignment> parties(kN);
    for (auto& p : parties) {
      for (int& v : p) v = static_cast<int>(rng.below(3)) - 1;
    }
    const DeterministicStrategy mapped =
        map_f(DeterministicStrategy(Alphabet::kThreeOutcome, std::move(parties)));
    if (s_lambda(mapped, q) + c.offset(name) > bound + 1e-9) ++violations;
  }
  c.record(name, violations == 0,
           std::to_string(violations) + " of 10000 remapped N=3 strategies exceed 4√3");
}

}  // namespace

std::vector<std::string> verification_check_names() {
  return {kCheckNames.begin(), kCheckNames.end()};
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  if (options.n_max_brute < 2 || options.n_max_brute > kMaxBruteParties) {
    throw std::invalid_argument("n_max_brute must be in [2, " +
                                std::to_string(kMaxBruteParties) + "]");
  }
  if (!options.inject_fault.empty() &&
      std::find(kCheckNames.begin(), kCheckNames.end(), options.inject_fault) ==
          kCheckNames.end()) {
    throw std::invalid_argument("unknown check '" + options.inject_fault + "'");
  }
  Checker c(options.inject_fault);
  check_norms(c);
  check_entry_sums(c);
  check_brute(c, options.n_max_brute, options.workers);
  check_violation_factor(c);
  check_visibility(c);
  check_efficiency(c);
  check_phasors(c);
  check_f_mapping(c);
  return c.take();
}

}  // namespace ghzbell
