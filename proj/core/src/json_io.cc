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

#include "ghzbell/json_io.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace ghzbell {

using nlohmann::json;

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json tensor_to_json(const CorrelationTensor& t) {
  json entries = json::array();
  for (double v : t.entries()) entries.push_back(v);
  return {{"n_parties", t.n_parties()}, {"entries", std::move(entries)}};
}

CorrelationTensor tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n_parties") || !j.contains("entries") ||
      !j["n_parties"].is_number_integer() || !j["entries"].is_array()) {
    throw std::invalid_argument("tensor JSON needs integer n_parties and entries array");
  }
  std::vector<double> entries;
  entries.reserve(j["entries"].size());
  for (const json& v : j["entries"]) {
    if (!v.is_number()) throw std::invalid_argument("tensor entry is not a number");
    entries.push_back(v.get<double>());
  }
  return CorrelationTensor(j["n_parties"].get<int>(), std::move(entries));
}

json strategy_to_json(const DeterministicStrategy& s) {
  json out = json::array();
  for (const PartyAssignment& p : s.parties()) out.push_back({p[0], p[1], p[2]});
  return out;
}

json maximizer_to_json(int n, double max_s, const DeterministicStrategy& argmax) {
  return {{"n", n},
          {"max_s", number_or_null(max_s)},
          {"bound", number_or_null(lhv_bound(n))},
          {"argmax", strategy_to_json(argmax)}};
}

json threshold_table_to_json(std::span<const ThresholdRow> rows) {
  json out = json::array();
  for (const ThresholdRow& r : rows) {
    out.push_back({{"n", r.n},
                   {"v_cr_new", number_or_null(r.v_cr_new)},
                   {"v_cr_old", number_or_null(r.v_cr_old)},
                   {"eta_cr", number_or_null(r.eta_cr)}});
  }
  return out;
}

std::string threshold_table_to_csv(std::span<const ThresholdRow> rows) {
  std::string out = "n,v_cr_new,v_cr_old,eta_cr\n";
  char buf[128];
  for (const ThresholdRow& r : rows) {
    std::snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%.6f\n", r.n, r.v_cr_new,
                  r.v_cr_old, r.eta_cr);
    out += buf;
  }
  return out;
}

json config_to_json(const ExperimentConfig& c) {
  return {{"n_parties", c.n_parties},
          {"visibility", c.visibility},
          {"efficiency", c.efficiency},
          {"trials", c.trials},
          {"seed", c.seed},
          {"setting_policy", std::string(to_string(c.setting_policy))}};
}

json summary_to_json(const ExperimentSummary& s, const ExperimentConfig& c) {
  return {{"config", config_to_json(c)},
          {"estimated_tensor", tensor_to_json(s.estimated_tensor)},
          {"auxiliary_tensor", tensor_to_json(s.auxiliary_tensor)},
          {"trials", s.trials},
          {"all_zero_trials", s.all_zero_trials},
          {"p_all_zero", s.p_all_zero},
          {"lhs", s.lhs},
          {"rhs", s.rhs},
          {"violated", s.violated},
          {"standard_error_lhs", number_or_null(s.standard_error_lhs)},
          {"standard_error_finite", s.standard_error_finite}};
}

json sweep_to_json(std::span<const SweepPoint> points) {
  json out = json::array();
  for (const SweepPoint& p : points) {
    out.push_back({{"visibility", p.visibility},
                   {"lhs", p.lhs},
                   {"rhs", p.rhs},
                   {"violated", p.violated},
                   {"standard_error_lhs", number_or_null(p.standard_error_lhs)}});
  }
  return out;
}

std::string sweep_to_csv(std::span<const SweepPoint> points) {
  std::string out = "visibility,lhs,rhs,violated,standard_error_lhs\n";
  char buf[160];
  for (const SweepPoint& p : points) {
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%s,%.6f\n", p.visibility,
                  p.lhs, p.rhs, p.violated ? "true" : "false",
                  p.standard_error_lhs);
    out += buf;
  }
  return out;
}

}  // namespace ghzbell
