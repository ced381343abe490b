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

#ifndef GHZBELL_JSON_IO_H_
#define GHZBELL_JSON_IO_H_

#include <span>
#include <string>

#include <nlohmann/json.hpp>

#include "ghzbell/experiment.h"
#include "ghzbell/lhv.h"
#include "ghzbell/strategy.h"
#include "ghzbell/tensor.h"
#include "ghzbell/thresholds.h"

namespace ghzbell {

// Non-finite doubles serialize as null throughout.
nlohmann::json number_or_null(double v);

// {"n_parties": N, "entries": [...]} in row-major order.
nlohmann::json tensor_to_json(const CorrelationTensor& t);
// Throws std::invalid_argument on schema violations.
CorrelationTensor tensor_from_json(const nlohmann::json& j);

// [[v, v, v], ...], one triple per party.
nlohmann::json strategy_to_json(const DeterministicStrategy& s);

// {"n": N, "max_s": ..., "bound": ..., "argmax": [[v,v,v], ...]}
nlohmann::json maximizer_to_json(int n, double max_s,
                                 const DeterministicStrategy& argmax);

nlohmann::json threshold_table_to_json(std::span<const ThresholdRow> rows);
// Header `n,v_cr_new,v_cr_old,eta_cr`, values with 6 decimals.
std::string threshold_table_to_csv(std::span<const ThresholdRow> rows);

nlohmann::json config_to_json(const ExperimentConfig& c);
// Every ExperimentSummary field plus the config under "config".
nlohmann::json summary_to_json(const ExperimentSummary& s,
                               const ExperimentConfig& c);

nlohmann::json sweep_to_json(std::span<const SweepPoint> points);
// Header `visibility,lhs,rhs,violated,standard_error_lhs`.
std::string sweep_to_csv(std::span<const SweepPoint> points);

}  // namespace ghzbell

#endif  // GHZBELL_JSON_IO_H_
