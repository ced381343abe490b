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

#include "ghzbell/settings.h"

#include <stdexcept>
#include <string>

namespace ghzbell {

const PhaseTriple& SettingsGrid::party(int k) const {
  if (k < 0 || k >= n_parties()) {
    throw std::out_of_range("party index " + std::to_string(k));
  }
  return phases_[static_cast<std::size_t>(k)];
}

const PiFraction& SettingsGrid::phase(int party_index, int setting) const {
  if (setting < 0 || setting >= kSettingsPerParty) {
    throw std::out_of_range("setting index " + std::to_string(setting));
  }
  return party(party_index)[static_cast<std::size_t>(setting)];
}

PiFraction SettingsGrid::phase_sum(std::span<const int> settings) const {
  if (static_cast<int>(settings.size()) != n_parties()) {
    throw std::invalid_argument("phase_sum: settings length mismatch");
  }
  PiFraction sum;
  for (int k = 0; k < n_parties(); ++k) {
    sum = sum + phase(k, settings[static_cast<std::size_t>(k)]);
  }
  return sum.reduced();
}

int SettingsGrid::base_class(int party_index) const {
  return party(party_index)[0].twelfth_class();
}

SettingsGrid build_settings(int n) {
  if (n < 2) {
    throw std::invalid_argument("build_settings: need at least 2 parties, got " +
                                std::to_string(n));
  }
  std::vector<PhaseTriple> phases;
  phases.reserve(static_cast<std::size_t>(n));
  phases.push_back({PiFraction(1, 6), PiFraction(1, 2), PiFraction(5, 6)});
  for (int k = 1; k < n; ++k) {
    phases.push_back({PiFraction(0, 1), PiFraction(1, 3), PiFraction(2, 3)});
  }
  return SettingsGrid(std::move(phases));
}

}  // namespace ghzbell
