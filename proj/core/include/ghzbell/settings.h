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

#ifndef GHZBELL_SETTINGS_H_
#define GHZBELL_SETTINGS_H_

#include <array>
#include <span>
#include <vector>

#include "ghzbell/phase.h"

namespace ghzbell {

inline constexpr int kSettingsPerParty = 3;

using PhaseTriple = std::array<PiFraction, kSettingsPerParty>;

// Local phase settings for N parties. Party 0 measures at
// (π/6, π/2, 5π/6); every other party at (0, π/3, 2π/3).
class SettingsGrid {
 public:
  int n_parties() const { return static_cast<int>(phases_.size()); }

  const PhaseTriple& party(int k) const;
  const PiFraction& phase(int party, int setting) const;

  // Sum of the selected phases, one setting index (0..2) per party.
  PiFraction phase_sum(std::span<const int> settings) const;

  // Phase of setting 0 of party k in units of π/6.
  int base_class(int party) const;

 private:
  friend SettingsGrid build_settings(int n);
  explicit SettingsGrid(std::vector<PhaseTriple> phases)
      : phases_(std::move(phases)) {}

  std::vector<PhaseTriple> phases_;
};

// Throws std::invalid_argument for n < 2.
SettingsGrid build_settings(int n);

}  // namespace ghzbell

#endif  // GHZBELL_SETTINGS_H_
