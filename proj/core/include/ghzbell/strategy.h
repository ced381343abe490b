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

#ifndef GHZBELL_STRATEGY_H_
#define GHZBELL_STRATEGY_H_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "ghzbell/settings.h"

namespace ghzbell {

enum class Alphabet {
  kTwoOutcome,    // outcomes ±1
  kThreeOutcome,  // outcomes ±1 and 0 for a non-detection
};

// Outcome assigned to each of one party's three settings.
using PartyAssignment = std::array<int, kSettingsPerParty>;

// One deterministic local hidden state: every party answers each of its
// settings with a fixed outcome.
class DeterministicStrategy {
 public:
  // Throws std::invalid_argument if any value lies outside the alphabet.
  DeterministicStrategy(Alphabet alphabet, std::vector<PartyAssignment> parties);

  // Two-outcome strategy from its lexicographic code. Bit 3N-1 holds party 0,
  // setting 0; a set bit means +1. Code order therefore matches the order on
  // assignment sequences (party-major, setting-minor, -1 < +1).
  static DeterministicStrategy from_code(int n_parties, std::uint64_t code);

  Alphabet alphabet() const { return alphabet_; }
  int n_parties() const { return static_cast<int>(parties_.size()); }
  std::span<const PartyAssignment> parties() const { return parties_; }
  const PartyAssignment& party(int k) const {
    return parties_.at(static_cast<std::size_t>(k));
  }

  // Inverse of from_code. Throws std::logic_error for three-outcome
  // strategies or more than 21 parties.
  std::uint64_t code() const;

  friend bool operator==(const DeterministicStrategy&,
                         const DeterministicStrategy&) = default;

 private:
  Alphabet alphabet_;
  std::vector<PartyAssignment> parties_;
};

// Code of a single party's ±1 triple: setting 0 is the high bit.
int triple_code(const PartyAssignment& a);
PartyAssignment triple_from_code(int code);

// Remaps a three-outcome strategy to a two-outcome one via f(±1) = ±1,
// f(0) = -1. Two-outcome input is returned unchanged.
DeterministicStrategy map_f(const DeterministicStrategy& s);

inline constexpr int map_f(int outcome) { return outcome == 0 ? -1 : outcome; }

}  // namespace ghzbell

#endif  // GHZBELL_STRATEGY_H_
