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

#include "ghzbell/strategy.h"

#include <stdexcept>

namespace ghzbell {

namespace {

constexpr int kMaxCodedParties = 21;  // 3·21 = 63 bits

bool in_alphabet(Alphabet a, int v) {
  if (v == 1 || v == -1) return true;
  return a == Alphabet::kThreeOutcome && v == 0;
}

}  // namespace

DeterministicStrategy::DeterministicStrategy(Alphabet alphabet,
                                             std::vector<PartyAssignment> parties)
    : alphabet_(alphabet), parties_(std::move(parties)) {
  if (parties_.empty()) {
    throw std::invalid_argument("DeterministicStrategy: no parties");
  }
  for (const auto& p : parties_) {
    for (int v : p) {
      if (!in_alphabet(alphabet_, v)) {
        throw std::invalid_argument(
            "DeterministicStrategy: outcome outside alphabet");
      }
    }
  }
}

int triple_code(const PartyAssignment& a) {
  int code = 0;
  for (int v : a) code = (code << 1) | (v == 1 ? 1 : 0);
  return code;
}

PartyAssignment triple_from_code(int code) {
  PartyAssignment a{};
  for (int i = 0; i < kSettingsPerParty; ++i) {
    a[static_cast<std::size_t>(i)] = ((code >> (2 - i)) & 1) != 0 ? 1 : -1;
  }
  return a;
}

DeterministicStrategy DeterministicStrategy::from_code(int n_parties,
                                                       std::uint64_t code) {
  if (n_parties < 1 || n_parties > kMaxCodedParties) {
    throw std::invalid_argument("from_code: unsupported party count");
  }
  if (code >> (3 * n_parties) != 0) {
    throw std::invalid_argument("from_code: code out of range");
  }
  std::vector<PartyAssignment> parties(static_cast<std::size_t>(n_parties));
  for (int k = n_parties - 1; k >= 0; --k) {
    parties[static_cast<std::size_t>(k)] = triple_from_code(static_cast<int>(code & 7));
    code >>= 3;
  }
  return DeterministicStrategy(Alphabet::kTwoOutcome, std::move(parties));
}

std::uint64_t DeterministicStrategy::code() const {
  if (alphabet_ != Alphabet::kTwoOutcome) {
    throw std::logic_error("code: only two-outcome strategies are coded");
  }
  if (n_parties() > kMaxCodedParties) {
    throw std::logic_error("code: too many parties");
  }
  std::uint64_t code = 0;
  for (const auto& p : parties_) {
    code = (code << 3) | static_cast<std::uint64_t>(triple_code(p));
  }
  return code;
}

DeterministicStrategy map_f(const DeterministicStrategy& s) {
  std::vector<PartyAssignment> out(s.parties().begin(), s.parties().end());
  for (auto& p : out) {
    for (int& v : p) v = map_f(v);
  }
  return DeterministicStrategy(Alphabet::kTwoOutcome, std::move(out));
}

}  // namespace ghzbell
