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

#ifndef GHZBELL_RECORDS_H_
#define GHZBELL_RECORDS_H_

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ghzbell/experiment.h"

namespace ghzbell {

// Newline-delimited trial records:
//
//   s_1 s_2 ... s_N | m_1 m_2 ... m_N
//
// with 1-based settings s in {1,2,3} and outcomes m in {-1,0,1}.
std::string format_record(const TrialRecord& r);
void write_records(std::ostream& out, std::span<const TrialRecord> records);

// Throws std::invalid_argument on malformed input.
TrialRecord parse_record(std::string_view line);
// Blank lines are skipped; every record must have the same party count.
std::vector<TrialRecord> read_records(std::istream& in);

}  // namespace ghzbell

#endif  // GHZBELL_RECORDS_H_
