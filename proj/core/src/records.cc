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

#include "ghzbell/records.h"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ghzbell {

std::string format_record(const TrialRecord& r) {
  std::string line;
  for (int s : r.settings) {
    line += std::to_string(s + 1);
    line += ' ';
  }
  line += '|';
  for (int m : r.outcomes) {
    line += ' ';
    line += std::to_string(m);
  }
  return line;
}

void write_records(std::ostream& out, std::span<const TrialRecord> records) {
  for (const TrialRecord& r : records) out << format_record(r) << '\n';
}

namespace {

std::vector<int> parse_ints(std::string_view text, std::string_view what) {
  std::istringstream in{std::string(text)};
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) {
      throw std::invalid_argument("bad " + std::string(what) + " token '" +
                                  token + "'");
    }
    values.push_back(v);
  }
  return values;
}

}  // namespace

TrialRecord parse_record(std::string_view line) {
  const auto bar = line.find('|');
  if (bar == std::string_view::npos || line.find('|', bar + 1) != std::string_view::npos) {
    throw std::invalid_argument("trial record needs exactly one '|'");
  }
  TrialRecord r;
  r.settings = parse_ints(line.substr(0, bar), "setting");
  r.outcomes = parse_ints(line.substr(bar + 1), "outcome");
  if (r.settings.empty() || r.settings.size() != r.outcomes.size()) {
    throw std::invalid_argument("trial record: settings/outcomes length mismatch");
  }
  for (int& s : r.settings) {
    if (s < 1 || s > 3) throw std::invalid_argument("setting outside {1,2,3}");
    --s;
  }
  for (int m : r.outcomes) {
    if (m < -1 || m > 1) throw std::invalid_argument("outcome outside {-1,0,1}");
  }
  return r;
}

std::vector<TrialRecord> read_records(std::istream& in) {
  std::vector<TrialRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      records.push_back(parse_record(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (records.back().settings.size() != records.front().settings.size()) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": party count differs from first record");
    }
  }
  return records;
}

}  // namespace ghzbell
