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

#include "ghzbell/tensor.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace ghzbell {

std::size_t pow3(int n) {
  if (n < 0) throw std::invalid_argument("pow3: negative exponent");
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) {
    if (r > std::numeric_limits<std::size_t>::max() / 3) {
      throw std::invalid_argument("pow3: overflow");
    }
    r *= 3;
  }
  return r;
}

std::size_t flat_index(std::span<const int> index) {
  std::size_t flat = 0;
  for (int i : index) {
    if (i < 0 || i > 2) {
      throw std::out_of_range("multi-index component " + std::to_string(i));
    }
    flat = flat * 3 + static_cast<std::size_t>(i);
  }
  return flat;
}

void unflatten(std::size_t flat, std::span<int> index) {
  for (std::size_t k = index.size(); k-- > 0;) {
    index[k] = static_cast<int>(flat % 3);
    flat /= 3;
  }
}

namespace {

std::size_t checked_size(int n_parties) {
  if (n_parties < 1 || n_parties > kMaxTensorParties) {
    throw std::invalid_argument("CorrelationTensor: unsupported party count " +
                                std::to_string(n_parties));
  }
  return pow3(n_parties);
}

void check_entry(double v) {
  if (!(v >= -1.0 && v <= 1.0)) {
    throw std::invalid_argument("CorrelationTensor: entry outside [-1, 1]");
  }
}

void check_shapes(const CorrelationTensor& a, const CorrelationTensor& b) {
  if (a.n_parties() != b.n_parties()) {
    throw std::invalid_argument("tensor shape mismatch: " +
                                std::to_string(a.n_parties()) + " vs " +
                                std::to_string(b.n_parties()) + " parties");
  }
}

}  // namespace

CorrelationTensor::CorrelationTensor(int n_parties)
    : n_parties_(n_parties), entries_(checked_size(n_parties), 0.0) {}

CorrelationTensor::CorrelationTensor(int n_parties, std::vector<double> entries)
    : n_parties_(n_parties), entries_(std::move(entries)) {
  if (entries_.size() != checked_size(n_parties)) {
    throw std::invalid_argument("CorrelationTensor: expected " +
                                std::to_string(pow3(n_parties)) +
                                " entries, got " +
                                std::to_string(entries_.size()));
  }
  for (double v : entries_) check_entry(v);
}

double CorrelationTensor::at(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != n_parties_) {
    throw std::invalid_argument("CorrelationTensor::at: index rank mismatch");
  }
  return entries_[flat_index(index)];
}

void CorrelationTensor::set(std::size_t flat, double value) {
  check_entry(value);
  entries_.at(flat) = value;
}

double tensor_norm_sq(const CorrelationTensor& t) {
  double s = 0.0;
  for (double v : t.entries()) s += v * v;
  return s;
}

double tensor_entry_sum(const CorrelationTensor& t) {
  double s = 0.0;
  for (double v : t.entries()) s += v;
  return s;
}

double scalar_product(const CorrelationTensor& a, const CorrelationTensor& b) {
  check_shapes(a, b);
  double s = 0.0;
  const auto ea = a.entries();
  const auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) s += ea[i] * eb[i];
  return s;
}

}  // namespace ghzbell
