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

#ifndef GHZBELL_TENSOR_H_
#define GHZBELL_TENSOR_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ghzbell {

// Largest party count for which a dense 3^N tensor is materialized.
inline constexpr int kMaxTensorParties = 14;

// 3^n. Throws std::invalid_argument when n is negative or 3^n overflows.
std::size_t pow3(int n);

// Row-major flat offset of a multi-index; index[0] varies slowest. Each
// component must lie in 0..2.
std::size_t flat_index(std::span<const int> index);

// Inverse of flat_index for a tensor with index.size() parties.
void unflatten(std::size_t flat, std::span<int> index);

// Dense real tensor with N indices, each ranging over the three local
// settings. Entries always lie in [-1, 1].
class CorrelationTensor {
 public:
  // All-zero tensor.
  explicit CorrelationTensor(int n_parties);
  // Validates length == 3^n_parties and every entry in [-1, 1].
  CorrelationTensor(int n_parties, std::vector<double> entries);

  int n_parties() const { return n_parties_; }
  std::size_t size() const { return entries_.size(); }
  std::span<const double> entries() const { return entries_; }

  double operator[](std::size_t flat) const { return entries_[flat]; }
  double at(std::span<const int> index) const;

  void set(std::size_t flat, double value);

 private:
  int n_parties_;
  std::vector<double> entries_;
};

double tensor_norm_sq(const CorrelationTensor& t);
double tensor_entry_sum(const CorrelationTensor& t);
// Throws std::invalid_argument on n_parties mismatch.
double scalar_product(const CorrelationTensor& a, const CorrelationTensor& b);

}  // namespace ghzbell

#endif  // GHZBELL_TENSOR_H_
