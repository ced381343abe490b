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

#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

namespace ghzbell {
namespace {

TEST(MultiIndex, RowMajorFirstIndexSlowest) {
  const int a[] = {0, 0, 1};
  const int b[] = {1, 0, 0};
  EXPECT_EQ(flat_index(a), 1u);
  EXPECT_EQ(flat_index(b), 9u);
  std::vector<int> back(3);
  for (std::size_t f = 0; f < 27; ++f) {
    unflatten(f, back);
    EXPECT_EQ(flat_index(back), f);
  }
  const int bad[] = {0, 3};
  EXPECT_THROW(flat_index(bad), std::out_of_range);
}

TEST(CorrelationTensor, ValidatesShapeAndRange) {
  EXPECT_THROW(CorrelationTensor(2, std::vector<double>(8, 0.0)), std::invalid_argument);
  EXPECT_THROW(CorrelationTensor(2, std::vector<double>(9, 1.5)), std::invalid_argument);
  CorrelationTensor t(2);
  EXPECT_EQ(t.size(), 9u);
  EXPECT_THROW(t.set(0, -1.01), std::invalid_argument);
  t.set(4, -1.0);
  const int idx[] = {1, 1};
  EXPECT_EQ(t.at(idx), -1.0);
}

TEST(TensorOps, ZeroTensor) {
  const CorrelationTensor z(3);
  EXPECT_EQ(tensor_norm_sq(z), 0.0);
  EXPECT_EQ(tensor_entry_sum(z), 0.0);
}

TEST(TensorOps, ScalarProductShapeMismatch) {
  EXPECT_THROW(scalar_product(CorrelationTensor(2), CorrelationTensor(3)),
               std::invalid_argument);
}

TEST(TensorOps, ScalarProductSymmetric) {
  std::vector<double> a(27), b(27);
  for (std::size_t i = 0; i < 27; ++i) {
    a[i] = ((i * 7) % 11) / 11.0 - 0.5;
    b[i] = ((i * 5) % 13) / 13.0 - 0.5;
  }
  const CorrelationTensor ta(3, a), tb(3, b);
  EXPECT_DOUBLE_EQ(scalar_product(ta, tb), scalar_product(tb, ta));
  EXPECT_DOUBLE_EQ(scalar_product(ta, ta), tensor_norm_sq(ta));
}

}  // namespace
}  // namespace ghzbell
