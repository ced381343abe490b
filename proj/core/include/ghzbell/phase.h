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

#ifndef GHZBELL_PHASE_H_
#define GHZBELL_PHASE_H_

#include <cstdint>

namespace ghzbell {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrt3 = 1.73205080756887729353;

// An angle stored exactly as (num/den)·π, always in lowest terms with den > 0.
class PiFraction {
 public:
  constexpr PiFraction() = default;
  PiFraction(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double radians() const;

  // Reduces into [0, 2π).
  PiFraction reduced() const;

  // True if the angle is an integer multiple of π/6.
  bool is_twelfth() const;
  // The angle in units of π/6, reduced mod 12. Throws std::domain_error if
  // !is_twelfth().
  int twelfth_class() const;

  friend PiFraction operator+(const PiFraction& a, const PiFraction& b);
  friend PiFraction operator-(const PiFraction& a, const PiFraction& b);
  friend bool operator==(const PiFraction&, const PiFraction&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// A number of the form (rational + sqrt3·√3) / 2 with integer coefficients.
// cos(kπ/6) is always of this form, which lets sums of cosines over the
// settings grid be carried exactly.
struct HalfSurd {
  std::int64_t rational = 0;
  std::int64_t sqrt3 = 0;

  double value() const {
    return 0.5 * (static_cast<double>(rational) +
                  static_cast<double>(sqrt3) * kSqrt3);
  }

  HalfSurd& operator+=(const HalfSurd& o) {
    rational += o.rational;
    sqrt3 += o.sqrt3;
    return *this;
  }
  friend HalfSurd operator+(HalfSurd a, const HalfSurd& b) { return a += b; }
  friend HalfSurd operator-(const HalfSurd& a) {
    return {-a.rational, -a.sqrt3};
  }
  friend HalfSurd operator*(std::int64_t k, const HalfSurd& a) {
    return {k * a.rational, k * a.sqrt3};
  }
  friend bool operator==(const HalfSurd&, const HalfSurd&) = default;
};

// Exact total order on HalfSurd values.
int compare(const HalfSurd& a, const HalfSurd& b);

// cos(kπ/6) exactly, for any integer k.
HalfSurd cos_twelfth(int k);

// Reduces k into [0, 12).
constexpr int mod12(std::int64_t k) {
  const auto r = static_cast<int>(k % 12);
  return r < 0 ? r + 12 : r;
}

}  // namespace ghzbell

#endif  // GHZBELL_PHASE_H_
