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

#include "ghzbell/phase.h"

#include <array>
#include <numeric>
#include <stdexcept>

namespace ghzbell {

PiFraction::PiFraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("PiFraction: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

double PiFraction::radians() const {
  const PiFraction r = reduced();
  return static_cast<double>(r.num_) * kPi / static_cast<double>(r.den_);
}

PiFraction PiFraction::reduced() const {
  const std::int64_t period = 2 * den_;
  std::int64_t n = num_ % period;
  if (n < 0) n += period;
  return PiFraction(n, den_);
}

bool PiFraction::is_twelfth() const { return 6 % den_ == 0; }

int PiFraction::twelfth_class() const {
  if (!is_twelfth()) {
    throw std::domain_error("angle is not a multiple of pi/6");
  }
  return mod12(num_ * (6 / den_));
}

PiFraction operator+(const PiFraction& a, const PiFraction& b) {
  return PiFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

PiFraction operator-(const PiFraction& a, const PiFraction& b) {
  return PiFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

HalfSurd cos_twelfth(int k) {
  // cos(kπ/6) = (rational + sqrt3·√3)/2
  static constexpr std::array<HalfSurd, 12> kTable = {{
      {2, 0}, {0, 1}, {1, 0}, {0, 0}, {-1, 0}, {0, -1},
      {-2, 0}, {0, -1}, {-1, 0}, {0, 0}, {1, 0}, {0, 1},
  }};
  return kTable[static_cast<std::size_t>(mod12(k))];
}

int compare(const HalfSurd& a, const HalfSurd& b) {
  // Sign of (r + s√3) with r = Δrational, s = Δsqrt3, decided in integers.
  const std::int64_t r = a.rational - b.rational;
  const std::int64_t s = a.sqrt3 - b.sqrt3;
  auto sign = [](std::int64_t v) { return (v > 0) - (v < 0); };
  if (s == 0) return sign(r);
  if (r == 0) return sign(s);
  if (sign(r) == sign(s)) return sign(r);
  // Opposite signs: compare r² with 3s². Coefficients stay far below 2^31
  // for any tensor this library materializes.
  const std::int64_t r2 = r * r;
  const std::int64_t s2 = 3 * s * s;
  return r2 > s2 ? sign(r) : sign(s);
}

}  // namespace ghzbell
