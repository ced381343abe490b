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

#ifndef GHZBELL_TESTS_ORACLES_H_
#define GHZBELL_TESTS_ORACLES_H_

// Independent reference computations for tests. Nothing here goes through
// the exact phase classes or the contraction code in the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace ghzbell::oracle {

inline constexpr double kPi = 3.14159265358979323846;

// Phase of setting i (0-based) of party k in radians, as plain doubles.
inline double phase(int k, int i) {
  return k == 0 ? kPi / 6.0 + i * kPi / 3.0 : i * kPi / 3.0;
}

inline std::vector<int> digits(std::uint64_t flat, int n, int base) {
  std::vector<int> d(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    d[static_cast<std::size_t>(k)] = static_cast<int>(flat % base);
    flat /= base;
  }
  return d;
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline double q_entry(const std::vector<int>& idx) {
  double sum = 0.0;
  for (std::size_t k = 0; k < idx.size(); ++k) sum += phase(static_cast<int>(k), idx[k]);
  return std::cos(sum);
}

// Outcomes per party and setting: values[k][i].
using Assignment = std::vector<std::vector<int>>;

// S = Σ_idx cos(Σφ) ∏ v, summed term by term.
inline double s_direct(const Assignment& v) {
  const int n = static_cast<int>(v.size());
  double s = 0.0;
  for (std::uint64_t f = 0; f < ipow(3, n); ++f) {
    const auto idx = digits(f, n, 3);
    int prod = 1;
    for (int k = 0; k < n; ++k) prod *= v[static_cast<std::size_t>(k)][static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
    s += q_entry(idx) * prod;
  }
  return s;
}

// Two-outcome assignment from a code: bit 3N-1 is party 0, setting 0.
inline Assignment from_code(int n, std::uint64_t code) {
  Assignment v(static_cast<std::size_t>(n), std::vector<int>(3));
  for (int k = n - 1; k >= 0; --k) {
    for (int i = 2; i >= 0; --i) {
      v[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = (code & 1) ? 1 : -1;
      code >>= 1;
    }
  }
  return v;
}

// Maximum of s_direct over all 8^n strategies, floating point throughout.
inline double brute_max(int n) {
  double best = -1e300;
  for (std::uint64_t c = 0; c < ipow(8, n); ++c) best = std::max(best, s_direct(from_code(n, c)));
  return best;
}

inline std::complex<double> phasor_direct(int k, const std::vector<int>& v) {
  std::complex<double> z;
  for (int i = 0; i < 3; ++i) z += static_cast<double>(v[static_cast<std::size_t>(i)]) * std::polar(1.0, phase(k, i));
  return z;
}

}  // namespace ghzbell::oracle

#endif  // GHZBELL_TESTS_ORACLES_H_
