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

#include "ghzbell/thresholds.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "ghzbell/ghz.h"
#include "ghzbell/lhv.h"
#include "ghzbell/phase.h"

namespace ghzbell {

namespace {

constexpr double kBracketLow = 1e-6;
constexpr double kBracketHigh = 1.0;
constexpr double kRootTolerance = 1e-12;
constexpr int kMaxBisections = 200;

// |q_n| / 2^(n-1) = 2|sin((n-1)π/3)|, exact up to the rounding of √3.
double scaled_q_abs(int n) {
  return std::abs(q_entry_sum_closed_form(n)) / std::ldexp(1.0, n - 1);
}

// Both sides of the threshold relation divided by 2^(n-1), so the
// arithmetic stays finite for large n.
double efficiency_gap(int n, double eta) {
  return std::pow(1.5 * eta, n) + scaled_q_abs(n) * std::pow(1.0 - eta, n) -
         kSqrt3;
}

template <class F>
double bisect(F f, double lo, double hi) {
  double f_lo = f(lo);
  for (int i = 0; i < kMaxBisections && hi - lo > kRootTolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ThresholdResult critical_visibility(int n, double eta) {
  if (n < 2) throw std::invalid_argument("critical_visibility: n < 2");
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("critical_visibility: eta must be in (0, 1]");
  }
  ThresholdResult r;
  r.n_parties = n;
  r.eta = eta;
  r.q_n_abs = std::abs(q_entry_sum_closed_form(n));
  r.bound_lhs = lhv_bound(n) - r.q_n_abs * std::pow(1.0 - eta, n);
  const double scaled_numerator =
      kSqrt3 - scaled_q_abs(n) * std::pow(1.0 - eta, n);
  if (scaled_numerator <= 0.0) {
    r.attainable = false;
    r.v_critical = std::numeric_limits<double>::infinity();
    return r;
  }
  r.v_critical = scaled_numerator / std::pow(1.5 * eta, n);
  return r;
}

double critical_efficiency(int n) {
  if (n < 2) throw std::invalid_argument("critical_efficiency: n < 2");
  auto gap = [n](double eta) { return efficiency_gap(n, eta); };
  // The gap is convex in eta and nonpositive at 0, so it has one root in
  // (0, 1] provided it is negative at the low end and positive at 1.
  if (!(gap(kBracketLow) < 0.0 && gap(kBracketHigh) > 0.0)) {
    throw std::logic_error("critical_efficiency: no sign change on bracket");
  }
  constexpr int kProbe = 64;
  int sign_changes = 0;
  double prev = gap(kBracketLow);
  for (int i = 1; i <= kProbe; ++i) {
    const double x = kBracketLow + (kBracketHigh - kBracketLow) * i / kProbe;
    const double cur = gap(x);
    if ((cur < 0.0) != (prev < 0.0)) ++sign_changes;
    prev = cur;
  }
  if (sign_changes != 1) {
    throw std::logic_error("critical_efficiency: bracket holds several roots");
  }
  return bisect(gap, kBracketLow, kBracketHigh);
}

double old_visibility_threshold(int n) {
  if (n < 2) throw std::invalid_argument("old_visibility_threshold: n < 2");
  return std::pow(2.0, 0.5 * (1 - n));
}

std::vector<ThresholdRow> threshold_table(int n_max) {
  if (n_max < 2) throw std::invalid_argument("threshold_table: n_max < 2");
  std::vector<ThresholdRow> rows;
  for (int n = 2; n <= n_max; ++n) {
    rows.push_back({n, critical_visibility(n, 1.0).v_critical,
                    old_visibility_threshold(n), critical_efficiency(n)});
  }
  return rows;
}

std::string format_percent(double fraction) {
  if (!std::isfinite(fraction)) return fraction > 0 ? "inf" : "nan";
  const double tenths = std::round(fraction * 1000.0);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", tenths / 10.0);
  return buf;
}

}  // namespace ghzbell
