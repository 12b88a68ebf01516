// Copyright 2026 The nomaharq Authors.
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

#ifndef NOMAHARQ_BISECTION_H_
#define NOMAHARQ_BISECTION_H_

#include <algorithm>
#include <cmath>
#include <limits>

namespace nomaharq {

struct BisectionResult {
  double root = 0.0;
  // |f(root) - target|
  double residual = 0.0;
  int iterations = 0;
  bool bracketed = false;
};

// Solves f(x) = target for a nondecreasing f on [lo, hi]. Returns
// bracketed == false when target lies outside [f(lo), f(hi)]. Iterates until
// the bracket collapses to adjacent doubles or max_iterations is reached.
//
// The returned root is the largest x found with f(x) <= target. Where f is
// flat at the target to working precision this picks the right end of the
// flat stretch instead of whichever midpoint landed on it first.
template <typename F>
BisectionResult BisectIncreasing(F&& f, double target, double lo, double hi,
                                 int max_iterations = 200) {
  BisectionResult result;
  double g_lo = f(lo) - target;
  const double g_hi = f(hi) - target;
  if (g_lo > 0.0 || g_hi < 0.0) {
    result.root = g_lo > 0.0 ? lo : hi;
    result.residual = g_lo > 0.0 ? g_lo : -g_hi;
    return result;
  }
  result.bracketed = true;
  if (g_hi == 0.0) {
    result.root = hi;
    return result;
  }
  for (int it = 0; it < max_iterations; ++it) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    const double g = f(mid) - target;
    result.iterations = it + 1;
    if (g <= 0.0) {
      lo = mid;
      g_lo = g;
    } else {
      hi = mid;
    }
    if (hi - lo <= 2.0 * std::numeric_limits<double>::epsilon() *
                       std::max(std::abs(lo), std::abs(hi))) {
      break;
    }
  }
  result.root = lo;
  result.residual = -g_lo;
  return result;
}

}  // namespace nomaharq

#endif  // NOMAHARQ_BISECTION_H_
