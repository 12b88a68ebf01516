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

// Globally adaptive 7/15-point Gauss-Kronrod quadrature.

#ifndef NOMAHARQ_QUADRATURE_H_
#define NOMAHARQ_QUADRATURE_H_

#include <functional>
#include <span>

namespace nomaharq {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  bool converged = false;
};

using Integrand = std::function<double(double)>;

// Integrates f over [breakpoints.front(), breakpoints.back()], starting from
// the given partition and bisecting the interval with the largest error
// estimate until the total estimate drops below max(abs_tol, rel_tol |I|).
QuadratureResult IntegrateAdaptive(const Integrand& f,
                                   std::span<const double> breakpoints,
                                   double abs_tol, double rel_tol,
                                   int max_intervals = 8000);

// Integrates f over [0, inf). The range is cut at the first
// X = first_scale * 2^k whose tail bound tail_bound(X) is below tail_tol;
// [0, X] is pre-partitioned at the geometric points so that features at
// very different scales are resolved. The tail bound is added to the error.
QuadratureResult IntegrateHalfLine(const Integrand& f, double first_scale,
                                   const std::function<double(double)>& tail_bound,
                                   double abs_tol, double rel_tol,
                                   double tail_tol = 1e-13);

}  // namespace nomaharq

#endif  // NOMAHARQ_QUADRATURE_H_
