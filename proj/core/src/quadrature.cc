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

#include "nomaharq/quadrature.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

namespace nomaharq {
namespace {

// QUADPACK qk15 abscissae and weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment Kronrod15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * sum;
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult IntegrateAdaptive(const Integrand& f,
                                   std::span<const double> breakpoints,
                                   double abs_tol, double rel_tol,
                                   int max_intervals) {
  if (breakpoints.size() < 2) {
    throw std::invalid_argument("IntegrateAdaptive needs >= 2 breakpoints");
  }
  std::priority_queue<Segment> heap;
  QuadratureResult result;
  double total = 0.0;
  double total_error = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i + 1] > breakpoints[i])) continue;
    Segment s = Kronrod15(f, breakpoints[i], breakpoints[i + 1]);
    result.evaluations += 15;
    total += s.value;
    total_error += s.error;
    heap.push(s);
  }
  while (!heap.empty() &&
         total_error > std::max(abs_tol, rel_tol * std::abs(total)) &&
         static_cast<int>(heap.size()) < max_intervals) {
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      heap.push(worst);
      break;
    }
    const Segment left = Kronrod15(f, worst.a, mid);
    const Segment right = Kronrod15(f, mid, worst.b);
    result.evaluations += 30;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }
  // Re-sum from the final partition to drop accumulated update round-off.
  total = 0.0;
  total_error = 0.0;
  std::vector<Segment> parts;
  parts.reserve(heap.size());
  while (!heap.empty()) {
    parts.push_back(heap.top());
    heap.pop();
  }
  std::sort(parts.begin(), parts.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  for (const Segment& s : parts) {
    total += s.value;
    total_error += s.error;
  }
  result.value = total;
  result.abs_error = total_error;
  result.converged = total_error <= std::max(abs_tol, rel_tol * std::abs(total));
  return result;
}

QuadratureResult IntegrateHalfLine(const Integrand& f, double first_scale,
                                   const std::function<double(double)>& tail_bound,
                                   double abs_tol, double rel_tol,
                                   double tail_tol) {
  if (!(first_scale > 0.0)) {
    throw std::invalid_argument("IntegrateHalfLine needs first_scale > 0");
  }
  std::vector<double> points = {0.0, first_scale};
  double x = first_scale;
  while (tail_bound(x) > tail_tol && x < 1e300) {
    x *= 2.0;
    points.push_back(x);
  }
  QuadratureResult result =
      IntegrateAdaptive(f, points, abs_tol, rel_tol,
                        std::max<int>(8000, 8 * static_cast<int>(points.size())));
  const double tail = tail_bound(x);
  result.abs_error += tail;
  result.converged =
      result.converged && tail <= std::max(abs_tol, tail_tol);
  return result;
}

}  // namespace nomaharq
