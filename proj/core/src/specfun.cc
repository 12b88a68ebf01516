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

#include "nomaharq/specfun.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nomaharq {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSqrt2Pi = 2.5066282746310002;

// Acklam's approximation to the standard normal quantile, |rel err| < 1.2e-9.
double NormalQuantileGuess(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double kLow = 0.02425;

  auto tail = [&](double q) {
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  };
  if (p < kLow) return tail(std::sqrt(-2.0 * std::log(p)));
  if (p > 1.0 - kLow) return -tail(std::sqrt(-2.0 * std::log1p(-p)));
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
         q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

// Power series, valid and fast for 0 < x < 1.
double E1Series(double x) {
  constexpr double kEulerGamma = 0.57721566490153286061;
  double sum = 0.0;
  double term = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= -x / k;
    const double contrib = term / k;
    sum += contrib;
    if (std::abs(contrib) < kEps * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) - sum;
}

// Modified Lentz evaluation of the continued fraction for exp(x) E1(x),
// x >= 1.
double ScaledE1ContinuedFraction(double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -double(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

[[noreturn]] void DomainError(const char* what, double x) {
  throw std::domain_error(std::string(what) + ": " + std::to_string(x));
}

}  // namespace

double GaussianQ(double x) { return 0.5 * std::erfc(x * std::numbers::sqrt2 / 2.0); }

double GaussianQInv(double p) {
  if (!(p > 0.0 && p < 1.0)) DomainError("GaussianQInv needs p in (0,1)", p);
  if (p == 0.5) return 0.0;
  double x = -NormalQuantileGuess(p);
  for (int step = 0; step < 2; ++step) {
    const double e = GaussianQ(x) - p;
    const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
    x += u / (1.0 - 0.5 * x * u);
  }
  return x;
}

double ExpIntegralE1(double x) {
  if (!(x > 0.0)) DomainError("E1 needs x > 0", x);
  if (x < 1.0) return E1Series(x);
  return std::exp(-x) * ScaledE1ContinuedFraction(x);
}

double ScaledExpIntegralE1(double x) {
  if (!(x > 0.0)) DomainError("E1 needs x > 0", x);
  if (x < 1.0) return std::exp(x) * E1Series(x);
  return ScaledE1ContinuedFraction(x);
}

double ExpIntegralEi(double x) {
  if (!(x < 0.0)) DomainError("Ei is only provided for x < 0", x);
  return -ExpIntegralE1(-x);
}

double LambertW(double z, WBranch branch) {
  // 1 + e*z with e split in two doubles, so the branch point is resolved to
  // within a few ulps.
  constexpr double kEHi = std::numbers::e;
  constexpr double kELo = 1.4456468917292502e-16;
  double q = std::fma(z, kEHi, 1.0) + z * kELo;
  if (std::isnan(z) || std::isinf(z)) DomainError("LambertW needs finite z", z);
  if (q < 0.0) {
    if (q > -8.0 * kEps) {
      q = 0.0;
    } else {
      DomainError("LambertW needs z >= -1/e", z);
    }
  }
  if (branch == WBranch::kNegative && z >= 0.0) {
    DomainError("LambertW negative branch needs z < 0", z);
  }
  if (q == 0.0) return -1.0;
  if (z == 0.0) return 0.0;

  double w;
  const bool principal = branch == WBranch::kPrincipal;
  if (q < 0.5) {
    // Expansion around the branch point in p = sqrt(2 (1 + e z)).
    const double p = principal ? std::sqrt(2.0 * q) : -std::sqrt(2.0 * q);
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))));
  } else if (principal) {
    if (std::abs(z) < 0.3) {
      w = z * (1.0 + z * (-1.0 + z * (1.5 - z * 8.0 / 3.0)));
    } else {
      const double l1 = std::log1p(z);
      w = l1 * (1.0 - std::log1p(l1) / (2.0 + l1));
    }
  } else {
    const double l1 = std::log(-z);
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
  }

  // Halley on f(w) = w - z exp(-w), i.e. (w e^w - z) scaled by e^-w so that
  // neither tail overflows.
  for (int it = 0; it < 100; ++it) {
    const double f = w - z * std::exp(-w);
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double dw = f / (wp1 - 0.5 * f * (w + 2.0) / wp1);
    w -= dw;
    if (std::abs(dw) <= 4.0 * kEps * (1.0 + std::abs(w))) break;
  }
  if (principal && w < -1.0) w = -1.0;
  if (!principal && w > -1.0) w = -1.0;
  return w;
}

}  // namespace nomaharq
