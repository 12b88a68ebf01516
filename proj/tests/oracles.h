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

// Reference implementations used only by tests. Nothing here calls into the
// library: special functions come from Boost.Math, integrals from tanh-sinh /
// exp-sinh quadrature, roots from a long double bisection.

#ifndef NOMAHARQ_TESTS_ORACLES_H_
#define NOMAHARQ_TESTS_ORACLES_H_

#include <cmath>
#include <limits>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/lambert_w.hpp>

namespace oracle {

using Real = long double;

inline Real Q(Real x) { return boost::math::erfc(x / std::sqrt(Real(2))) / 2; }

// Tail integral of the standard normal density by quadrature.
inline Real QByQuadrature(Real x) {
  const Real inv_sqrt_2pi = boost::math::constants::one_div_root_two_pi<Real>();
  boost::math::quadrature::exp_sinh<Real> integrator;
  return integrator.integrate(
      [&](Real t) { return inv_sqrt_2pi * std::exp(-(x + t) * (x + t) / 2); },
      Real(0), std::numeric_limits<Real>::infinity());
}

// Monotone bisection on [lo, hi] for an increasing f; 300 halvings is far
// past long double resolution.
template <typename F>
Real BisectIncreasing(F f, Real target, Real lo, Real hi) {
  for (int i = 0; i < 300; ++i) {
    const Real mid = (lo + hi) / 2;
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

inline Real QInv(Real p) {
  // Q is decreasing; bisect on -Q.
  return BisectIncreasing([](Real x) { return -Q(x); }, -p, Real(-40), Real(40));
}

inline Real E1(Real x) { return boost::math::expint(1, x); }

// Ei(x) for x < 0 as -integral_{-x}^inf e^{-t}/t dt.
inline Real EiNegativeByQuadrature(Real x) {
  boost::math::quadrature::exp_sinh<Real> integrator;
  const Real s = -x;
  return -integrator.integrate(
      [&](Real t) { return std::exp(-(s + t)) / (s + t); }, Real(0),
      std::numeric_limits<Real>::infinity());
}

inline Real W0(Real z) { return boost::math::lambert_w0(z); }
inline Real Wm1(Real z) { return boost::math::lambert_wm1(z); }

// Newton on w e^w - z from w = 0 with bisection fallback on [-1, max(1,z)].
inline Real W0ByNewton(Real z) {
  Real lo = -1, hi = std::max<Real>(1, z);
  Real w = 0;
  for (int i = 0; i < 200; ++i) {
    const Real f = w * std::exp(w) - z;
    if (f < 0) lo = w; else hi = w;
    Real next = w - f / ((w + 1) * std::exp(w));
    if (!(next > lo && next < hi)) next = (lo + hi) / 2;
    if (std::abs(next - w) <= 1e-18L * std::max<Real>(1, std::abs(w))) {
      return next;
    }
    w = next;
  }
  return w;
}

inline Real Dispersion(Real u) {
  return std::sqrt(u * (2 + u)) / (1 + u);
}

inline Real FblError(Real blocklength, Real rate, Real u) {
  if (u <= 0) return 1;
  return Q(std::sqrt(blocklength) * (std::log1p(u) - rate) / Dispersion(u));
}

// Largest rate whose normal-approximation error stays at theta.
inline Real RateForSinr(Real u, Real blocklength, Real theta) {
  return BisectIncreasing(
      [&](Real r) { return FblError(blocklength, r, u); }, theta, Real(-50),
      std::log1p(u) + 50);
}

// Piecewise-linear approximation of the error curve around u = e^r - 1.
inline Real LinearizedError(Real blocklength, Real rate, Real u) {
  const Real pi = boost::math::constants::pi<Real>();
  const Real v = std::exp(2 * rate) - 1;
  const Real half_width = std::sqrt(pi * v / 2) / std::sqrt(blocklength);
  const Real centre = std::exp(rate) - 1;
  if (u <= centre - half_width) return 1;
  if (u >= centre + half_width) return 0;
  const Real slope = std::sqrt(blocklength) / std::sqrt(2 * pi * v);
  const Real e = Real(0.5) - slope * (u - centre);
  return std::clamp<Real>(e, 0, 1);
}

inline Real LinearizedRateForSinr(Real u, Real blocklength, Real theta) {
  return BisectIncreasing(
      [&](Real r) { return LinearizedError(blocklength, r, u); }, theta,
      Real(1e-12), std::log1p(u) + 10);
}

// E over G1 ~ Exp(lambda1) of the slot-2 rate with the high-SNR dispersion.
inline Real ExpectedRateSlot2(Real lambda1, Real p1, Real a) {
  boost::math::quadrature::exp_sinh<Real> integrator;
  return integrator.integrate(
      [&](Real g) {
        const Real u = p1 * g;
        return lambda1 * std::exp(-lambda1 * g) *
               (std::log1p(u) - a * u / (1 + u));
      },
      Real(0), std::numeric_limits<Real>::infinity());
}

// E over (G1, G2) of the slot-1 rate with the high-SNR dispersion, written as
// a single integral over the SINR survival function.
inline Real ExpectedRateSlot1(Real lambda1, Real lambda2, Real p1, Real p2,
                              Real a) {
  const Real s1 = lambda1 / p1;
  const Real k = lambda1 * p2 / (lambda2 * p1);
  boost::math::quadrature::exp_sinh<Real> integrator;
  return integrator.integrate(
      [&](Real x) {
        const Real survival = std::exp(-s1 * x) / (1 + k * x);
        return survival / (1 + x) - a * survival / ((1 + x) * (1 + x));
      },
      Real(0), std::numeric_limits<Real>::infinity());
}

// Smallest SNR meeting theta at rate r under the high-SNR dispersion.
inline Real RequiredSinrHighSnr(Real rate, Real blocklength, Real theta) {
  const Real a = QInv(theta) / std::sqrt(blocklength);
  return BisectIncreasing(
      [&](Real u) { return std::log1p(u) - a * u / (1 + u); }, rate, Real(0),
      Real(1e12));
}

}  // namespace oracle

#endif  // NOMAHARQ_TESTS_ORACLES_H_
