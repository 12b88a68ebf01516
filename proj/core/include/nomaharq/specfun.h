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

// Scalar special functions: Gaussian tail Q and its inverse, the exponential
// integral on the negative axis, and both real branches of Lambert W.
//
// All functions are pure and reentrant. Domain violations throw
// std::domain_error.

#ifndef NOMAHARQ_SPECFUN_H_
#define NOMAHARQ_SPECFUN_H_

namespace nomaharq {

// Q(x) = (1/sqrt(2 pi)) * int_x^inf exp(-t^2/2) dt, computed as
// erfc(x / sqrt(2)) / 2. Underflows to 0 for x beyond ~38.
double GaussianQ(double x);

// Inverse of GaussianQ on (0, 1). Acklam's rational approximation followed
// by two Halley steps on Q itself.
double GaussianQInv(double p);

// E1(x) = int_x^inf exp(-t)/t dt for x > 0.
double ExpIntegralE1(double x);

// exp(x) * E1(x) for x > 0, without the overflow/underflow of the product.
double ScaledExpIntegralE1(double x);

// Ei(x) = -E1(-x) for x < 0.
double ExpIntegralEi(double x);

enum class WBranch {
  kPrincipal,  // W0, defined on [-1/e, inf), returns w >= -1
  kNegative,   // W-1, defined on [-1/e, 0), returns w <= -1
};

// Real Lambert W: the solution w of w * exp(w) = z on the requested branch.
double LambertW(double z, WBranch branch);

}  // namespace nomaharq

#endif  // NOMAHARQ_SPECFUN_H_
