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

// Error-constrained rate and power allocation.
//
// Every solver picks the largest rate (or smallest power) that keeps the
// decoding error at its budget theta. Closed forms are provided where they
// exist; each has a bisection counterpart on the same error model so the two
// can be checked against each other. Infeasibility (no positive rate meets
// the budget) is reported through SolveStatus, never by clamping.

#ifndef NOMAHARQ_ALLOCATION_H_
#define NOMAHARQ_ALLOCATION_H_

#include <string_view>

#include "nomaharq/types.h"

namespace nomaharq {

enum class SolveStatus { kOk, kInfeasible, kNoConvergence };

enum class RateMethod { kBisection, kClosedFormQinv, kClosedFormQuadratic };

enum class PowerMethod { kBisection, kClosedFormLambertW };

std::string_view ToString(SolveStatus status);
std::string_view ToString(RateMethod method);
std::string_view ToString(PowerMethod method);

struct RateSolution {
  double rate = 0.0;      // npcu; meaningful only when ok()
  double residual = 0.0;  // |error(rate) - theta| under the exact model
  RateMethod method = RateMethod::kBisection;
  SolveStatus status = SolveStatus::kOk;

  bool ok() const { return status == SolveStatus::kOk; }
};

struct PowerSolution {
  double power = 0.0;     // linear transmit power
  double residual = 0.0;  // |error(power) - theta| under the solved model
  PowerMethod method = PowerMethod::kBisection;
  SolveStatus status = SolveStatus::kOk;

  bool ok() const { return status == SolveStatus::kOk; }
};

// Coefficients of the linearized-Q rate rule:
//   alpha = 1/2 - theta, beta = sqrt(L / (2 pi)), gamma = 1 + SINR.
struct LinearizedQParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 1.0;

  static LinearizedQParams From(Probability theta, double blocklength,
                                double sinr);
  void Validate() const;
  double blocklength() const;
  double theta() const { return 0.5 - alpha; }
};

// Bisection brackets shared by all solvers.
inline constexpr double kMinRate = 1e-9;
inline constexpr double kMinSinr = 1e-12;
inline constexpr double kMaxSinr = 1e9;
inline constexpr int kMaxBisectionIterations = 200;

// Largest r with F(r, sinr) = theta at blocklength L. The closed form is
// r = log(1+u) - Q^{-1}(theta) / sqrt(L) * sqrt(1 - 1/(1+u)^2).
RateSolution SolveRateForSinr(double sinr, int blocklength, Probability theta,
                              RateMethod method = RateMethod::kClosedFormQinv);

// Root x of (1-w) F(x, sinr_clean) + w F(x, sinr_interfered) = target.
// The left side increases in x, so bisection finds the unique root or proves
// that even x -> 0 exceeds the target.
RateSolution SolveMixtureRate(double sinr_clean, double sinr_interfered,
                              double interfered_weight, int blocklength,
                              Probability target);

// Slot 1, UE1 decoded first under UE2's interference.
RateSolution SolveRateSlot1Ue1(const LinkConfig& config, const ChannelDraw& draw,
                               RateMethod method = RateMethod::kClosedFormQinv);

// Slot 1, UE2 decoded after UE1: UE1's signal is cancelled with probability
// 1 - theta1_used and left as interference otherwise.
RateSolution SolveRateSlot1Ue2(const LinkConfig& config, const ChannelDraw& draw,
                               Probability theta1_used);

// Slot 2 after the decoding-order swap, assuming UE2's combined decode
// succeeds: UE1 sees its interference-free SNR P1 G1.
RateSolution SolveRateSlot2Ue1(const LinkConfig& config, const ChannelDraw& draw,
                               RateMethod method = RateMethod::kClosedFormQinv);

// Slot 2 without that assumption: UE2's combined decode fails with
// probability theta2_tilde, in which case UE1 is decoded under interference.
RateSolution SolveRateSlot2Ue1Exact(const LinkConfig& config,
                                    const ChannelDraw& draw,
                                    Probability theta2_tilde);

// Closed form on the linearized error model: log of the root v = e^r of
//   (beta^2 - alpha^2) v^2 - 2 beta^2 gamma v + (beta^2 gamma^2 + alpha^2) = 0
// that also satisfies beta (gamma - v) = alpha sqrt(v^2 - 1).
RateSolution SolveRateLinearized(const LinearizedQParams& params);

// Bisection on LinearizedApproxError with the same parameters.
RateSolution SolveRateLinearizedBisection(const LinearizedQParams& params);

// Smallest SINR u with HighSnrApproxError(L, rate, u) = theta. The closed
// form follows from s = 1 + u, a = Q^{-1}(theta)/sqrt(L):
//   s = -a / W0(-a exp(-a - rate)).
double RequiredSinrHighSnr(double rate, int blocklength, Probability theta,
                           PowerMethod method = PowerMethod::kClosedFormLambertW);

// Slot-2 power of UE1 after the order swap: smallest x with
//   log(1 + x G1) - r = a x G1 / (1 + x G1).
// The Lambert-W value is checked against bisection on every call; on
// disagreement the bisection root is returned.
PowerSolution SolvePowerSlot2Ue1(
    const LinkConfig& config, const ChannelDraw& draw, double target_rate,
    PowerMethod method = PowerMethod::kClosedFormLambertW);

// The same root condition at the interference-affected SINR
// x G1 / (1 + G2 P2), i.e. without the order swap.
PowerSolution SolvePowerSlot2Ue1Interfered(
    const LinkConfig& config, const ChannelDraw& draw, double target_rate,
    PowerMethod method = PowerMethod::kClosedFormLambertW);

}  // namespace nomaharq

#endif  // NOMAHARQ_ALLOCATION_H_
