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

// Fading-averaged rates and powers.
//
// The expected rates average the high-SNR rate rule
//   r(u) = log(1 + u) - a u / (1 + u),   a = Q^{-1}(theta) / sqrt(L),
// over the distribution of UE1's SINR u. With S(x) the survival function of
// u, integration by parts gives
//   E{r} = int_0^inf S(x) / (1 + x) dx - a int_0^inf S(x) / (1 + x)^2 dx.
// Both integrals have Ei closed forms, evaluated here, and an adaptive
// quadrature path used for cross-checks and on the singular manifold.

#ifndef NOMAHARQ_EXPECTATION_H_
#define NOMAHARQ_EXPECTATION_H_

#include <cstdint>
#include <string_view>

#include "nomaharq/types.h"

namespace nomaharq {

enum class ExpectationMethod { kClosedForm, kQuadrature };

std::string_view ToString(ExpectationMethod method);

struct ExpectedRate {
  double value = 0.0;  // npcu
  ExpectationMethod method = ExpectationMethod::kClosedForm;
  double abs_error_estimate = 0.0;  // quadrature only
};

// Width of the band |rho - 1| around the singular manifold
// rho = lambda1 P2 / (lambda2 P1) = 1 where the closed form switches to
// quadrature. The penalty term carries a 1/(rho - 1)^2 factor, so rounding
// in its numerator grows like eps / (rho - 1)^2; at 1e-3 that stays near
// 1e-10.
inline constexpr double kSingularGuard = 1e-3;

// E{r1}: UE1 in slot 1, SINR G1 P1 / (1 + G2 P2).
ExpectedRate ExpectedRateSlot1(const LinkConfig& config);
ExpectedRate ExpectedRateSlot1Quadrature(const LinkConfig& config);

// E{r~1}: UE1 in slot 2 after the order swap, SNR G1 P1.
ExpectedRate ExpectedRateSlot2(const LinkConfig& config);
ExpectedRate ExpectedRateSlot2Quadrature(const LinkConfig& config);

struct PowerExpectation {
  std::uint64_t draws = 0;
  double mean_linear = 0.0;  // mean of per-draw linear power
  double se_linear = 0.0;
  double mean_db = 0.0;  // mean of 10 log10(power)
  double se_db = 0.0;
  double infeasible_fraction = 0.0;
};

// Monte Carlo average over (G1, G2) of the smallest slot-2 power of UE1
// meeting theta1 at target_rate. Draw i uses RandomStream(seed, i), so the
// result does not depend on `workers`.
PowerExpectation ExpectedPowerSlot2(const LinkConfig& config,
                                    double target_rate, SchemeVariant scheme,
                                    std::uint64_t draws = 1'000'000,
                                    std::uint64_t seed = 1, int workers = 0);

struct ExpectedPowerDb {
  double value_db = 0.0;  // E{10 log10 P}
  ExpectationMethod method = ExpectationMethod::kClosedForm;
  double abs_error_estimate = 0.0;  // quadrature only, in dB
  bool feasible = true;
};

// Fading average of 10 log10 of UE1's smallest slot-2 power under the
// high-SNR power rule. With u* the required SINR,
//   Proposed: 10 log10 u* - E{10 log10 G1}
//   Standard: Proposed + E{10 log10(1 + G2 P2)}
// and E{ln G1} = -gamma_E - ln lambda1 in closed form.
ExpectedPowerDb ExpectedPowerDbSlot2(
    const LinkConfig& config, double target_rate, SchemeVariant scheme,
    ExpectationMethod method = ExpectationMethod::kClosedForm);

// Per draw, Standard power / Proposed power = 1 + G2 P2 exactly. These are
// the two fading averages of that factor, in dB:
//   ratio of means: 10 log10(1 + P2 / lambda2)
//   mean of dB:     (10 / ln 10) e^{s} E1(s),  s = lambda2 / P2
double PowerRatioOfMeansDb(const LinkConfig& config);
double PowerRatioMeanDb(const LinkConfig& config);

}  // namespace nomaharq

#endif  // NOMAHARQ_EXPECTATION_H_
