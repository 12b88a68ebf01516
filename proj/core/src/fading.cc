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

#include "nomaharq/fading.h"

#include <algorithm>
#include <cmath>

namespace nomaharq {

double DbToLinear(double x_db) { return std::pow(10.0, x_db / 10.0); }

double LinearToDb(double x) { return 10.0 * std::log10(x); }

ChannelDraw SampleGains(const FadingParams& params, RandomStream& stream) {
  const double u1 = stream.NextUniform();
  const double u2 = stream.NextUniform();
  return {-std::log1p(-u1) / params.lambda1, -std::log1p(-u2) / params.lambda2};
}

double SinrCdfU1(double x, const LinkConfig& config) {
  if (x <= 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  const double p1 = config.p1();
  const double p2 = config.p2();
  const double l1 = config.fading.lambda1;
  const double l2 = config.fading.lambda2;
  const double survival =
      std::exp(-l1 / p1 * x) / (1.0 + l1 * p2 / (l2 * p1) * x);
  return std::clamp(1.0 - survival, 0.0, 1.0);
}

Probability SinrCdfU1(SinrValue x, const LinkConfig& config) {
  return Probability(SinrCdfU1(x.u(), config));
}

double SinrPdfU1(double x, const LinkConfig& config) {
  if (x < 0.0) return 0.0;
  const double s = config.fading.lambda1 / config.p1();
  const double rho =
      config.fading.lambda1 * config.p2() / (config.fading.lambda2 * config.p1());
  const double den = 1.0 + rho * x;
  return std::exp(-s * x) * (s / den + rho / (den * den));
}

}  // namespace nomaharq
