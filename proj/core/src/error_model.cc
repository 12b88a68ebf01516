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

#include "nomaharq/error_model.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nomaharq/specfun.h"

namespace nomaharq {

double DispersionFactor(double sinr) {
  return std::sqrt(sinr * (2.0 + sinr)) / (1.0 + sinr);
}

double NormalApproxError(double blocklength, double rate, double sinr) {
  if (sinr <= 0.0) return 1.0;
  if (std::isinf(sinr)) return 0.0;
  const double z = std::sqrt(blocklength) * (std::log1p(sinr) - rate) /
                   DispersionFactor(sinr);
  return GaussianQ(z);
}

double HighSnrApproxError(double blocklength, double rate, double sinr) {
  if (sinr <= 0.0) return 1.0;
  if (std::isinf(sinr)) return 0.0;
  const double z = std::sqrt(blocklength) * (std::log1p(sinr) - rate) *
                   (1.0 + sinr) / sinr;
  return GaussianQ(z);
}

double LinearizedApproxError(double blocklength, double rate, double sinr) {
  const double v2m1 = std::expm1(2.0 * rate);  // e^{2r} - 1
  const double midpoint = std::expm1(rate);
  const double half_width =
      std::sqrt(std::numbers::pi * v2m1 / (2.0 * blocklength));
  if (sinr <= midpoint - half_width) return 1.0;
  if (sinr >= midpoint + half_width) return 0.0;
  const double slope =
      std::sqrt(blocklength) / std::sqrt(2.0 * std::numbers::pi * v2m1);
  return std::clamp(0.5 - slope * (sinr - midpoint), 0.0, 1.0);
}

Probability FblError(const CodeParams& code, SinrValue sinr) {
  return Probability(NormalApproxError(code.blocklength, code.rate, sinr.u()));
}

Probability FblErrorLinearized(const CodeParams& code, SinrValue sinr) {
  return Probability(
      LinearizedApproxError(code.blocklength, code.rate, sinr.u()));
}

Probability RtdCombinedError(const CodeParams& code, SinrValue copy1,
                             SinrValue copy2) {
  return Probability(
      NormalApproxError(code.blocklength, code.rate, copy1.u() + copy2.u()));
}

SlotErrorPair SicSlot1ErrorPair(const LinkConfig& config,
                                const ChannelDraw& draw) {
  const double rx1 = draw.g1 * config.p1();
  const double rx2 = draw.g2 * config.p2();
  const double l1 = config.code1.blocklength;
  const double l2 = config.code2.blocklength;

  const double theta1 = NormalApproxError(l1, config.code1.rate, rx1 / (1.0 + rx2));
  const double ue2_cancelled = NormalApproxError(l2, config.code2.rate, rx2);
  const double ue2_interfered =
      NormalApproxError(l2, config.code2.rate, rx2 / (1.0 + rx1));
  const double theta2 = (1.0 - theta1) * ue2_cancelled + theta1 * ue2_interfered;
  return {Probability(theta1), Probability(std::clamp(theta2, 0.0, 1.0))};
}

}  // namespace nomaharq
