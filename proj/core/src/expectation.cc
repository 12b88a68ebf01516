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

#include "nomaharq/expectation.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "nomaharq/allocation.h"
#include "nomaharq/block_reduce.h"
#include "nomaharq/fading.h"
#include "nomaharq/quadrature.h"
#include "nomaharq/random_stream.h"
#include "nomaharq/specfun.h"

namespace nomaharq {
namespace {

constexpr double kQuadAbsTol = 1e-12;
constexpr double kQuadRelTol = 1e-12;

double PenaltyCoefficient(const LinkConfig& config) {
  return GaussianQInv(config.theta1.value()) /
         config.code1.sqrt_blocklength();
}

// e^{s} Ei(-s) for s > 0.
double ScaledEiNeg(double s) { return -ScaledExpIntegralE1(s); }

// int_0^inf S(x) (1/(1+x) - a/(1+x)^2) dx with S(x) = e^{-s x} / (1 + rho x).
ExpectedRate IntegrateRate(double s, double rho, double a) {
  auto integrand = [=](double x) {
    const double inv = 1.0 / (1.0 + x);
    return std::exp(-s * x) / (1.0 + rho * x) * (inv - a * inv * inv);
  };
  auto tail = [=](double x) {
    return (1.0 + std::abs(a)) * std::exp(-s * x) / (s * (1.0 + x));
  };
  double h0 = 1e-2;
  if (rho > 1.0) h0 /= rho;
  h0 = std::min(h0, 1e-2 / s);
  const QuadratureResult q =
      IntegrateHalfLine(integrand, h0, tail, kQuadAbsTol, kQuadRelTol);
  return {q.value, ExpectationMethod::kQuadrature, q.abs_error};
}

}  // namespace

std::string_view ToString(ExpectationMethod method) {
  switch (method) {
    case ExpectationMethod::kClosedForm: return "closed_form";
    case ExpectationMethod::kQuadrature: return "quadrature";
  }
  return "?";
}

ExpectedRate ExpectedRateSlot1Quadrature(const LinkConfig& config) {
  config.Validate();
  const double s1 = config.fading.lambda1 / config.p1();
  const double rho = config.fading.lambda1 * config.p2() /
                     (config.fading.lambda2 * config.p1());
  return IntegrateRate(s1, rho, PenaltyCoefficient(config));
}

ExpectedRate ExpectedRateSlot1(const LinkConfig& config) {
  config.Validate();
  const double s1 = config.fading.lambda1 / config.p1();
  const double s2 = config.fading.lambda2 / config.p2();
  const double rho = s1 / s2;
  if (std::abs(rho - 1.0) < kSingularGuard) {
    return ExpectedRateSlot1Quadrature(config);
  }
  const double a = PenaltyCoefficient(config);
  const double e1 = ScaledEiNeg(s1);
  const double e2 = ScaledEiNeg(s2);
  const double d = rho - 1.0;
  const double shannon = (e1 - e2) / d;
  const double penalty = -(e1 * (s1 * d - rho) + rho * e2 + d) / (d * d);
  return {shannon - a * penalty, ExpectationMethod::kClosedForm, 0.0};
}

ExpectedRate ExpectedRateSlot2Quadrature(const LinkConfig& config) {
  config.Validate();
  return IntegrateRate(config.fading.lambda1 / config.p1(), 0.0,
                       PenaltyCoefficient(config));
}

ExpectedRate ExpectedRateSlot2(const LinkConfig& config) {
  config.Validate();
  const double s = config.fading.lambda1 / config.p1();
  const double e = ScaledEiNeg(s);
  const double a = PenaltyCoefficient(config);
  return {-e - a * (1.0 + s * e), ExpectationMethod::kClosedForm, 0.0};
}

PowerExpectation ExpectedPowerSlot2(const LinkConfig& config,
                                    double target_rate, SchemeVariant scheme,
                                    std::uint64_t draws, std::uint64_t seed,
                                    int workers) {
  config.Validate();
  if (!(target_rate > 0.0)) {
    throw std::invalid_argument("target rate must be positive");
  }
  if (draws == 0) throw std::invalid_argument("draws must be >= 1");

  // The required SINR does not depend on the draw; solve it once.
  const PowerSolution unit =
      SolvePowerSlot2Ue1(config, ChannelDraw{1.0, 0.0}, target_rate);
  PowerExpectation out;
  out.draws = draws;
  if (!unit.ok()) {
    out.infeasible_fraction = 1.0;
    return out;
  }
  const double required_sinr = unit.power;
  const double p2 = config.p2();
  const bool interfered = scheme == SchemeVariant::kStandardNomaHarq;

  struct Acc {
    MomentAccumulator linear;
    MomentAccumulator db;
    std::uint64_t infeasible = 0;
    void Merge(const Acc& o) {
      linear.Merge(o.linear);
      db.Merge(o.db);
      infeasible += o.infeasible;
    }
  };
  const Acc acc = BlockReduce<Acc>(draws, workers, [&](std::uint64_t i, Acc& a) {
    RandomStream stream(seed, i);
    const ChannelDraw g = SampleGains(config.fading, stream);
    if (!(g.g1 > 0.0)) {
      ++a.infeasible;
      return;
    }
    const double interference = interfered ? g.g2 * p2 : 0.0;
    const double power = required_sinr * (1.0 + interference) / g.g1;
    a.linear.Add(power);
    a.db.Add(LinearToDb(power));
  });
  out.mean_linear = acc.linear.Mean();
  out.se_linear = acc.linear.StandardError();
  out.mean_db = acc.db.Mean();
  out.se_db = acc.db.StandardError();
  out.infeasible_fraction = double(acc.infeasible) / double(draws);
  return out;
}

ExpectedPowerDb ExpectedPowerDbSlot2(const LinkConfig& config,
                                     double target_rate, SchemeVariant scheme,
                                     ExpectationMethod method) {
  config.Validate();
  if (!(target_rate > 0.0)) {
    throw std::invalid_argument("target rate must be positive");
  }
  ExpectedPowerDb out;
  out.method = method;
  const PowerSolution unit =
      SolvePowerSlot2Ue1(config, ChannelDraw{1.0, 0.0}, target_rate);
  if (!unit.ok()) {
    out.feasible = false;
    return out;
  }
  const double to_db = 10.0 / std::numbers::ln10;
  const double l1 = config.fading.lambda1;
  const double s2 = config.fading.lambda2 / config.p2();
  const bool standard = scheme == SchemeVariant::kStandardNomaHarq;

  double mean_ln_g1 = 0.0;
  double mean_ln_interference = 0.0;
  if (method == ExpectationMethod::kClosedForm) {
    mean_ln_g1 = -std::numbers::egamma - std::log(l1);
    if (standard) mean_ln_interference = ScaledExpIntegralE1(s2);
  } else {
    // E{ln G1} with G1 = e^t: int t lambda e^{t - lambda e^t} dt.
    auto log_density = [=](double t) {
      return t * l1 * std::exp(t - l1 * std::exp(t));
    };
    const double hi = std::log(60.0 / l1);
    std::vector<double> points;
    for (double t = -80.0; t < hi; t += 5.0) points.push_back(t);
    points.push_back(hi);
    const QuadratureResult g =
        IntegrateAdaptive(log_density, points, kQuadAbsTol, kQuadRelTol);
    mean_ln_g1 = g.value;
    out.abs_error_estimate = to_db * g.abs_error;
    if (standard) {
      const double l2 = config.fading.lambda2;
      const double p2 = config.p2();
      auto integrand = [=](double x) {
        return l2 * std::exp(-l2 * x) * std::log1p(p2 * x);
      };
      auto tail = [=](double x) {
        // log1p(p2 x) <= log1p(p2 X) + (x - X) / X beyond X.
        return std::exp(-l2 * x) * (std::log1p(p2 * x) + 1.0 / (l2 * x));
      };
      const QuadratureResult q = IntegrateHalfLine(
          integrand, std::min(1e-2, 1e-2 / p2), tail, kQuadAbsTol, kQuadRelTol);
      mean_ln_interference = q.value;
      out.abs_error_estimate += to_db * q.abs_error;
    }
  }
  out.value_db =
      LinearToDb(unit.power) + to_db * (mean_ln_interference - mean_ln_g1);
  return out;
}

double PowerRatioOfMeansDb(const LinkConfig& config) {
  return LinearToDb(1.0 + config.p2() / config.fading.lambda2);
}

double PowerRatioMeanDb(const LinkConfig& config) {
  const double s = config.fading.lambda2 / config.p2();
  return 10.0 / std::numbers::ln10 * ScaledExpIntegralE1(s);
}

}  // namespace nomaharq
