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

#include "nomaharq/allocation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "nomaharq/bisection.h"
#include "nomaharq/error_model.h"
#include "nomaharq/specfun.h"

namespace nomaharq {
namespace {

// Precomputed pieces of F(x, u) that do not depend on the rate x.
struct ErrorKernel {
  double sqrt_l;
  double log1p_u;
  double inv_dispersion;
  bool dead;  // u == 0: certain failure

  ErrorKernel(double blocklength, double sinr)
      : sqrt_l(std::sqrt(blocklength)),
        log1p_u(std::log1p(sinr)),
        inv_dispersion(sinr > 0.0 ? 1.0 / DispersionFactor(sinr) : 0.0),
        dead(!(sinr > 0.0)) {}

  double operator()(double rate) const {
    if (dead) return 1.0;
    if (std::isinf(log1p_u)) return 0.0;
    return GaussianQ(sqrt_l * (log1p_u - rate) * inv_dispersion);
  }
};

RateSolution Infeasible(RateMethod method, double rate = 0.0) {
  return {rate, 0.0, method, SolveStatus::kInfeasible};
}

double RateUpperBracket(double sinr, int blocklength, double theta) {
  const double a = std::abs(GaussianQInv(theta)) / std::sqrt(blocklength);
  return std::log1p(sinr) + 10.0 * a + 1e-6;
}

PowerSolution PowerFromSinr(double required_sinr, double interference,
                            double g1, double rate, int blocklength,
                            double theta, PowerMethod method) {
  PowerSolution sol;
  sol.method = method;
  if (!(g1 > 0.0)) {
    sol.status = SolveStatus::kInfeasible;
    return sol;
  }
  sol.power = required_sinr * (1.0 + interference) / g1;
  sol.residual =
      std::abs(HighSnrApproxError(blocklength, rate, required_sinr) - theta);
  return sol;
}

double RequiredSinrBisection(double rate, int blocklength, double theta,
                             int* status) {
  // HighSnrApproxError decreases in u; bisect on its negation.
  auto neg_error = [&](double u) {
    return -HighSnrApproxError(blocklength, rate, u);
  };
  double hi = kMaxSinr;
  BisectionResult r = BisectIncreasing(neg_error, -theta, kMinSinr, hi,
                                       kMaxBisectionIterations);
  while (!r.bracketed && hi < 1e300 && neg_error(hi) < -theta) {
    hi *= 1e6;
    r = BisectIncreasing(neg_error, -theta, kMinSinr, hi,
                         kMaxBisectionIterations);
  }
  *status = r.bracketed ? 0 : 1;
  return r.root;
}

}  // namespace

std::string_view ToString(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOk: return "ok";
    case SolveStatus::kInfeasible: return "infeasible";
    case SolveStatus::kNoConvergence: return "no_convergence";
  }
  return "?";
}

std::string_view ToString(RateMethod method) {
  switch (method) {
    case RateMethod::kBisection: return "bisection";
    case RateMethod::kClosedFormQinv: return "closed_form_qinv";
    case RateMethod::kClosedFormQuadratic: return "closed_form_quadratic";
  }
  return "?";
}

std::string_view ToString(PowerMethod method) {
  switch (method) {
    case PowerMethod::kBisection: return "bisection";
    case PowerMethod::kClosedFormLambertW: return "closed_form_lambert_w";
  }
  return "?";
}

LinearizedQParams LinearizedQParams::From(Probability theta,
                                          double blocklength, double sinr) {
  LinearizedQParams p;
  p.alpha = 0.5 - theta.value();
  p.beta = std::sqrt(blocklength / (2.0 * std::numbers::pi));
  p.gamma = 1.0 + sinr;
  return p;
}

void LinearizedQParams::Validate() const {
  if (!(alpha > 0.0 && alpha < 0.5) || !(beta > alpha) || !(gamma >= 1.0)) {
    throw std::invalid_argument(
        "linearized-Q parameters need 0 < alpha < 1/2 < beta, gamma >= 1");
  }
}

double LinearizedQParams::blocklength() const {
  return 2.0 * std::numbers::pi * beta * beta;
}

RateSolution SolveRateForSinr(double sinr, int blocklength, Probability theta,
                              RateMethod method) {
  const ErrorKernel error(blocklength, sinr);
  if (error.dead) return Infeasible(method);

  if (method == RateMethod::kClosedFormQinv) {
    const double a = GaussianQInv(theta.value()) / std::sqrt(blocklength);
    const double rate = std::log1p(sinr) - a * DispersionFactor(sinr);
    if (!(rate > 0.0)) return Infeasible(method, rate);
    return {rate, std::abs(error(rate) - theta.value()), method,
            SolveStatus::kOk};
  }
  if (method != RateMethod::kBisection) {
    throw std::invalid_argument("SolveRateForSinr: unsupported method");
  }
  const BisectionResult r = BisectIncreasing(
      error, theta.value(), kMinRate,
      RateUpperBracket(sinr, blocklength, theta.value()),
      kMaxBisectionIterations);
  if (!r.bracketed) return Infeasible(method);
  return {r.root, r.residual, method, SolveStatus::kOk};
}

RateSolution SolveMixtureRate(double sinr_clean, double sinr_interfered,
                              double interfered_weight, int blocklength,
                              Probability target) {
  const ErrorKernel clean(blocklength, sinr_clean);
  const ErrorKernel interfered(blocklength, sinr_interfered);
  const double w = interfered_weight;
  auto mixture = [&](double x) {
    return (1.0 - w) * clean(x) + w * interfered(x);
  };
  const double hi =
      RateUpperBracket(std::max(sinr_clean, sinr_interfered), blocklength,
                       target.value()) + 1.0;
  const BisectionResult r = BisectIncreasing(mixture, target.value(), kMinRate,
                                             hi, kMaxBisectionIterations);
  if (!r.bracketed) return Infeasible(RateMethod::kBisection);
  return {r.root, r.residual, RateMethod::kBisection, SolveStatus::kOk};
}

RateSolution SolveRateSlot1Ue1(const LinkConfig& config, const ChannelDraw& draw,
                               RateMethod method) {
  const double sinr = draw.g1 * config.p1() / (1.0 + draw.g2 * config.p2());
  return SolveRateForSinr(sinr, config.code1.blocklength, config.theta1, method);
}

RateSolution SolveRateSlot1Ue2(const LinkConfig& config, const ChannelDraw& draw,
                               Probability theta1_used) {
  const double rx1 = draw.g1 * config.p1();
  const double rx2 = draw.g2 * config.p2();
  return SolveMixtureRate(rx2, rx2 / (1.0 + rx1), theta1_used.value(),
                          config.code2.blocklength, config.theta2);
}

RateSolution SolveRateSlot2Ue1(const LinkConfig& config, const ChannelDraw& draw,
                               RateMethod method) {
  return SolveRateForSinr(draw.g1 * config.p1(), config.code1.blocklength,
                          config.theta1, method);
}

RateSolution SolveRateSlot2Ue1Exact(const LinkConfig& config,
                                    const ChannelDraw& draw,
                                    Probability theta2_tilde) {
  const double rx1 = draw.g1 * config.p1();
  const double rx2 = draw.g2 * config.p2();
  return SolveMixtureRate(rx1, rx1 / (1.0 + rx2), theta2_tilde.value(),
                          config.code1.blocklength, config.theta1);
}

RateSolution SolveRateLinearized(const LinearizedQParams& params) {
  params.Validate();
  const double a2 = params.alpha * params.alpha;
  const double b2 = params.beta * params.beta;
  const double g = params.gamma;
  const double qa = b2 - a2;
  const double qb = -2.0 * b2 * g;
  const double qc = b2 * g * g + a2;
  const double disc = qb * qb - 4.0 * qa * qc;
  const double theta = params.theta();
  const double l = params.blocklength();
  const RateMethod method = RateMethod::kClosedFormQuadratic;
  if (disc < 0.0) return {0.0, 0.0, method, SolveStatus::kNoConvergence};

  // Stable pair of roots: the larger from the quadratic formula, the smaller
  // from the product of the roots.
  const double v_large = (-qb + std::sqrt(disc)) / (2.0 * qa);
  const double v_small = qc / (qa * v_large);

  auto unsquared_residual = [&](double v) {
    return params.beta * (g - v) - params.alpha * std::sqrt(v * v - 1.0);
  };
  const double scale = params.beta * g;
  for (double v : {v_small, v_large}) {
    if (v < 1.0) continue;
    if (std::abs(unsquared_residual(v)) > 1e-9 * scale) continue;
    const double rate = std::log(v);
    if (!(rate > 0.0)) return Infeasible(method, rate);
    return {rate, std::abs(NormalApproxError(l, rate, g - 1.0) - theta), method,
            SolveStatus::kOk};
  }
  // Both roots fail the unsquared equation only when v <= 1, i.e. gamma = 1.
  if (v_small <= 1.0 + 1e-12) return Infeasible(method, std::log(v_small));
  return {0.0, 0.0, method, SolveStatus::kNoConvergence};
}

RateSolution SolveRateLinearizedBisection(const LinearizedQParams& params) {
  params.Validate();
  const double l = params.blocklength();
  const double sinr = params.gamma - 1.0;
  if (!(sinr > 0.0)) return Infeasible(RateMethod::kBisection);
  auto error = [&](double x) { return LinearizedApproxError(l, x, sinr); };
  const BisectionResult r =
      BisectIncreasing(error, params.theta(), kMinRate,
                       std::log1p(sinr) + 1.0, kMaxBisectionIterations);
  if (!r.bracketed) return Infeasible(RateMethod::kBisection);
  return {r.root, r.residual, RateMethod::kBisection, SolveStatus::kOk};
}

double RequiredSinrHighSnr(double rate, int blocklength, Probability theta,
                           PowerMethod method) {
  if (method == PowerMethod::kBisection) {
    int status = 0;
    const double u = RequiredSinrBisection(rate, blocklength, theta.value(),
                                           &status);
    return status == 0 ? u : std::numeric_limits<double>::quiet_NaN();
  }
  const double a = GaussianQInv(theta.value()) / std::sqrt(blocklength);
  if (a == 0.0) return std::expm1(rate);
  const double z = -a * std::exp(-a - rate);
  const double t = -LambertW(z, WBranch::kPrincipal);
  return a / t - 1.0;
}

namespace {

PowerSolution SolvePowerWithInterference(const LinkConfig& config,
                                         const ChannelDraw& draw,
                                         double target_rate,
                                         double interference,
                                         PowerMethod method) {
  if (!(target_rate > 0.0)) {
    throw std::invalid_argument("target rate must be positive");
  }
  const int l = config.code1.blocklength;
  const double theta = config.theta1.value();
  int status = 0;
  const double u_bisect = RequiredSinrBisection(target_rate, l, theta, &status);
  if (status != 0) {
    PowerSolution sol;
    sol.method = method;
    sol.status = SolveStatus::kNoConvergence;
    return sol;
  }
  if (method == PowerMethod::kBisection) {
    return PowerFromSinr(u_bisect, interference, draw.g1, target_rate, l,
                         theta, method);
  }
  const double u_closed = RequiredSinrHighSnr(target_rate, l, config.theta1,
                                              PowerMethod::kClosedFormLambertW);
  if (!(std::abs(u_closed - u_bisect) <= 1e-8 * u_bisect)) {
    return PowerFromSinr(u_bisect, interference, draw.g1, target_rate, l,
                         theta, PowerMethod::kBisection);
  }
  return PowerFromSinr(u_closed, interference, draw.g1, target_rate, l, theta,
                       method);
}

}  // namespace

PowerSolution SolvePowerSlot2Ue1(const LinkConfig& config,
                                 const ChannelDraw& draw, double target_rate,
                                 PowerMethod method) {
  return SolvePowerWithInterference(config, draw, target_rate, 0.0, method);
}

PowerSolution SolvePowerSlot2Ue1Interfered(const LinkConfig& config,
                                           const ChannelDraw& draw,
                                           double target_rate,
                                           PowerMethod method) {
  return SolvePowerWithInterference(config, draw, target_rate,
                                    draw.g2 * config.p2(), method);
}

}  // namespace nomaharq
