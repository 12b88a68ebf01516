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

#include "nomaharq/selftest.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "nomaharq/allocation.h"
#include "nomaharq/expectation.h"
#include "nomaharq/random_stream.h"
#include "nomaharq/specfun.h"
#include "nomaharq/types.h"

namespace nomaharq {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double RelError(double x, double reference) {
  if (std::isnan(x)) return std::numeric_limits<double>::infinity();
  return std::abs(x - reference) / std::abs(reference);
}

double LogUniform(RandomStream& s, double lo, double hi) {
  return std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * s.NextUniform());
}

double Uniform(RandomStream& s, double lo, double hi) {
  return lo + (hi - lo) * s.NextUniform();
}

int Blocklength(RandomStream& s) {
  return static_cast<int>(std::lround(LogUniform(s, 100.0, 10000.0)));
}

struct Sample {
  bool feasible = true;
  double value = 0.0;
  double oracle = 0.0;
  double variant = kNaN;
};

SelftestCheck RunCheck(std::string name, std::uint64_t seed, std::uint64_t id,
                       std::size_t points, bool has_variant,
                       std::string variant_description,
                       const std::function<Sample(RandomStream&)>& sample) {
  SelftestCheck check;
  check.name = std::move(name);
  check.tolerance = kSelftestTolerance;
  double variant_max = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    RandomStream stream(seed, (id << 32) + i);
    const Sample s = sample(stream);
    ++check.points;
    if (!s.feasible) {
      ++check.skipped;
      continue;
    }
    check.max_rel_error = std::max(check.max_rel_error, RelError(s.value, s.oracle));
    if (has_variant) variant_max = std::max(variant_max, RelError(s.variant, s.oracle));
  }
  check.passed = check.max_rel_error <= check.tolerance &&
                 check.skipped < check.points;
  if (has_variant) {
    check.variant_max_rel_error = variant_max;
    check.variant_description = std::move(variant_description);
  }
  return check;
}

LinkConfig RandomConfig(RandomStream& s) {
  LinkConfig c;
  c.p1_db = Uniform(s, 10.0, 50.0);
  c.p2_db = Uniform(s, 10.0, 50.0);
  c.fading.lambda1 = LogUniform(s, 0.01, 1.0);
  c.fading.lambda2 = LogUniform(s, 0.1, 10.0);
  c.theta1 = Probability(LogUniform(s, 1e-6, 1e-1));
  c.code1.blocklength = Blocklength(s);
  return c;
}

}  // namespace

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SelftestCheck& c) { return c.passed; });
}

std::string SelftestReport::ToText() const {
  std::string out;
  char line[512];
  for (const SelftestCheck& c : checks) {
    std::snprintf(line, sizeof(line),
                  "%s %-38s points=%zu skipped=%zu max_rel_error=%.3e tol=%.0e\n",
                  c.passed ? "PASS" : "FAIL", c.name.c_str(), c.points,
                  c.skipped, c.max_rel_error, c.tolerance);
    out += line;
    if (c.variant_max_rel_error) {
      std::snprintf(line, sizeof(line), "     variant %s: max_rel_error=%.3e\n",
                    c.variant_description.c_str(), *c.variant_max_rel_error);
      out += line;
    }
  }
  out += passed() ? "selftest: PASS\n" : "selftest: FAIL\n";
  return out;
}

SelftestReport RunSelftest(std::uint64_t seed, std::size_t points) {
  SelftestReport report;

  report.checks.push_back(RunCheck(
      "rate_qinv_vs_bisection", seed, 1, points, false, "",
      [](RandomStream& s) {
        const double u = LogUniform(s, 0.1, 1e4);
        const int l = Blocklength(s);
        const Probability theta(LogUniform(s, 1e-6, 0.4));
        const RateSolution c =
            SolveRateForSinr(u, l, theta, RateMethod::kClosedFormQinv);
        const RateSolution b =
            SolveRateForSinr(u, l, theta, RateMethod::kBisection);
        Sample out;
        out.feasible = c.ok() && b.ok();
        out.value = c.rate;
        out.oracle = b.rate;
        return out;
      }));

  report.checks.push_back(RunCheck(
      "expected_rate_slot1_vs_quadrature", seed, 2, points, true,
      "with Shannon-term sign and penalty rho sign flipped",
      [](RandomStream& s) {
        const LinkConfig c = RandomConfig(s);
        Sample out;
        out.value = ExpectedRateSlot1(c).value;
        out.oracle = ExpectedRateSlot1Quadrature(c).value;
        const double s1 = c.fading.lambda1 / c.p1();
        const double s2 = c.fading.lambda2 / c.p2();
        const double rho = s1 / s2;
        const double d = rho - 1.0;
        const double e1 = -ScaledExpIntegralE1(s1);
        const double e2 = -ScaledExpIntegralE1(s2);
        const double a =
            GaussianQInv(c.theta1.value()) / c.code1.sqrt_blocklength();
        out.variant = (e2 - e1) / d -
                      a * (e1 * (s1 * d + rho) + rho * e2 + d) / (d * d);
        return out;
      }));

  report.checks.push_back(RunCheck(
      "expected_rate_slot2_vs_quadrature", seed, 3, points, true,
      "with first term P1 e^s Ei(-s)",
      [](RandomStream& s) {
        const LinkConfig c = RandomConfig(s);
        Sample out;
        out.value = ExpectedRateSlot2(c).value;
        out.oracle = ExpectedRateSlot2Quadrature(c).value;
        const double sv = c.fading.lambda1 / c.p1();
        const double e = -ScaledExpIntegralE1(sv);
        const double a =
            GaussianQInv(c.theta1.value()) / c.code1.sqrt_blocklength();
        out.variant = c.p1() * e - a * (sv * e + 1.0);
        return out;
      }));

  report.checks.push_back(RunCheck(
      "rate_linearized_vs_bisection", seed, 4, points, true,
      "larger root with constant term alpha^2 + gamma^2",
      [](RandomStream& s) {
        const Probability theta(LogUniform(s, 1e-6, 0.4));
        const int l = Blocklength(s);
        const double u = LogUniform(s, 1.0, 1e4);
        const LinearizedQParams p = LinearizedQParams::From(theta, l, u);
        const RateSolution c = SolveRateLinearized(p);
        const RateSolution b = SolveRateLinearizedBisection(p);
        Sample out;
        out.feasible = c.ok() && b.ok();
        out.value = c.rate;
        out.oracle = b.rate;
        const double a2 = p.alpha * p.alpha;
        const double b2 = p.beta * p.beta;
        const double g = p.gamma;
        const double disc = g * g * b2 * b2 - (b2 - a2) * (a2 + g * g);
        out.variant =
            disc >= 0.0 ? std::log((g * b2 + std::sqrt(disc)) / (b2 - a2)) : kNaN;
        return out;
      }));

  report.checks.push_back(RunCheck(
      "required_sinr_lambert_w_vs_bisection", seed, 5, points, true,
      "with exponent a - r",
      [](RandomStream& s) {
        const double rate = Uniform(s, 0.1, 5.0);
        const int l = Blocklength(s);
        const Probability theta(LogUniform(s, 1e-6, 0.4));
        Sample out;
        out.value = RequiredSinrHighSnr(rate, l, theta,
                                        PowerMethod::kClosedFormLambertW);
        out.oracle =
            RequiredSinrHighSnr(rate, l, theta, PowerMethod::kBisection);
        out.feasible = std::isfinite(out.oracle);
        const double a = GaussianQInv(theta.value()) / std::sqrt(double(l));
        const double z = -a * std::exp(a - rate);
        if (z >= -1.0 / std::numbers::e) {
          const double w = LambertW(z, WBranch::kPrincipal);
          out.variant = (a + w) / w;
        }
        return out;
      }));

  return report;
}

}  // namespace nomaharq
