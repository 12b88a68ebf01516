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
#include <numbers>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.h"

namespace nomaharq {
namespace {

double Rel(double x, long double ref) {
  return double(std::abs((x - ref) / ref));
}

TEST(GaussianQ, Examples) {
  EXPECT_EQ(GaussianQ(0.0), 0.5);
  EXPECT_LT(GaussianQ(40.0), 1e-300);
  EXPECT_GE(GaussianQ(40.0), 0.0);
  const long double ref = oracle::QByQuadrature(3.0902L);
  EXPECT_LT(Rel(GaussianQ(3.0902), ref), 1e-12);
  EXPECT_NEAR(GaussianQ(3.0902), 1.0e-3, 1e-6);
}

TEST(GaussianQ, RelativeAccuracyAgainstErfc) {
  for (double x = -8.0; x <= 8.0; x += 0.01) {
    ASSERT_LT(Rel(GaussianQ(x), oracle::Q(x)), 1e-12) << "x=" << x;
  }
  for (double x = 8.0; x <= 37.0; x += 0.5) {
    ASSERT_LT(Rel(GaussianQ(x), oracle::Q(x)), 1e-10) << "x=" << x;
  }
}

TEST(GaussianQInv, Examples) {
  EXPECT_EQ(GaussianQInv(0.5), 0.0);
  EXPECT_LT(Rel(GaussianQInv(1e-3), oracle::QInv(1e-3L)), 1e-10);
  EXPECT_NEAR(GaussianQInv(1e-3), 3.0902, 1e-4);
  EXPECT_NEAR(GaussianQInv(GaussianQ(1.7)), 1.7, 1e-10);
}

TEST(GaussianQInv, RoundTrip) {
  for (double lp = -300.0; lp < -1e-3; lp += 0.37) {
    const double p = std::pow(10.0, lp);
    ASSERT_LT(std::abs(GaussianQ(GaussianQInv(p)) - p) / p, 1e-10) << p;
    if (p < 1e-15) continue;
    ASSERT_LT(std::abs(GaussianQ(GaussianQInv(1.0 - p)) - (1.0 - p)) / (1.0 - p),
              1e-10)
        << p;
  }
}

TEST(GaussianQInv, DomainErrors) {
  EXPECT_THROW(GaussianQInv(0.0), std::domain_error);
  EXPECT_THROW(GaussianQInv(1.0), std::domain_error);
  EXPECT_THROW(GaussianQInv(-0.1), std::domain_error);
  EXPECT_THROW(GaussianQInv(std::nan("")), std::domain_error);
}

TEST(ExpIntegralEi, Examples) {
  EXPECT_LT(Rel(ExpIntegralEi(-1.0), oracle::EiNegativeByQuadrature(-1.0L)),
            1e-10);
  EXPECT_NEAR(ExpIntegralEi(-1.0), -0.2193839, 1e-7);
  EXPECT_LT(ExpIntegralEi(-1e-12), -20.0);
  EXPECT_LT(Rel(ExpIntegralEi(-10.0), oracle::EiNegativeByQuadrature(-10.0L)),
            1e-10);
  EXPECT_NEAR(ExpIntegralEi(-10.0) / -4.1570e-6, 1.0, 1e-4);
}

TEST(ExpIntegralEi, AgreesWithBoostAcrossSplit) {
  for (double lx = -14.0; lx <= 2.8; lx += 0.01) {
    const double x = std::pow(10.0, lx);
    ASSERT_LT(Rel(ExpIntegralE1(x), oracle::E1(x)), 1e-10) << x;
    ASSERT_LT(Rel(ScaledExpIntegralE1(x), std::exp((long double)x) * oracle::E1(x)),
              1e-10)
        << x;
  }
}

TEST(ExpIntegralEi, DomainErrors) {
  EXPECT_THROW(ExpIntegralEi(0.0), std::domain_error);
  EXPECT_THROW(ExpIntegralEi(1.0), std::domain_error);
}

TEST(LambertW, Examples) {
  EXPECT_EQ(LambertW(0.0, WBranch::kPrincipal), 0.0);
  EXPECT_NEAR(LambertW(-1.0 / std::numbers::e, WBranch::kPrincipal), -1.0, 1e-7);
  EXPECT_NEAR(LambertW(-1.0 / std::numbers::e, WBranch::kNegative), -1.0, 1e-7);
  const double w = LambertW(-0.0327, WBranch::kPrincipal);
  EXPECT_LT(Rel(w, oracle::W0ByNewton(-0.0327L)), 1e-12);
  EXPECT_NEAR(w, -0.0338, 5e-5);
}

TEST(LambertW, AgreesWithBoost) {
  const double zmin = -1.0 / std::numbers::e;
  for (int i = 1; i < 2000; ++i) {
    const double z = zmin * (1.0 - std::pow(10.0, -8.0 * i / 2000.0));
    ASSERT_LT(Rel(LambertW(z, WBranch::kPrincipal), oracle::W0(z)), 1e-10) << z;
    ASSERT_LT(Rel(LambertW(z, WBranch::kNegative), oracle::Wm1(z)), 1e-10) << z;
  }
  for (double lz = -300.0; lz < 300.0; lz += 0.7) {
    const double z = std::pow(10.0, lz);
    ASSERT_LT(Rel(LambertW(z, WBranch::kPrincipal), oracle::W0(z)), 1e-12) << z;
  }
}

TEST(LambertW, DomainErrors) {
  EXPECT_THROW(LambertW(-0.5, WBranch::kPrincipal), std::domain_error);
  EXPECT_THROW(LambertW(0.0, WBranch::kNegative), std::domain_error);
  EXPECT_THROW(LambertW(0.1, WBranch::kNegative), std::domain_error);
}

// Property suite on 1e4 random points each.
class SpecfunProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20260415};
};

TEST_F(SpecfunProperties, QSymmetryAndMonotone) {
  std::uniform_real_distribution<double> d(-40.0, 40.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = d(rng);
    ASSERT_NEAR(GaussianQ(x) + GaussianQ(-x), 1.0, 1e-12) << x;
    // Strictness is only observable where neither value has saturated.
    const double y = x + 1e-3;
    if (GaussianQ(x) < 0.999 && GaussianQ(y) > 1e-300) {
      ASSERT_GT(GaussianQ(x), GaussianQ(y)) << x;
    }
  }
}

TEST_F(SpecfunProperties, QInvMonotone) {
  std::uniform_real_distribution<double> d(-15.0, -1e-6);
  for (int i = 0; i < 10000; ++i) {
    const double p = std::pow(10.0, d(rng));
    ASSERT_GT(GaussianQInv(p), GaussianQInv(std::min(0.999999, p * 1.001)));
  }
}

TEST_F(SpecfunProperties, WDefiningEquation) {
  std::uniform_real_distribution<double> d01(0.0, 1.0);
  const double zmin = -1.0 / std::numbers::e;
  for (int i = 0; i < 10000; ++i) {
    const double zp = i % 2 == 0 ? zmin + (0.0 - zmin) * d01(rng)
                                 : std::pow(10.0, -10.0 + 20.0 * d01(rng));
    const double w0 = LambertW(zp, WBranch::kPrincipal);
    ASSERT_GE(w0, -1.0);
    ASSERT_NEAR(w0 * std::exp(w0), zp, 1e-12 * std::max(1.0, std::abs(zp))) << zp;
    const double zn = zmin * d01(rng);
    if (zn >= 0.0) continue;
    const double wm = LambertW(zn, WBranch::kNegative);
    ASSERT_LE(wm, -1.0);
    ASSERT_NEAR(wm * std::exp(wm), zn, 1e-12) << zn;
  }
}

// Ei'(x) = e^x / x < 0, so Ei falls from 0 at -inf to -inf at 0.
TEST_F(SpecfunProperties, EiStrictlyMonotone) {
  std::uniform_real_distribution<double> d(-8.0, 2.5);
  for (int i = 0; i < 10000; ++i) {
    const double x = -std::pow(10.0, d(rng));
    ASSERT_GT(ExpIntegralEi(x * 1.001), ExpIntegralEi(x)) << x;
    ASSERT_LT(ExpIntegralEi(x), 0.0);
  }
}

}  // namespace
}  // namespace nomaharq
