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
#include <vector>

#include <gtest/gtest.h>

#include "nomaharq/random_stream.h"
#include "nomaharq/types.h"

namespace nomaharq {
namespace {

TEST(Philox, KnownAnswers) {
  EXPECT_EQ(Philox4x32({0, 0, 0, 0}, {0, 0}),
            (PhiloxBlock{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                       {0xffffffff, 0xffffffff}),
            (PhiloxBlock{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                       {0xa4093822, 0x299f31d0}),
            (PhiloxBlock{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(RandomStream, DeterministicAndDistinct) {
  RandomStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  for (int i = 0; i < 100; ++i) {
    const std::uint64_t x = a.NextU64();
    EXPECT_EQ(x, b.NextU64());
    EXPECT_NE(x, c.NextU64());
    EXPECT_NE(x, d.NextU64());
  }
}

TEST(RandomStream, UniformRangeAndMoments) {
  RandomStream s(1, 0);
  double sum = 0.0, sum_sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.NextUniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sum_sq += u * u;
  }
  EXPECT_NEAR(sum / n, 0.5, 4.0 * std::sqrt(1.0 / 12.0 / n));
  EXPECT_NEAR(sum_sq / n, 1.0 / 3.0, 0.005);
}

TEST(RandomStream, BernoulliEdges) {
  RandomStream s(1, 0);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_FALSE(s.Bernoulli(0.0));
    EXPECT_TRUE(s.Bernoulli(1.0));
  }
}

TEST(DbToLinear, Examples) {
  EXPECT_EQ(DbToLinear(0.0), 1.0);
  EXPECT_NEAR(DbToLinear(30.0), 1000.0, 1e-9);
  EXPECT_NEAR(DbToLinear(40.0), 10000.0, 1e-9);
  EXPECT_NEAR(LinearToDb(DbToLinear(17.3)), 17.3, 1e-12);
}

TEST(SampleGains, MeansMatchFadingRates) {
  const FadingParams f{0.1, 1.0};
  double s1 = 0.0, s2 = 0.0;
  const int n = 1'000'000;
  for (int i = 0; i < n; ++i) {
    RandomStream stream(5, i);
    const ChannelDraw d = SampleGains(f, stream);
    ASSERT_GE(d.g1, 0.0);
    ASSERT_GE(d.g2, 0.0);
    s1 += d.g1;
    s2 += d.g2;
  }
  EXPECT_NEAR(s1 / n, 10.0, 0.1);
  EXPECT_NEAR(s2 / n, 1.0, 0.01);
}

TEST(SampleGains, FixedSeedFixedSequence) {
  const FadingParams f{0.1, 1.0};
  RandomStream a(9, 3), b(9, 3);
  for (int i = 0; i < 50; ++i) {
    const ChannelDraw x = SampleGains(f, a);
    const ChannelDraw y = SampleGains(f, b);
    EXPECT_EQ(x.g1, y.g1);
    EXPECT_EQ(x.g2, y.g2);
  }
}

LinkConfig At(double p_db, double lambda1, double lambda2) {
  LinkConfig c;
  c.p1_db = p_db;
  c.p2_db = p_db;
  c.fading = {lambda1, lambda2};
  return c;
}

double SampleU1(const LinkConfig& c, RandomStream& s) {
  const ChannelDraw d = SampleGains(c.fading, s);
  return d.g1 * c.p1() / (1.0 + d.g2 * c.p2());
}

TEST(SinrCdfU1, Shape) {
  const LinkConfig c = At(30.0, 0.1, 1.0);
  EXPECT_EQ(SinrCdfU1(0.0, c), 0.0);
  EXPECT_EQ(SinrCdfU1(INFINITY, c), 1.0);
  double prev = 0.0;
  for (double lx = -4.0; lx <= 8.0; lx += 0.01) {
    const double v = SinrCdfU1(std::pow(10.0, lx), c);
    ASSERT_GE(v, prev);
    ASSERT_LE(v, 1.0);
    prev = v;
  }
  EXPECT_NEAR(prev, 1.0, 1e-12);
}

TEST(SinrCdfU1, EmpiricalPointCheck) {
  const LinkConfig c = At(30.0, 0.1, 1.0);
  const int n = 1'000'000;
  int below = 0;
  for (int i = 0; i < n; ++i) {
    RandomStream s(77, i);
    if (SampleU1(c, s) <= 5.0) ++below;
  }
  const double p = SinrCdfU1(5.0, c);
  const double se = std::sqrt(p * (1 - p) / n);
  EXPECT_NEAR(double(below) / n, p, 3.0 * se);
}

// Kolmogorov-Smirnov at 1e5 samples; the 1% critical value is 1.628/sqrt(n).
TEST(SinrCdfU1, KolmogorovSmirnov) {
  const LinkConfig configs[] = {At(30.0, 0.1, 1.0), At(10.0, 0.5, 2.0),
                                At(45.0, 0.02, 0.7)};
  const int n = 100'000;
  for (const LinkConfig& c : configs) {
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) {
      RandomStream s(123, i);
      x[i] = SampleU1(c, s);
    }
    std::sort(x.begin(), x.end());
    double dmax = 0.0;
    for (int i = 0; i < n; ++i) {
      const double f = SinrCdfU1(x[i], c);
      dmax = std::max({dmax, double(i + 1) / n - f, f - double(i) / n});
    }
    EXPECT_LT(dmax, 1.628 / std::sqrt(double(n))) << "p_db=" << c.p1_db;
  }
}

TEST(SinrPdfU1, IntegratesToCdf) {
  const LinkConfig c = At(20.0, 0.3, 1.5);
  // Trapezoid on a fine grid up to x = 50.
  double acc = 0.0, prev_x = 0.0, prev_f = SinrPdfU1(0.0, c);
  for (int i = 1; i <= 200000; ++i) {
    const double x = 50.0 * i / 200000.0;
    const double f = SinrPdfU1(x, c);
    acc += 0.5 * (f + prev_f) * (x - prev_x);
    prev_x = x;
    prev_f = f;
  }
  EXPECT_NEAR(acc, SinrCdfU1(50.0, c), 1e-7);
}

}  // namespace
}  // namespace nomaharq
