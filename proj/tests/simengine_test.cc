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

#include "nomaharq/simengine.h"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include <gtest/gtest.h>

#include "nomaharq/allocation.h"
#include "nomaharq/expectation.h"
#include "nomaharq/fading.h"
#include "nomaharq/random_stream.h"
#include "nomaharq/types.h"

namespace nomaharq {
namespace {

const SchemePolicy kProposed{SchemeVariant::kProposedOrderSwap,
                             Adaptation::kRateAdapt, std::nullopt};
const SchemePolicy kStandard{SchemeVariant::kStandardNomaHarq,
                             Adaptation::kRateAdapt, std::nullopt};

SchemePolicy PowerPolicy(SchemeVariant v, double rate) {
  return {v, Adaptation::kPowerAdapt, rate};
}

LinkConfig Config(double theta, int l) {
  LinkConfig c;
  c.theta1 = Probability(theta);
  c.theta2 = Probability(theta);
  c.code1 = CodeParams::Make(l, 1.0);
  c.code2 = CodeParams::Make(l, 1.0);
  return c;
}

bool SameEstimate(const Estimate& a, const Estimate& b) {
  return std::memcmp(&a.value, &b.value, sizeof(double)) == 0 &&
         std::memcmp(&a.se, &b.se, sizeof(double)) == 0 && a.n == b.n;
}

TEST(SchemePolicy, PowerAdaptNeedsTarget) {
  SchemePolicy p{SchemeVariant::kProposedOrderSwap, Adaptation::kPowerAdapt,
                 std::nullopt};
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  p.target_rate = 0.0;
  EXPECT_THROW(p.Validate(), std::invalid_argument);
  p.target_rate = 1.0;
  EXPECT_NO_THROW(p.Validate());
}

TEST(RunTrial, RecordInvariants) {
  const LinkConfig c = Config(1e-2, 200);
  const HarqSimulator sim(c, kProposed);
  int retx = 0;
  for (std::uint64_t i = 0; i < 20000; ++i) {
    RandomStream s(8, i);
    const HarqTrialRecord r = sim.RunTrial(s);
    ASSERT_GE(r.draw.g1, 0.0);
    ASSERT_GE(r.draw.g2, 0.0);
    if (!r.ue1_feasible) {
      ASSERT_FALSE(r.retransmitted());
      continue;
    }
    ASSERT_GT(r.rate_ue1_slot1, 0.0);
    ASSERT_GT(r.rate_ue2_slot1, 0.0);
    ASSERT_EQ(r.retransmitted(), !r.slot1_ue2_ok);
    if (r.retransmitted()) {
      ++retx;
      ASSERT_EQ(r.slot2_ue1_ok.has_value(), r.slot2_feasible ||
                                                r.both_failed_slot1);
      ASSERT_EQ(r.both_failed_slot1, !r.slot1_ue1_ok);
    }
    ASSERT_GE(r.rate_ue1_slot2, r.rate_ue1_slot1);
  }
  EXPECT_GT(retx, 0);
}

TEST(RunTrial, FixedSeedSameRecord) {
  const LinkConfig c = Config(1e-2, 200);
  for (std::uint64_t i = 0; i < 200; ++i) {
    RandomStream a(3, i), b(3, i);
    const HarqTrialRecord x = RunTrial(c, kProposed, a);
    const HarqTrialRecord y = RunTrial(c, kProposed, b);
    ASSERT_EQ(x.draw.g1, y.draw.g1);
    ASSERT_EQ(x.slot1_ue2_ok, y.slot1_ue2_ok);
    ASSERT_EQ(x.slot2_ue2_ok, y.slot2_ue2_ok);
    ASSERT_EQ(x.rate_ue1_slot2, y.rate_ue1_slot2);
  }
}

TEST(RunTrial, ZeroUe2GainAlwaysRetransmits) {
  LinkConfig c = Config(1e-3, 1000);
  c.p2_db = -300.0;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    RandomStream s(4, i);
    const HarqTrialRecord r = RunTrial(c, kProposed, s);
    if (!r.ue1_feasible) continue;
    ASSERT_FALSE(r.slot1_ue2_ok);
    ASSERT_TRUE(r.retransmitted());
    ASSERT_FALSE(*r.slot2_ue2_ok);
    // No interference from UE2, so UE1 is served at its clean SNR.
    ASSERT_EQ(r.rate_ue1_slot2, r.rate_ue1_slot1);
  }
}

TEST(RunBatch, SingleTrialMatchesRunTrial) {
  const LinkConfig c = Config(1e-3, 1000);
  RandomStream s(12, 0);
  const HarqTrialRecord r = RunTrial(c, kProposed, s);
  const AggregateStats a = RunBatch(c, kProposed, 1, 12, 1);
  EXPECT_EQ(a.trials, 1u);
  EXPECT_EQ(a.mean_rate_ue1_slot2.value, r.rate_ue1_slot2);
  EXPECT_EQ(a.mean_rate_ue1_slot2.n, r.slot2_feasible ? 1u : 0u);
}

TEST(RunBatch, WorkerCountDoesNotChangeResults) {
  const LinkConfig c = Config(1e-2, 200);
  for (const SchemePolicy& p :
       {kProposed, kStandard, PowerPolicy(SchemeVariant::kProposedOrderSwap, 1.0)}) {
    const AggregateStats a = RunBatch(c, p, 50'000, 99, 1);
    const AggregateStats b = RunBatch(c, p, 50'000, 99, 8);
    EXPECT_EQ(a.trials, b.trials);
    EXPECT_EQ(a.ue1_infeasible, b.ue1_infeasible);
    EXPECT_EQ(a.both_failed_slot1, b.both_failed_slot1);
    EXPECT_TRUE(SameEstimate(a.ue1_error_rate, b.ue1_error_rate));
    EXPECT_TRUE(SameEstimate(a.ue2_error_rate, b.ue2_error_rate));
    EXPECT_TRUE(SameEstimate(a.mean_rate_ue1_slot2, b.mean_rate_ue1_slot2));
    EXPECT_TRUE(SameEstimate(a.mean_power_ue1_slot2_db, b.mean_power_ue1_slot2_db));
    EXPECT_TRUE(SameEstimate(a.retransmission_fraction, b.retransmission_fraction));
  }
}

TEST(RunBatch, ZeroTrialsRejected) {
  EXPECT_THROW(RunBatch(Config(1e-3, 1000), kProposed, 0, 1), std::invalid_argument);
}

TEST(RunBatch, ProposedDominatesPerTrial) {
  const LinkConfig c = Config(1e-2, 200);
  const HarqSimulator prop(c, kProposed), stdd(c, kStandard);
  const HarqSimulator prop_p(c, PowerPolicy(SchemeVariant::kProposedOrderSwap, 1.0));
  const HarqSimulator std_p(c, PowerPolicy(SchemeVariant::kStandardNomaHarq, 1.0));
  int compared = 0;
  for (std::uint64_t i = 0; i < 50'000; ++i) {
    RandomStream a(21, i), b(21, i), x(21, i), y(21, i);
    const HarqTrialRecord rp = prop.RunTrial(a);
    const HarqTrialRecord rs = stdd.RunTrial(b);
    ASSERT_EQ(rp.draw.g1, rs.draw.g1);
    ASSERT_EQ(rp.draw.g2, rs.draw.g2);
    ASSERT_EQ(rp.retransmitted(), rs.retransmitted());
    if (rp.retransmitted() && rp.slot2_feasible && rs.slot2_feasible) {
      ++compared;
      ASSERT_GE(rp.rate_ue1_slot2, rs.rate_ue1_slot2);
    }
    const HarqTrialRecord pp = prop_p.RunTrial(x);
    const HarqTrialRecord ps = std_p.RunTrial(y);
    if (pp.slot2_feasible && ps.slot2_feasible) {
      ASSERT_LE(pp.power_ue1_slot2, ps.power_ue1_slot2);
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(RunBatch, ErrorBudgetsHold) {
  for (const SchemePolicy& p : {kProposed, kStandard}) {
    const LinkConfig c = Config(1e-2, 200);
    const AggregateStats s = RunBatch(c, p, 200'000, 5);
    EXPECT_LE(s.ue1_error_rate.value,
              1e-2 + 3.0 * std::sqrt(1e-2 * (1 - 1e-2) / s.ue1_error_rate.n));
    EXPECT_LE(s.ue2_error_rate.value,
              1e-2 + 3.0 * std::sqrt(1e-2 * (1 - 1e-2) / s.ue2_error_rate.n));
    // Slot-1 rates are solved to hit the budget exactly.
    EXPECT_NEAR(s.ue1_slot1_error_rate.value, 1e-2,
                4.0 * std::sqrt(1e-2 * (1 - 1e-2) / s.ue1_slot1_error_rate.n));
  }
}

TEST(RunBatch, CombiningHelpsUe2) {
  LinkConfig c = Config(1e-2, 200);
  c.theta2 = Probability(5e-2);
  const AggregateStats s = RunBatch(c, kProposed, 400'000, 6);
  ASSERT_GT(s.ue2_slot2_error_rate.n, 10'000u);
  EXPECT_LT(s.ue2_slot2_error_rate.value + 3.0 * s.ue2_slot2_error_rate.se,
            s.ue2_slot1_error_rate.value);
}

// With equal budgets nearly every UE2 failure comes with a UE1 failure.
// UE1 then fails again with probability theta1 and takes UE2 down with it,
// so the slot-2 failure rate matches the slot-1 rate instead of improving.
TEST(RunBatch, EqualBudgetsRetransmissionMatchesSlotOne) {
  const AggregateStats s = RunBatch(Config(1e-2, 200), kProposed, 400'000, 6);
  ASSERT_GT(s.ue2_slot2_error_rate.n, 2'000u);
  EXPECT_NEAR(s.ue2_slot2_error_rate.value, 1e-2,
              4.0 * std::sqrt(1e-2 * (1 - 1e-2) / s.ue2_slot2_error_rate.n));
}

TEST(RunBatch, SlotTwoRateMatchesExpectation) {
  LinkConfig c = Config(1e-3, 1000);
  const AggregateStats s = RunBatch(c, kProposed, 200'000, 7);
  const double closed = ExpectedRateSlot2(c).value;
  EXPECT_NEAR(s.mean_rate_ue1_slot2.value, closed,
              4.0 * s.mean_rate_ue1_slot2.se);
}

TEST(RunBatch, PowerAdaptMeanDbMatchesClosedForm) {
  LinkConfig c = Config(1e-3, 1000);
  c.p2_db = 40.0;
  for (SchemeVariant v :
       {SchemeVariant::kProposedOrderSwap, SchemeVariant::kStandardNomaHarq}) {
    const AggregateStats s = RunBatch(c, PowerPolicy(v, 1.0), 200'000, 8);
    const double closed = ExpectedPowerDbSlot2(c, 1.0, v).value_db;
    EXPECT_NEAR(s.mean_power_ue1_slot2_db.value, closed,
                4.0 * s.mean_power_ue1_slot2_db.se);
  }
}

}  // namespace
}  // namespace nomaharq
