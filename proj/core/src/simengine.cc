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

#include <stdexcept>

#include "nomaharq/allocation.h"
#include "nomaharq/block_reduce.h"
#include "nomaharq/error_model.h"
#include "nomaharq/fading.h"

namespace nomaharq {
namespace {

struct Slot2Plan {
  bool feasible = false;
  double rate = 0.0;
  double power = 0.0;
};

struct StatsAccumulator {
  std::uint64_t trials = 0;
  std::uint64_t ue1_infeasible = 0;
  std::uint64_t ue2_infeasible = 0;
  std::uint64_t both_failed = 0;
  MomentAccumulator ue1_all, ue1_slot1, ue1_slot2;
  MomentAccumulator ue2_all, ue2_slot1, ue2_slot2;
  MomentAccumulator rate1, rate2, rate2_retx, power2, power2_db;
  MomentAccumulator retx;

  void Add(const HarqTrialRecord& rec) {
    ++trials;
    if (rec.slot2_feasible) {
      rate2.Add(rec.rate_ue1_slot2);
      power2.Add(rec.power_ue1_slot2);
      power2_db.Add(LinearToDb(rec.power_ue1_slot2));
    }
    if (!rec.ue1_feasible) {
      ++ue1_infeasible;
      return;
    }
    const double ue1_fail1 = rec.slot1_ue1_ok ? 0.0 : 1.0;
    ue1_slot1.Add(ue1_fail1);
    ue1_all.Add(ue1_fail1);
    rate1.Add(rec.rate_ue1_slot1);
    retx.Add(rec.retransmitted() ? 1.0 : 0.0);
    if (rec.both_failed_slot1) ++both_failed;
    if (rec.slot2_ue1_ok) {
      const double fail = *rec.slot2_ue1_ok ? 0.0 : 1.0;
      ue1_slot2.Add(fail);
      ue1_all.Add(fail);
      if (!rec.both_failed_slot1) rate2_retx.Add(rec.rate_ue1_slot2);
    }
    if (!rec.ue2_feasible) {
      ++ue2_infeasible;
      return;
    }
    ue2_slot1.Add(rec.slot1_ue2_ok ? 0.0 : 1.0);
    if (rec.retransmitted()) {
      const double fail = *rec.slot2_ue2_ok ? 0.0 : 1.0;
      ue2_slot2.Add(fail);
      ue2_all.Add(fail);
    } else {
      ue2_all.Add(0.0);
    }
  }

  void Merge(const StatsAccumulator& o) {
    trials += o.trials;
    ue1_infeasible += o.ue1_infeasible;
    ue2_infeasible += o.ue2_infeasible;
    both_failed += o.both_failed;
    ue1_all.Merge(o.ue1_all);
    ue1_slot1.Merge(o.ue1_slot1);
    ue1_slot2.Merge(o.ue1_slot2);
    ue2_all.Merge(o.ue2_all);
    ue2_slot1.Merge(o.ue2_slot1);
    ue2_slot2.Merge(o.ue2_slot2);
    rate1.Merge(o.rate1);
    rate2.Merge(o.rate2);
    rate2_retx.Merge(o.rate2_retx);
    power2.Merge(o.power2);
    power2_db.Merge(o.power2_db);
    retx.Merge(o.retx);
  }
};

Estimate ToEstimate(const MomentAccumulator& m) {
  return {m.Mean(), m.StandardError(), m.count};
}

}  // namespace

std::string_view ToString(SchemeVariant variant) {
  switch (variant) {
    case SchemeVariant::kStandardNomaHarq: return "standard";
    case SchemeVariant::kProposedOrderSwap: return "proposed";
  }
  return "?";
}

std::string_view ToString(Adaptation adaptation) {
  switch (adaptation) {
    case Adaptation::kRateAdapt: return "rate";
    case Adaptation::kPowerAdapt: return "power";
  }
  return "?";
}

void SchemePolicy::Validate() const {
  if (adaptation == Adaptation::kPowerAdapt &&
      !(target_rate && *target_rate > 0.0)) {
    throw std::invalid_argument("power adaptation needs a positive target rate");
  }
}

HarqSimulator::HarqSimulator(const LinkConfig& config,
                             const SchemePolicy& policy)
    : config_(config), policy_(policy), p1_(config.p1()), p2_(config.p2()) {
  config_.Validate();
  policy_.Validate();
  if (policy_.adaptation == Adaptation::kPowerAdapt) {
    const PowerSolution unit =
        SolvePowerSlot2Ue1(config_, ChannelDraw{1.0, 0.0}, *policy_.target_rate);
    power_feasible_ = unit.ok();
    required_sinr_ = unit.power;
  }
}

HarqTrialRecord HarqSimulator::RunTrial(RandomStream& stream) const {
  HarqTrialRecord rec;
  rec.scheme = policy_;
  rec.draw = SampleGains(config_.fading, stream);
  const double g1 = rec.draw.g1;
  const double rx1 = g1 * p1_;
  const double rx2 = rec.draw.g2 * p2_;
  const int l1 = config_.code1.blocklength;
  const int l2 = config_.code2.blocklength;

  const double sinr1 = rx1 / (1.0 + rx2);
  const RateSolution r1 = SolveRateForSinr(sinr1, l1, config_.theta1);

  auto plan_for = [&](SchemeVariant variant) {
    Slot2Plan plan;
    const bool swap = variant == SchemeVariant::kProposedOrderSwap;
    if (policy_.adaptation == Adaptation::kRateAdapt) {
      const RateSolution r =
          swap ? SolveRateForSinr(rx1, l1, config_.theta1) : r1;
      plan.feasible = r.ok();
      plan.rate = r.rate;
      plan.power = p1_;
    } else {
      plan.rate = *policy_.target_rate;
      plan.feasible = power_feasible_ && g1 > 0.0;
      if (plan.feasible) {
        plan.power = required_sinr_ * (1.0 + (swap ? 0.0 : rx2)) / g1;
      }
    }
    return plan;
  };
  // The slot-2 allocation is a property of the draw and is recorded even
  // when slot 1 cannot be served.
  const Slot2Plan policy_plan = plan_for(policy_.variant);
  rec.slot2_feasible = policy_plan.feasible;
  rec.rate_ue1_slot2 = policy_plan.rate;
  rec.power_ue1_slot2 = policy_plan.power;

  if (!r1.ok()) return rec;
  rec.ue1_feasible = true;
  rec.rate_ue1_slot1 = r1.rate;
  const RateSolution r2 = SolveRateSlot1Ue2(config_, rec.draw, config_.theta1);
  rec.ue2_feasible = r2.ok();
  rec.rate_ue2_slot1 = r2.ok() ? r2.rate : kMinRate;

  rec.slot1_ue1_ok = !stream.Bernoulli(NormalApproxError(l1, r1.rate, sinr1));
  const double ue2_copy1 = rec.slot1_ue1_ok ? rx2 : rx2 / (1.0 + rx1);
  rec.slot1_ue2_ok = !stream.Bernoulli(
      NormalApproxError(l2, rec.rate_ue2_slot1, ue2_copy1));
  if (rec.slot1_ue2_ok) return rec;

  rec.both_failed_slot1 = !rec.slot1_ue1_ok;
  const SchemeVariant order = rec.slot1_ue1_ok
                                  ? policy_.variant
                                  : SchemeVariant::kStandardNomaHarq;
  const Slot2Plan plan =
      order == policy_.variant ? policy_plan : plan_for(order);
  // An infeasible UE1 stays silent in slot 2.
  const double rx1_slot2 = plan.feasible ? g1 * plan.power : 0.0;

  if (order == SchemeVariant::kProposedOrderSwap) {
    const double copy2 = rx2 / (1.0 + rx1_slot2);
    const bool ue2_ok = !stream.Bernoulli(
        NormalApproxError(l2, rec.rate_ue2_slot1, ue2_copy1 + copy2));
    rec.slot2_ue2_ok = ue2_ok;
    if (plan.feasible) {
      const double sinr = ue2_ok ? rx1_slot2 : rx1_slot2 / (1.0 + rx2);
      rec.slot2_ue1_ok =
          !stream.Bernoulli(NormalApproxError(l1, plan.rate, sinr));
    }
  } else {
    bool ue1_cancelled = true;
    if (plan.feasible) {
      const bool ue1_ok = !stream.Bernoulli(
          NormalApproxError(l1, plan.rate, rx1_slot2 / (1.0 + rx2)));
      rec.slot2_ue1_ok = ue1_ok;
      ue1_cancelled = ue1_ok;
    }
    const double copy2 = ue1_cancelled ? rx2 : rx2 / (1.0 + rx1_slot2);
    rec.slot2_ue2_ok = !stream.Bernoulli(
        NormalApproxError(l2, rec.rate_ue2_slot1, ue2_copy1 + copy2));
  }
  return rec;
}

HarqTrialRecord RunTrial(const LinkConfig& config, const SchemePolicy& policy,
                         RandomStream& stream) {
  return HarqSimulator(config, policy).RunTrial(stream);
}

AggregateStats RunBatch(const LinkConfig& config, const SchemePolicy& policy,
                        std::uint64_t trials, std::uint64_t seed,
                        int workers) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  const HarqSimulator sim(config, policy);
  const StatsAccumulator acc = BlockReduce<StatsAccumulator>(
      trials, workers, [&](std::uint64_t i, StatsAccumulator& a) {
        RandomStream stream(seed, i);
        a.Add(sim.RunTrial(stream));
      });

  AggregateStats stats;
  stats.trials = acc.trials;
  stats.ue1_infeasible = acc.ue1_infeasible;
  stats.ue2_infeasible = acc.ue2_infeasible;
  stats.ue1_error_rate = ToEstimate(acc.ue1_all);
  stats.ue1_slot1_error_rate = ToEstimate(acc.ue1_slot1);
  stats.ue1_slot2_error_rate = ToEstimate(acc.ue1_slot2);
  stats.ue2_error_rate = ToEstimate(acc.ue2_all);
  stats.ue2_slot1_error_rate = ToEstimate(acc.ue2_slot1);
  stats.ue2_slot2_error_rate = ToEstimate(acc.ue2_slot2);
  stats.mean_rate_ue1_slot1 = ToEstimate(acc.rate1);
  stats.mean_rate_ue1_slot2 = ToEstimate(acc.rate2);
  stats.mean_rate_ue1_slot2_retx = ToEstimate(acc.rate2_retx);
  stats.mean_power_ue1_slot2 = ToEstimate(acc.power2);
  stats.mean_power_ue1_slot2_db = ToEstimate(acc.power2_db);
  stats.retransmission_fraction = ToEstimate(acc.retx);
  stats.both_failed_slot1 = acc.both_failed;
  return stats;
}

}  // namespace nomaharq
