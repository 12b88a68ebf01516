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

// Monte Carlo simulation of two-slot NOMA-HARQ cycles.
//
// A trial draws one pair of quasi-static gains, allocates the slot-1 rates,
// and decides each decode with a Bernoulli draw whose failure probability is
// the normal-approximation error at the realized SINR. If UE2 fails in
// slot 1 it retransmits the same codeword in slot 2 and the receiver
// combines both copies; UE1 sends a new message.
//
// In slot 2 the Standard policy keeps the decoding order (UE1 first). The
// Proposed policy decodes UE2 first when UE1 succeeded in slot 1; if both
// failed in slot 1, slot 2 runs the Standard order under both policies.

#ifndef NOMAHARQ_SIMENGINE_H_
#define NOMAHARQ_SIMENGINE_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "nomaharq/random_stream.h"
#include "nomaharq/types.h"

namespace nomaharq {

enum class Adaptation {
  kRateAdapt,   // UE1 keeps P1 and raises its slot-2 rate
  kPowerAdapt,  // UE1 keeps a target rate and lowers its slot-2 power
};

std::string_view ToString(SchemeVariant variant);
std::string_view ToString(Adaptation adaptation);

struct SchemePolicy {
  SchemeVariant variant = SchemeVariant::kProposedOrderSwap;
  Adaptation adaptation = Adaptation::kRateAdapt;
  std::optional<double> target_rate;  // required by kPowerAdapt

  // Throws std::invalid_argument if kPowerAdapt lacks a positive target.
  void Validate() const;
};

struct HarqTrialRecord {
  ChannelDraw draw;
  SchemePolicy scheme;

  // Slot-1 allocation. A trial with ue1_feasible == false is not simulated
  // further; only its slot-2 allocation is kept. An infeasible UE2 still
  // transmits at kMinRate.
  bool ue1_feasible = false;
  bool ue2_feasible = false;
  double rate_ue1_slot1 = 0.0;
  double rate_ue2_slot1 = 0.0;

  bool slot1_ue1_ok = false;
  bool slot1_ue2_ok = false;

  // Slot-2 allocation of UE1 under the policy, computed for every draw
  // whether or not a retransmission happens.
  bool slot2_feasible = false;
  double rate_ue1_slot2 = 0.0;
  double power_ue1_slot2 = 0.0;  // linear

  // Present iff slot1_ue2_ok is false.
  std::optional<bool> slot2_ue1_ok;
  std::optional<bool> slot2_ue2_ok;
  // Both UEs failed in slot 1; slot 2 then ran the Standard order.
  bool both_failed_slot1 = false;

  bool retransmitted() const { return slot2_ue2_ok.has_value(); }
};

struct Estimate {
  double value = 0.0;
  double se = 0.0;  // sample std / sqrt(n)
  std::uint64_t n = 0;
};

struct AggregateStats {
  std::uint64_t trials = 0;
  // Draws where UE1's slot-1 rate is infeasible; excluded from every
  // statistic except the slot-2 allocation means.
  std::uint64_t ue1_infeasible = 0;
  std::uint64_t ue2_infeasible = 0;  // excluded from UE2 statistics

  Estimate ue1_error_rate;        // all UE1 messages, both slots
  Estimate ue1_slot1_error_rate;
  Estimate ue1_slot2_error_rate;  // over retransmission slots
  Estimate ue2_error_rate;        // residual after both slots
  Estimate ue2_slot1_error_rate;
  Estimate ue2_slot2_error_rate;  // combined decode, given a retransmission

  Estimate mean_rate_ue1_slot1;
  // Slot-2 allocation means over draws where that allocation is feasible.
  Estimate mean_rate_ue1_slot2;
  Estimate mean_rate_ue1_slot2_retx;  // retransmissions under the policy order
  Estimate mean_power_ue1_slot2;      // linear
  Estimate mean_power_ue1_slot2_db;

  Estimate retransmission_fraction;
  std::uint64_t both_failed_slot1 = 0;

  double infeasible_fraction() const {
    return trials ? double(ue1_infeasible) / double(trials) : 0.0;
  }
};

// Runs trials with a fixed config and policy. Construction solves the
// draw-independent parts (the required SINR under kPowerAdapt) once.
class HarqSimulator {
 public:
  HarqSimulator(const LinkConfig& config, const SchemePolicy& policy);

  HarqTrialRecord RunTrial(RandomStream& stream) const;

  const LinkConfig& config() const { return config_; }
  const SchemePolicy& policy() const { return policy_; }

 private:
  LinkConfig config_;
  SchemePolicy policy_;
  double p1_;
  double p2_;
  double required_sinr_ = 0.0;  // kPowerAdapt only
  bool power_feasible_ = true;
};

HarqTrialRecord RunTrial(const LinkConfig& config, const SchemePolicy& policy,
                         RandomStream& stream);

// Trial i uses RandomStream(seed, i). The result is identical for every
// worker count (0 = hardware concurrency).
AggregateStats RunBatch(const LinkConfig& config, const SchemePolicy& policy,
                        std::uint64_t trials, std::uint64_t seed,
                        int workers = 0);

}  // namespace nomaharq

#endif  // NOMAHARQ_SIMENGINE_H_
