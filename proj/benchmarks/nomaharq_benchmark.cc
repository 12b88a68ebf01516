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

#include <cstdint>

#include <benchmark/benchmark.h>

#include "nomaharq/allocation.h"
#include "nomaharq/expectation.h"
#include "nomaharq/random_stream.h"
#include "nomaharq/simengine.h"
#include "nomaharq/specfun.h"
#include "nomaharq/types.h"

namespace nomaharq {
namespace {

void BM_GaussianQInv(benchmark::State& state) {
  double p = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(GaussianQInv(p));
    p = p < 0.4 ? p * 1.01 : 1e-6;
  }
}
BENCHMARK(BM_GaussianQInv);

void BM_ExpIntegralE1(benchmark::State& state) {
  double x = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ScaledExpIntegralE1(x));
    x = x < 100.0 ? x * 1.05 : 1e-6;
  }
}
BENCHMARK(BM_ExpIntegralE1);

void BM_LambertW0(benchmark::State& state) {
  double z = -0.36;
  for (auto _ : state) {
    benchmark::DoNotOptimize(LambertW(z, WBranch::kPrincipal));
    z = z < -1e-8 ? z * 0.97 : -0.36;
  }
}
BENCHMARK(BM_LambertW0);

void BM_SolveRate(benchmark::State& state) {
  const auto method = static_cast<RateMethod>(state.range(0));
  double u = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveRateForSinr(u, 1000, Probability(1e-3), method));
    u = u < 1e4 ? u * 1.1 : 0.5;
  }
  state.SetLabel(std::string(ToString(method)));
}
BENCHMARK(BM_SolveRate)
    ->Arg(static_cast<int>(RateMethod::kClosedFormQinv))
    ->Arg(static_cast<int>(RateMethod::kBisection));

void BM_SolveMixtureRate(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        SolveMixtureRate(1000.0, 0.1, 1e-3, 1000, Probability(1e-3)));
  }
}
BENCHMARK(BM_SolveMixtureRate);

void BM_RequiredSinr(benchmark::State& state) {
  const auto method = static_cast<PowerMethod>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RequiredSinrHighSnr(1.0, 1000, Probability(1e-3), method));
  }
  state.SetLabel(std::string(ToString(method)));
}
BENCHMARK(BM_RequiredSinr)
    ->Arg(static_cast<int>(PowerMethod::kClosedFormLambertW))
    ->Arg(static_cast<int>(PowerMethod::kBisection));

void BM_ExpectedRateSlot1(benchmark::State& state) {
  const bool quadrature = state.range(0) != 0;
  const LinkConfig c = DefaultLinkConfig();
  for (auto _ : state) {
    benchmark::DoNotOptimize(quadrature ? ExpectedRateSlot1Quadrature(c)
                                        : ExpectedRateSlot1(c));
  }
  state.SetLabel(quadrature ? "quadrature" : "closed_form");
}
BENCHMARK(BM_ExpectedRateSlot1)->Arg(0)->Arg(1);

void BM_RunTrial(benchmark::State& state) {
  const SchemePolicy policy{static_cast<SchemeVariant>(state.range(0)),
                            Adaptation::kRateAdapt, std::nullopt};
  const HarqSimulator sim(DefaultLinkConfig(), policy);
  std::uint64_t i = 0;
  for (auto _ : state) {
    RandomStream stream(1, i++);
    benchmark::DoNotOptimize(sim.RunTrial(stream));
  }
  state.SetItemsProcessed(state.iterations());
  state.SetLabel(std::string(ToString(policy.variant)));
}
BENCHMARK(BM_RunTrial)->Arg(0)->Arg(1);

}  // namespace
}  // namespace nomaharq

BENCHMARK_MAIN();
