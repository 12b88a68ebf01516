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

// Parameter sweeps and their CSV form.
//
// Rate experiments report UE1's expected slot-2 rate in npcu. Power
// experiments report UE1's slot-2 transmit power in dB, averaged in the dB
// domain (the linear mean is infinite under Rayleigh fading, since
// E{1/G1} diverges).

#ifndef NOMAHARQ_SWEEP_H_
#define NOMAHARQ_SWEEP_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nomaharq/types.h"

namespace nomaharq {

enum class Experiment {
  kFig2RateVsPower,    // axis p_db, P1 = P2
  kFig3aRateVsL,       // axis l
  kFig3bRateVsTheta,   // axis theta, theta1 = theta2
  kFig4PowerVsRate,    // axis rate
  kFig5PowerVsL,       // axis l, fixed rate
  kFig6PowerVsLFixedK, // axis l, rate = K / L
};

enum class SweepMethod { kClosedForm, kQuadrature, kMonteCarlo, kLinearizedQ };

std::string_view ToString(Experiment experiment);
std::string_view ToString(SweepMethod method);
std::optional<Experiment> ParseExperiment(std::string_view name);
std::optional<SweepMethod> ParseSweepMethod(std::string_view name);

bool IsPowerExperiment(Experiment experiment);
std::string_view AxisName(Experiment experiment);

struct SweepSpec {
  Experiment experiment = Experiment::kFig2RateVsPower;
  LinkConfig base;
  std::vector<double> grid;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
  std::vector<SweepMethod> methods;
  double target_rate = 1.0;  // power experiments, except fig6
  double info_nats = 100.0;  // fig6
  int workers = 0;           // does not affect results

  // Throws std::invalid_argument on an empty or non-monotone grid, a method
  // that does not apply to the experiment, or an invalid base config.
  void Validate() const;
};

// Default base config, grid and methods for each experiment.
SweepSpec DefaultSweepSpec(Experiment experiment);

// Applies the axis value to a copy of the base config.
LinkConfig ConfigAtPoint(const SweepSpec& spec, double axis_value);

struct SweepRow {
  double axis = 0.0;
  // One entry per column of SweepResult::columns.
  std::vector<double> values;
  std::vector<double> se;
  std::vector<double> infeasible;
  std::string error;  // empty unless this point failed
};

struct SweepResult {
  SweepSpec spec;
  std::vector<std::string> columns;  // e.g. closed_form_standard
  std::vector<SweepRow> rows;
};

SweepResult RunSweep(const SweepSpec& spec);

// Key=value lines describing the resolved spec, in a fixed order.
std::vector<std::pair<std::string, std::string>> SweepMetadata(
    const SweepSpec& spec);

// 64-bit FNV-1a.
std::uint64_t Fnv1a64(std::string_view bytes);

std::string FormatDouble(double x);

std::string EmitCsv(const SweepResult& result);

// Throws std::runtime_error naming the path on I/O failure.
void WriteCsv(const SweepResult& result, const std::filesystem::path& path);

}  // namespace nomaharq

#endif  // NOMAHARQ_SWEEP_H_
