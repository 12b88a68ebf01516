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

// noma_harq: figure sweeps, single-shot solvers and the self-test.
//
//   noma_harq fig2 --trials 100000 --out fig2.csv
//   noma_harq solve-rate --g1 10 --g2 1
//   noma_harq --config run.cfg fig4 --p2-db 40
//
// Every option may also be given in a flat key=value file via --config;
// command-line flags take precedence over the file. NOMA_HARQ_SEED supplies
// the seed when neither sets it.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nomaharq/allocation.h"
#include "nomaharq/error_model.h"
#include "nomaharq/fading.h"
#include "nomaharq/selftest.h"
#include "nomaharq/sweep.h"

namespace nomaharq {
namespace {

struct Options {
  int l = 1000;
  double theta1 = 1e-3;
  double theta2 = 1e-3;
  double p1_db = 30.0;
  double p2_db = 30.0;
  double lambda1 = 0.1;
  double lambda2 = 1.0;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
  std::string out;
  std::string methods;
  std::string grid;
  int workers = 0;
  double rate = 1.0;
  double k = 100.0;
  double g1 = 10.0;
  double g2 = 1.0;
};

struct OptionHandles {
  CLI::Option* l;
  CLI::Option* theta1;
  CLI::Option* theta2;
  CLI::Option* p1_db;
  CLI::Option* p2_db;
  CLI::Option* lambda1;
  CLI::Option* lambda2;
  CLI::Option* rate;
  CLI::Option* k;
};

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) parts.push_back(item.substr(b, e - b + 1));
  }
  return parts;
}

std::vector<double> ParseGrid(const std::string& text) {
  std::vector<double> grid;
  for (const std::string& p : SplitCommas(text)) {
    std::size_t used = 0;
    const double v = std::stod(p, &used);
    if (used != p.size()) throw std::invalid_argument("bad grid value: " + p);
    grid.push_back(v);
  }
  return grid;
}

std::vector<SweepMethod> ParseMethods(const std::string& text) {
  std::vector<SweepMethod> methods;
  for (const std::string& p : SplitCommas(text)) {
    const auto m = ParseSweepMethod(p);
    if (!m) {
      throw std::invalid_argument(
          "unknown method '" + p +
          "' (closed_form, quadrature, monte_carlo, linearized_q)");
    }
    methods.push_back(*m);
  }
  return methods;
}

// Overrides the fields of `config` whose options were given.
void ApplyLinkOptions(const Options& o, const OptionHandles& h,
                      LinkConfig& config) {
  if (h.p1_db->count()) config.p1_db = o.p1_db;
  if (h.p2_db->count()) config.p2_db = o.p2_db;
  if (h.lambda1->count()) config.fading.lambda1 = o.lambda1;
  if (h.lambda2->count()) config.fading.lambda2 = o.lambda2;
  if (h.theta1->count()) config.theta1 = Probability(o.theta1);
  if (h.theta2->count()) config.theta2 = Probability(o.theta2);
  if (h.l->count()) {
    config.code1.blocklength = o.l;
    config.code2.blocklength = o.l;
  }
}

LinkConfig LinkConfigFrom(const Options& o) {
  LinkConfig c;
  c.p1_db = o.p1_db;
  c.p2_db = o.p2_db;
  c.fading = {o.lambda1, o.lambda2};
  c.code1.blocklength = o.l;
  c.code2.blocklength = o.l;
  c.theta1 = Probability(o.theta1);
  c.theta2 = Probability(o.theta2);
  c.Validate();
  return c;
}

int RunFigure(Experiment experiment, const Options& o, const OptionHandles& h,
              bool methods_given) {
  SweepSpec spec = DefaultSweepSpec(experiment);
  ApplyLinkOptions(o, h, spec.base);
  spec.trials = o.trials;
  spec.seed = o.seed;
  spec.workers = o.workers;
  if (!o.grid.empty()) spec.grid = ParseGrid(o.grid);
  if (methods_given) spec.methods = ParseMethods(o.methods);
  if (h.rate->count()) spec.target_rate = o.rate;
  if (h.k->count()) spec.info_nats = o.k;

  const SweepResult result = RunSweep(spec);
  if (o.out.empty() || o.out == "-") {
    std::cout << EmitCsv(result);
  } else {
    WriteCsv(result, o.out);
  }
  int failures = 0;
  for (const SweepRow& row : result.rows) {
    if (!row.error.empty()) {
      std::cerr << "warning: " << ToString(experiment) << " at "
                << FormatDouble(row.axis) << ": " << row.error << "\n";
      ++failures;
    }
  }
  return failures == 0 ? 0 : 3;
}

void PrintKv(const std::string& key, double value) {
  std::cout << key << "=" << FormatDouble(value) << "\n";
}

void PrintRate(const std::string& key, const RateSolution& s) {
  std::cout << key << "=" << (s.ok() ? FormatDouble(s.rate) : "nan")
            << " status=" << ToString(s.status)
            << " method=" << ToString(s.method)
            << " residual=" << FormatDouble(s.residual) << "\n";
}

int RunSolveRate(const Options& o) {
  const LinkConfig c = LinkConfigFrom(o);
  const ChannelDraw draw{o.g1, o.g2};
  const double rx1 = draw.g1 * c.p1();
  const double rx2 = draw.g2 * c.p2();
  PrintKv("sinr_slot1_ue1", rx1 / (1.0 + rx2));
  PrintKv("snr_slot2_ue1", rx1);
  PrintRate("rate_slot1_ue1", SolveRateSlot1Ue1(c, draw));
  PrintRate("rate_slot1_ue1_bisection",
            SolveRateSlot1Ue1(c, draw, RateMethod::kBisection));
  PrintRate("rate_slot1_ue2", SolveRateSlot1Ue2(c, draw, c.theta1));
  PrintRate("rate_slot2_ue1", SolveRateSlot2Ue1(c, draw));
  PrintRate("rate_slot2_ue1_bisection",
            SolveRateSlot2Ue1(c, draw, RateMethod::kBisection));
  PrintRate("rate_slot2_ue1_linearized",
            SolveRateLinearized(LinearizedQParams::From(
                c.theta1, c.code1.blocklength, rx1)));
  return 0;
}

int RunSolvePower(const Options& o) {
  const LinkConfig c = LinkConfigFrom(o);
  const ChannelDraw draw{o.g1, o.g2};
  const PowerSolution proposed = SolvePowerSlot2Ue1(c, draw, o.rate);
  const PowerSolution standard = SolvePowerSlot2Ue1Interfered(c, draw, o.rate);
  const PowerSolution check =
      SolvePowerSlot2Ue1(c, draw, o.rate, PowerMethod::kBisection);
  auto print = [](const std::string& key, const PowerSolution& s) {
    std::cout << key << "=" << (s.ok() ? FormatDouble(s.power) : "nan")
              << " db=" << (s.ok() ? FormatDouble(LinearToDb(s.power)) : "nan")
              << " status=" << ToString(s.status)
              << " method=" << ToString(s.method) << "\n";
  };
  PrintKv("target_rate", o.rate);
  print("power_proposed", proposed);
  print("power_proposed_bisection", check);
  print("power_standard", standard);
  if (proposed.ok() && standard.ok()) {
    PrintKv("saving_db", LinearToDb(standard.power / proposed.power));
  }
  return proposed.ok() && standard.ok() ? 0 : 3;
}

int RunSelftestCommand(const Options& o) {
  const SelftestReport report = RunSelftest(o.seed);
  std::cout << report.ToText();
  return report.passed() ? 0 : 1;
}

}  // namespace
}  // namespace nomaharq

int main(int argc, char** argv) {
  using namespace nomaharq;
  CLI::App app{"Error-constrained uplink NOMA-HARQ experiments"};
  app.set_version_flag("--version", std::string(Version()));
  app.set_config("--config", "", "flat key=value file with option values");
  app.require_subcommand(1);

  Options o;
  OptionHandles h{};
  h.l = app.add_option("--l", o.l, "codeword length (channel uses)")
            ->check(CLI::Range(CodeParams::kMinBlocklength, 1'000'000));
  h.theta1 = app.add_option("--theta1", o.theta1, "UE1 error budget")
                 ->check(CLI::Range(1e-12, 0.5));
  h.theta2 = app.add_option("--theta2", o.theta2, "UE2 error budget")
                 ->check(CLI::Range(1e-12, 0.5));
  h.p1_db = app.add_option("--p1-db", o.p1_db, "UE1 transmit power (dB)");
  h.p2_db = app.add_option("--p2-db", o.p2_db, "UE2 transmit power (dB)");
  h.lambda1 = app.add_option("--lambda1", o.lambda1, "UE1 fading rate")
                  ->check(CLI::PositiveNumber);
  h.lambda2 = app.add_option("--lambda2", o.lambda2, "UE2 fading rate")
                  ->check(CLI::PositiveNumber);
  app.add_option("--trials", o.trials, "Monte Carlo trials per point")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "root seed")->envname("NOMA_HARQ_SEED");
  app.add_option("--out", o.out, "output CSV path (default: stdout)");
  CLI::Option* methods = app.add_option(
      "--methods", o.methods,
      "comma list of closed_form,quadrature,monte_carlo,linearized_q");
  app.add_option("--grid", o.grid, "comma list of sweep-axis values");
  app.add_option("--workers", o.workers, "worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
  h.rate = app.add_option("--rate", o.rate, "target rate (npcu)")
               ->check(CLI::PositiveNumber);
  h.k = app.add_option("--k", o.k, "information nats per codeword (fig6)")
            ->check(CLI::PositiveNumber);
  app.add_option("--g1", o.g1, "UE1 channel gain (solve-*)")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--g2", o.g2, "UE2 channel gain (solve-*)")
      ->check(CLI::NonNegativeNumber);

  struct Figure {
    const char* name;
    const char* help;
    Experiment experiment;
  };
  const Figure figures[] = {
      {"fig2", "expected slot-2 rate vs power, P1 = P2",
       Experiment::kFig2RateVsPower},
      {"fig3a", "expected slot-2 rate vs codeword length",
       Experiment::kFig3aRateVsL},
      {"fig3b", "expected slot-2 rate vs error budget",
       Experiment::kFig3bRateVsTheta},
      {"fig4", "slot-2 power vs target rate", Experiment::kFig4PowerVsRate},
      {"fig5", "slot-2 power vs codeword length",
       Experiment::kFig5PowerVsL},
      {"fig6", "slot-2 power vs codeword length at fixed K",
       Experiment::kFig6PowerVsLFixedK},
  };
  std::vector<std::pair<CLI::App*, Experiment>> figure_commands;
  for (const Figure& f : figures) {
    figure_commands.emplace_back(
        app.add_subcommand(f.name, f.help)->fallthrough(), f.experiment);
  }
  CLI::App* solve_rate =
      app.add_subcommand("solve-rate", "rates for one channel draw")
          ->fallthrough();
  CLI::App* solve_power =
      app.add_subcommand("solve-power", "slot-2 powers for one channel draw")
          ->fallthrough();
  CLI::App* selftest =
      app.add_subcommand("selftest", "closed forms vs numerical oracles")
          ->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& [cmd, experiment] : figure_commands) {
      if (cmd->parsed()) {
        return RunFigure(experiment, o, h, methods->count() > 0);
      }
    }
    if (solve_rate->parsed()) return RunSolveRate(o);
    if (solve_power->parsed()) return RunSolvePower(o);
    if (selftest->parsed()) return RunSelftestCommand(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
