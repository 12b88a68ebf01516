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

#include "nomaharq/sweep.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "nomaharq/allocation.h"
#include "nomaharq/block_reduce.h"
#include "nomaharq/expectation.h"
#include "nomaharq/fading.h"
#include "nomaharq/random_stream.h"
#include "nomaharq/simengine.h"

namespace nomaharq {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Cell {
  double value = kNaN;
  double se = 0.0;
  double infeasible = 0.0;
};

struct CellPair {
  Cell standard;
  Cell proposed;
};

std::vector<double> Linspace(double lo, double hi, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1);
  return v;
}

const std::vector<double>& BlocklengthGrid() {
  static const std::vector<double> grid = {100,  200,  300,  500,  700, 1000,
                                           1500, 2000, 3000, 5000, 7000, 10000};
  return grid;
}

double PointRate(const SweepSpec& spec, const LinkConfig& config) {
  switch (spec.experiment) {
    case Experiment::kFig4PowerVsRate:
    case Experiment::kFig5PowerVsL:
    case Experiment::kFig6PowerVsLFixedK:
      return config.code1.rate;
    default:
      return 0.0;
  }
}

Cell FromEstimate(const Estimate& e, std::uint64_t trials) {
  return {e.value, e.se, 1.0 - double(e.n) / double(trials)};
}

CellPair RateCells(const SweepSpec& spec, const LinkConfig& config,
                   SweepMethod method) {
  CellPair out;
  switch (method) {
    case SweepMethod::kClosedForm: {
      out.standard.value = ExpectedRateSlot1(config).value;
      out.proposed.value = ExpectedRateSlot2(config).value;
      break;
    }
    case SweepMethod::kQuadrature: {
      const ExpectedRate s = ExpectedRateSlot1Quadrature(config);
      const ExpectedRate p = ExpectedRateSlot2Quadrature(config);
      out.standard = {s.value, s.abs_error_estimate, 0.0};
      out.proposed = {p.value, p.abs_error_estimate, 0.0};
      break;
    }
    case SweepMethod::kMonteCarlo: {
      SchemePolicy policy;
      policy.variant = SchemeVariant::kStandardNomaHarq;
      const AggregateStats s =
          RunBatch(config, policy, spec.trials, spec.seed, spec.workers);
      policy.variant = SchemeVariant::kProposedOrderSwap;
      const AggregateStats p =
          RunBatch(config, policy, spec.trials, spec.seed, spec.workers);
      out.standard = FromEstimate(s.mean_rate_ue1_slot2, spec.trials);
      out.proposed = FromEstimate(p.mean_rate_ue1_slot2, spec.trials);
      break;
    }
    case SweepMethod::kLinearizedQ: {
      struct Acc {
        MomentAccumulator standard;
        MomentAccumulator proposed;
        void Merge(const Acc& o) {
          standard.Merge(o.standard);
          proposed.Merge(o.proposed);
        }
      };
      const double p1 = config.p1();
      const double p2 = config.p2();
      const double l = config.code1.blocklength;
      const Acc acc = BlockReduce<Acc>(
          spec.trials, spec.workers, [&](std::uint64_t i, Acc& a) {
            RandomStream stream(spec.seed, i);
            const ChannelDraw g = SampleGains(config.fading, stream);
            const double rx1 = g.g1 * p1;
            const RateSolution s = SolveRateLinearized(LinearizedQParams::From(
                config.theta1, l, rx1 / (1.0 + g.g2 * p2)));
            const RateSolution p = SolveRateLinearized(
                LinearizedQParams::From(config.theta1, l, rx1));
            if (s.ok()) a.standard.Add(s.rate);
            if (p.ok()) a.proposed.Add(p.rate);
          });
      out.standard = FromEstimate(
          {acc.standard.Mean(), acc.standard.StandardError(), acc.standard.count},
          spec.trials);
      out.proposed = FromEstimate(
          {acc.proposed.Mean(), acc.proposed.StandardError(), acc.proposed.count},
          spec.trials);
      break;
    }
  }
  return out;
}

CellPair PowerCells(const SweepSpec& spec, const LinkConfig& config,
                    SweepMethod method) {
  const double rate = PointRate(spec, config);
  CellPair out;
  auto analytic = [&](SchemeVariant scheme, ExpectationMethod m) {
    const ExpectedPowerDb e = ExpectedPowerDbSlot2(config, rate, scheme, m);
    if (!e.feasible) return Cell{kNaN, 0.0, 1.0};
    return Cell{e.value_db, e.abs_error_estimate, 0.0};
  };
  auto monte_carlo = [&](SchemeVariant scheme) {
    const PowerExpectation e = ExpectedPowerSlot2(
        config, rate, scheme, spec.trials, spec.seed, spec.workers);
    return Cell{e.mean_db, e.se_db, e.infeasible_fraction};
  };
  switch (method) {
    case SweepMethod::kClosedForm:
      out.standard = analytic(SchemeVariant::kStandardNomaHarq,
                              ExpectationMethod::kClosedForm);
      out.proposed = analytic(SchemeVariant::kProposedOrderSwap,
                              ExpectationMethod::kClosedForm);
      out.standard.se = 0.0;
      out.proposed.se = 0.0;
      break;
    case SweepMethod::kQuadrature:
      out.standard = analytic(SchemeVariant::kStandardNomaHarq,
                              ExpectationMethod::kQuadrature);
      out.proposed = analytic(SchemeVariant::kProposedOrderSwap,
                              ExpectationMethod::kQuadrature);
      break;
    case SweepMethod::kMonteCarlo:
      out.standard = monte_carlo(SchemeVariant::kStandardNomaHarq);
      out.proposed = monte_carlo(SchemeVariant::kProposedOrderSwap);
      break;
    case SweepMethod::kLinearizedQ:
      throw std::invalid_argument("linearized_q applies to rate experiments");
  }
  return out;
}

std::string Join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += FormatDouble(v[i]);
  }
  return out;
}

}  // namespace

std::string_view ToString(Experiment experiment) {
  switch (experiment) {
    case Experiment::kFig2RateVsPower: return "fig2";
    case Experiment::kFig3aRateVsL: return "fig3a";
    case Experiment::kFig3bRateVsTheta: return "fig3b";
    case Experiment::kFig4PowerVsRate: return "fig4";
    case Experiment::kFig5PowerVsL: return "fig5";
    case Experiment::kFig6PowerVsLFixedK: return "fig6";
  }
  return "?";
}

std::string_view ToString(SweepMethod method) {
  switch (method) {
    case SweepMethod::kClosedForm: return "closed_form";
    case SweepMethod::kQuadrature: return "quadrature";
    case SweepMethod::kMonteCarlo: return "monte_carlo";
    case SweepMethod::kLinearizedQ: return "linearized_q";
  }
  return "?";
}

std::optional<Experiment> ParseExperiment(std::string_view name) {
  for (Experiment e :
       {Experiment::kFig2RateVsPower, Experiment::kFig3aRateVsL,
        Experiment::kFig3bRateVsTheta, Experiment::kFig4PowerVsRate,
        Experiment::kFig5PowerVsL, Experiment::kFig6PowerVsLFixedK}) {
    if (ToString(e) == name) return e;
  }
  return std::nullopt;
}

std::optional<SweepMethod> ParseSweepMethod(std::string_view name) {
  for (SweepMethod m : {SweepMethod::kClosedForm, SweepMethod::kQuadrature,
                        SweepMethod::kMonteCarlo, SweepMethod::kLinearizedQ}) {
    if (ToString(m) == name) return m;
  }
  return std::nullopt;
}

bool IsPowerExperiment(Experiment experiment) {
  return experiment == Experiment::kFig4PowerVsRate ||
         experiment == Experiment::kFig5PowerVsL ||
         experiment == Experiment::kFig6PowerVsLFixedK;
}

std::string_view AxisName(Experiment experiment) {
  switch (experiment) {
    case Experiment::kFig2RateVsPower: return "p_db";
    case Experiment::kFig3bRateVsTheta: return "theta";
    case Experiment::kFig4PowerVsRate: return "rate";
    default: return "l";
  }
}

void SweepSpec::Validate() const {
  base.Validate();
  if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
  const bool increasing = grid.size() < 2 || grid[1] > grid[0];
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (increasing ? !(grid[i] > grid[i - 1]) : !(grid[i] < grid[i - 1])) {
      throw std::invalid_argument("sweep grid must be strictly monotone");
    }
  }
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  for (SweepMethod m : methods) {
    if (m == SweepMethod::kLinearizedQ && IsPowerExperiment(experiment)) {
      throw std::invalid_argument("linearized_q applies to rate experiments");
    }
  }
  if (experiment == Experiment::kFig6PowerVsLFixedK && !(info_nats > 0.0)) {
    throw std::invalid_argument("fig6 needs info_nats K > 0");
  }
  if (experiment == Experiment::kFig5PowerVsL && !(target_rate > 0.0)) {
    throw std::invalid_argument("target rate must be positive");
  }
}

SweepSpec DefaultSweepSpec(Experiment experiment) {
  SweepSpec spec;
  spec.experiment = experiment;
  spec.base = DefaultLinkConfig();
  const std::vector<SweepMethod> rate_methods = {
      SweepMethod::kClosedForm, SweepMethod::kQuadrature,
      SweepMethod::kMonteCarlo};
  const std::vector<SweepMethod> power_methods = {SweepMethod::kClosedForm,
                                                  SweepMethod::kMonteCarlo};
  switch (experiment) {
    case Experiment::kFig2RateVsPower:
      spec.grid = Linspace(10.0, 50.0, 17);
      spec.methods = rate_methods;
      break;
    case Experiment::kFig3aRateVsL:
      spec.grid = BlocklengthGrid();
      spec.methods = rate_methods;
      break;
    case Experiment::kFig3bRateVsTheta:
      for (int k = 0; k <= 16; ++k) {
        spec.grid.push_back(std::pow(10.0, -5.0 + 0.25 * k));
      }
      spec.methods = rate_methods;
      break;
    case Experiment::kFig4PowerVsRate:
      spec.base.p2_db = 40.0;
      spec.grid = Linspace(0.25, 3.0, 12);
      spec.methods = power_methods;
      break;
    case Experiment::kFig5PowerVsL:
      spec.base.p2_db = 30.0;
      spec.target_rate = 2.0;
      spec.grid = BlocklengthGrid();
      spec.methods = power_methods;
      break;
    case Experiment::kFig6PowerVsLFixedK:
      spec.base.p2_db = 40.0;
      spec.info_nats = 100.0;
      spec.grid = BlocklengthGrid();
      spec.methods = power_methods;
      break;
  }
  return spec;
}

LinkConfig ConfigAtPoint(const SweepSpec& spec, double v) {
  LinkConfig c = spec.base;
  switch (spec.experiment) {
    case Experiment::kFig2RateVsPower:
      c.p1_db = v;
      c.p2_db = v;
      break;
    case Experiment::kFig3aRateVsL:
      c.code1.blocklength = static_cast<int>(std::lround(v));
      c.code2.blocklength = c.code1.blocklength;
      break;
    case Experiment::kFig3bRateVsTheta:
      c.theta1 = Probability(v);
      c.theta2 = Probability(v);
      break;
    case Experiment::kFig4PowerVsRate:
      c.code1 = CodeParams::Make(c.code1.blocklength, v);
      break;
    case Experiment::kFig5PowerVsL:
      c.code1 = CodeParams::Make(static_cast<int>(std::lround(v)),
                                 spec.target_rate);
      c.code2.blocklength = c.code1.blocklength;
      break;
    case Experiment::kFig6PowerVsLFixedK:
      c.code1 = CodeParams::FromInfoNats(static_cast<int>(std::lround(v)),
                                         spec.info_nats);
      c.code2.blocklength = c.code1.blocklength;
      break;
  }
  return c;
}

SweepResult RunSweep(const SweepSpec& spec) {
  spec.Validate();
  SweepResult result;
  result.spec = spec;
  for (SweepMethod m : spec.methods) {
    result.columns.push_back(std::string(ToString(m)) + "_standard");
    result.columns.push_back(std::string(ToString(m)) + "_proposed");
  }
  // Without methods there is nothing to tabulate: header only.
  if (spec.methods.empty()) return result;
  const bool power = IsPowerExperiment(spec.experiment);
  for (double v : spec.grid) {
    SweepRow row;
    row.axis = v;
    try {
      const LinkConfig config = ConfigAtPoint(spec, v);
      for (SweepMethod m : spec.methods) {
        const CellPair cells = power ? PowerCells(spec, config, m)
                                     : RateCells(spec, config, m);
        for (const Cell& c : {cells.standard, cells.proposed}) {
          row.values.push_back(c.value);
          row.se.push_back(c.se);
          row.infeasible.push_back(c.infeasible);
        }
      }
    } catch (const std::exception& e) {
      row.error = e.what();
      row.values.assign(result.columns.size(), kNaN);
      row.se.assign(result.columns.size(), kNaN);
      row.infeasible.assign(result.columns.size(), kNaN);
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::vector<std::pair<std::string, std::string>> SweepMetadata(
    const SweepSpec& spec) {
  const LinkConfig& c = spec.base;
  std::string methods;
  for (std::size_t i = 0; i < spec.methods.size(); ++i) {
    if (i) methods += ',';
    methods += ToString(spec.methods[i]);
  }
  std::vector<std::pair<std::string, std::string>> meta = {
      {"experiment", std::string(ToString(spec.experiment))},
      {"seed", std::to_string(spec.seed)},
      {"trials", std::to_string(spec.trials)},
      {"methods", methods},
      {"axis", std::string(AxisName(spec.experiment))},
      {"grid", Join(spec.grid)},
      {"p1_db", FormatDouble(c.p1_db)},
      {"p2_db", FormatDouble(c.p2_db)},
      {"lambda1", FormatDouble(c.fading.lambda1)},
      {"lambda2", FormatDouble(c.fading.lambda2)},
      {"l", std::to_string(c.code1.blocklength)},
      {"theta1", FormatDouble(c.theta1.value())},
      {"theta2", FormatDouble(c.theta2.value())},
  };
  if (spec.experiment == Experiment::kFig6PowerVsLFixedK) {
    meta.emplace_back("info_nats", FormatDouble(spec.info_nats));
  } else if (spec.experiment == Experiment::kFig5PowerVsL) {
    meta.emplace_back("rate", FormatDouble(spec.target_rate));
  }
  return meta;
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string FormatDouble(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string EmitCsv(const SweepResult& result) {
  const auto meta = SweepMetadata(result.spec);
  std::string canonical;
  for (const auto& [k, v] : meta) canonical += k + "=" + v + "\n";
  char hash[17];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(canonical)));

  std::ostringstream out;
  out << "# meta: version=" << Version() << "\n";
  for (const auto& [k, v] : meta) out << "# meta: " << k << "=" << v << "\n";
  out << "# meta: config_hash=" << hash << "\n";

  out << AxisName(result.spec.experiment);
  for (const std::string& c : result.columns) out << ',' << c;
  for (const std::string& c : result.columns) out << ',' << c << "_se";
  for (const std::string& c : result.columns) out << ',' << c << "_infeasible";
  out << "\n";
  for (const SweepRow& row : result.rows) {
    out << FormatDouble(row.axis);
    for (double v : row.values) out << ',' << FormatDouble(v);
    for (double v : row.se) out << ',' << FormatDouble(v);
    for (double v : row.infeasible) out << ',' << FormatDouble(v);
    out << "\n";
    if (!row.error.empty()) {
      out << "# error: " << FormatDouble(row.axis) << ": " << row.error << "\n";
    }
  }
  return out.str();
}

void WriteCsv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  file << EmitCsv(result);
  file.flush();
  if (!file) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace nomaharq
