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

// Randomized cross-checks of every closed form against its numerical
// counterpart (bisection or adaptive quadrature).
//
// Some closed forms have a commonly quoted variant that differs from the
// implemented one by a sign or a factor. For those, the check also reports
// how far the variant lands from the numerical answer; that figure is
// informational and does not affect pass/fail.

#ifndef NOMAHARQ_SELFTEST_H_
#define NOMAHARQ_SELFTEST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nomaharq {

struct SelftestCheck {
  std::string name;
  std::size_t points = 0;   // grid points evaluated
  std::size_t skipped = 0;  // infeasible points, not compared
  double max_rel_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  // Largest relative deviation of the variant form; nullopt if none exists.
  std::optional<double> variant_max_rel_error;
  std::string variant_description;
};

struct SelftestReport {
  std::vector<SelftestCheck> checks;

  bool passed() const;
  std::string ToText() const;
};

inline constexpr double kSelftestTolerance = 1e-6;

SelftestReport RunSelftest(std::uint64_t seed = 1, std::size_t points = 1000);

}  // namespace nomaharq

#endif  // NOMAHARQ_SELFTEST_H_
