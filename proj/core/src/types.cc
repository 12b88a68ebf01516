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

#include "nomaharq/types.h"

#include "nomaharq/fading.h"

#ifndef NOMAHARQ_VERSION_STRING
#define NOMAHARQ_VERSION_STRING "0.0.0"
#endif

namespace nomaharq {

CodeParams CodeParams::Make(int blocklength, double rate) {
  CodeParams code;
  code.blocklength = blocklength;
  code.rate = rate;
  code.Validate();
  return code;
}

CodeParams CodeParams::FromInfoNats(int blocklength, double info_nats) {
  CodeParams code;
  code.blocklength = blocklength;
  code.rate = info_nats / blocklength;
  code.info_nats = info_nats;
  code.Validate();
  return code;
}

void CodeParams::Validate() const {
  if (blocklength < kMinBlocklength) {
    throw std::invalid_argument("blocklength must be >= 100, got " +
                                std::to_string(blocklength));
  }
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw std::invalid_argument("code rate must be positive and finite");
  }
  if (info_nats && std::abs(rate * blocklength - *info_nats) >= 1e-9) {
    throw std::invalid_argument("code rate inconsistent with info_nats / L");
  }
}

void FadingParams::Validate() const {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0) || !std::isfinite(lambda1) ||
      !std::isfinite(lambda2)) {
    throw std::invalid_argument("fading rates must be positive and finite");
  }
}

double LinkConfig::p1() const { return DbToLinear(p1_db); }
double LinkConfig::p2() const { return DbToLinear(p2_db); }

void LinkConfig::Validate() const {
  if (!std::isfinite(p1_db) || !std::isfinite(p2_db)) {
    throw std::invalid_argument("transmit powers must be finite");
  }
  fading.Validate();
  code1.Validate();
  code2.Validate();
  for (double theta : {theta1.value(), theta2.value()}) {
    if (!(theta > 0.0 && theta <= 0.5)) {
      throw std::invalid_argument("error budgets must lie in (0, 0.5]");
    }
  }
}

LinkConfig DefaultLinkConfig() { return LinkConfig{}; }

const char* Version() { return NOMAHARQ_VERSION_STRING; }

}  // namespace nomaharq
