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

// Value types shared by every module: probabilities, SINR values, code
// parameters, fading parameters and the static link configuration.
//
// Units: rates are in nats per channel use (npcu), powers are linear ratios
// against a unit-variance receiver noise unless a name ends in `_db`.

#ifndef NOMAHARQ_TYPES_H_
#define NOMAHARQ_TYPES_H_

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace nomaharq {

// A probability in [0, 1]. Construction from NaN or an out-of-range value
// throws std::domain_error.
class Probability {
 public:
  constexpr Probability() = default;
  explicit Probability(double value) : value_(value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw std::domain_error("probability out of [0,1]: " +
                              std::to_string(value));
    }
  }

  constexpr double value() const { return value_; }

  friend constexpr bool operator==(Probability, Probability) = default;
  friend constexpr auto operator<=>(Probability, Probability) = default;

 private:
  double value_ = 0.0;
};

// Linear signal-to-interference-plus-noise ratio, u >= 0 and finite.
class SinrValue {
 public:
  constexpr SinrValue() = default;
  explicit SinrValue(double u) : u_(u) {
    if (!(u >= 0.0) || std::isinf(u)) {
      throw std::domain_error("SINR must be finite and >= 0: " +
                              std::to_string(u));
    }
  }

  constexpr double u() const { return u_; }

 private:
  double u_ = 0.0;
};

// Blocklength L (channel uses) and rate r (npcu) of one codeword. When the
// code is built from an information size K, r = K / L exactly.
struct CodeParams {
  static constexpr int kMinBlocklength = 100;

  int blocklength = 1000;
  double rate = 1.0;
  std::optional<double> info_nats;

  // Throws std::invalid_argument on L < 100 or r <= 0.
  static CodeParams Make(int blocklength, double rate);
  static CodeParams FromInfoNats(int blocklength, double info_nats);

  void Validate() const;
  double sqrt_blocklength() const { return std::sqrt(double(blocklength)); }
};

// Exponential rate parameters of the two channel gains: f(g) = lambda e^{-lambda g}.
struct FadingParams {
  double lambda1 = 0.1;
  double lambda2 = 1.0;

  void Validate() const;
};

// One quasi-static realization of (G1, G2) = (|H1|^2, |H2|^2), held fixed
// over a whole HARQ cycle.
// Decoding-order policy in the retransmission slot.
enum class SchemeVariant {
  kStandardNomaHarq,   // order fixed: UE1 first in both slots
  kProposedOrderSwap,  // UE2 first in slot 2 after its slot-1 failure
};

struct ChannelDraw {
  double g1 = 0.0;
  double g2 = 0.0;
};

// Static scenario parameters. UE1 is the cell-centre user, UE2 the cell-edge
// user. Powers are given in dB above unit noise power.
struct LinkConfig {
  double p1_db = 30.0;
  double p2_db = 30.0;
  FadingParams fading;
  CodeParams code1;
  CodeParams code2;
  Probability theta1{1e-3};
  Probability theta2{1e-3};

  double p1() const;
  double p2() const;

  // Throws std::invalid_argument when any field violates its invariant
  // (theta values must lie in (0, 0.5]).
  void Validate() const;
};

// Defaults used throughout the experiments: lambda = (0.1, 1), L = 1000,
// theta1 = theta2 = 1e-3, P1 = P2 = 30 dB.
LinkConfig DefaultLinkConfig();

// Library version, e.g. "0.1.0".
const char* Version();

}  // namespace nomaharq

#endif  // NOMAHARQ_TYPES_H_
