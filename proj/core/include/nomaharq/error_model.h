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

// Finite-blocklength decoding error model.
//
// For a length-L code at rate r (npcu) over a link with SINR u the decoding
// error probability is approximated by
//
//   F(r, u) = Q( sqrt(L) (log(1+u) - r) / sqrt(1 - 1/(1+u)^2) ).
//
// The raw `double` entry points are what the solvers and the simulator call
// in their inner loops; the typed overloads validate their arguments.

#ifndef NOMAHARQ_ERROR_MODEL_H_
#define NOMAHARQ_ERROR_MODEL_H_

#include "nomaharq/types.h"

namespace nomaharq {

// sqrt(1 - 1/(1+u)^2), evaluated without cancellation for small u.
double DispersionFactor(double sinr);

// F(r, u). Returns 1 for u == 0 and 0 for u == +inf.
double NormalApproxError(double blocklength, double rate, double sinr);

// F(r, u) with the dispersion factor replaced by u/(1+u), the high-SNR form
// behind the closed-form expected rates and the Lambert-W power rule.
double HighSnrApproxError(double blocklength, double rate, double sinr);

// First-order expansion of F around u0 = e^r - 1:
//   1/2 - sqrt(L) (u - u0) / sqrt(2 pi (e^{2r} - 1)),
// saturated to 1 below u0 - h and to 0 above u0 + h, with
// h = sqrt(pi (e^{2r} - 1) / (2 L)).
double LinearizedApproxError(double blocklength, double rate, double sinr);

Probability FblError(const CodeParams& code, SinrValue sinr);
Probability FblErrorLinearized(const CodeParams& code, SinrValue sinr);

// Chase combining of two copies of the same codeword: the receiver sees the
// accumulated SINR u1 + u2 at the unchanged rate.
Probability RtdCombinedError(const CodeParams& code, SinrValue copy1,
                             SinrValue copy2);

struct SlotErrorPair {
  Probability ue1;
  Probability ue2;
};

// Slot-1 SIC error probabilities (UE1 decoded first, UE2 second). UE2's
// error mixes the cancelled and the interference-affected decodes by UE1's
// outcome; both branches use UE2's own rate r2.
SlotErrorPair SicSlot1ErrorPair(const LinkConfig& config,
                                const ChannelDraw& draw);

}  // namespace nomaharq

#endif  // NOMAHARQ_ERROR_MODEL_H_
