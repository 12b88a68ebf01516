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

// Rayleigh block fading: exponential channel gains and the distribution of
// the slot-1 SINR of UE1.

#ifndef NOMAHARQ_FADING_H_
#define NOMAHARQ_FADING_H_

#include "nomaharq/random_stream.h"
#include "nomaharq/types.h"

namespace nomaharq {

double DbToLinear(double x_db);
double LinearToDb(double x);

// G1 ~ Exp(lambda1), G2 ~ Exp(lambda2), independent, by inverse CDF.
// Consumes exactly two uniforms from the stream (g1 first).
ChannelDraw SampleGains(const FadingParams& params, RandomStream& stream);

// CDF of U1 = P1 G1 / (1 + P2 G2):
//   1 - exp(-(lambda1/P1) x) / (1 + (lambda1 P2 / (lambda2 P1)) x).
double SinrCdfU1(double x, const LinkConfig& config);
Probability SinrCdfU1(SinrValue x, const LinkConfig& config);

// Density of U1, the derivative of SinrCdfU1.
double SinrPdfU1(double x, const LinkConfig& config);

}  // namespace nomaharq

#endif  // NOMAHARQ_FADING_H_
