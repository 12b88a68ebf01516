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

// Counter-based random streams built on Philox4x32-10 (Salmon et al.,
// "Parallel random numbers: as easy as 1, 2, 3", SC'11).
//
// A stream is identified by (seed, stream index). The seed is the Philox key
// and the stream index fills the upper half of the 128-bit counter, so every
// trial of a Monte Carlo batch owns an independent, reproducible stream
// regardless of which worker runs it.

#ifndef NOMAHARQ_RANDOM_STREAM_H_
#define NOMAHARQ_RANDOM_STREAM_H_

#include <array>
#include <cstdint>

namespace nomaharq {

using PhiloxBlock = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

// One Philox4x32 bijection with 10 rounds.
PhiloxBlock Philox4x32(PhiloxBlock counter, PhiloxKey key);

class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_index);

  std::uint64_t NextU64();

  // Uniform on [0, 1) with 53 random bits.
  double NextUniform();

  // true with probability p.
  bool Bernoulli(double p);

 private:
  void Refill();

  PhiloxKey key_;
  std::uint64_t stream_index_;
  std::uint64_t block_counter_ = 0;
  PhiloxBlock buffer_{};
  int buffered_words_ = 0;
};

}  // namespace nomaharq

#endif  // NOMAHARQ_RANDOM_STREAM_H_
