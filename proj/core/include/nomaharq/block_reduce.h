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

// Deterministic parallel reduction over trial indices.
//
// Trials are cut into fixed-size blocks. Each block is accumulated
// sequentially into its own accumulator, and the block accumulators are
// merged in block order at the end, so the floating-point result does not
// depend on the number of workers or on scheduling.

#ifndef NOMAHARQ_BLOCK_REDUCE_H_
#define NOMAHARQ_BLOCK_REDUCE_H_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nomaharq {

inline constexpr std::uint64_t kTrialBlockSize = 4096;

// Returns the number of workers to use for `requested` (0 = hardware).
inline int ResolveWorkers(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Acc needs a default constructor and Merge(const Acc&).
// body(trial_index, acc) accumulates one trial.
template <typename Acc, typename Body>
Acc BlockReduce(std::uint64_t trials, int workers, const Body& body) {
  const std::uint64_t blocks = (trials + kTrialBlockSize - 1) / kTrialBlockSize;
  std::vector<Acc> partial(blocks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::uint64_t b = next++; b < blocks; b = next++) {
        const std::uint64_t begin = b * kTrialBlockSize;
        const std::uint64_t end = std::min(trials, begin + kTrialBlockSize);
        for (std::uint64_t i = begin; i < end; ++i) body(i, partial[b]);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = blocks;
    }
  };

  const int n = std::max<std::int64_t>(
      1, std::min<std::int64_t>(ResolveWorkers(workers),
                                static_cast<std::int64_t>(blocks)));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  Acc total;
  for (const Acc& acc : partial) total.Merge(acc);
  return total;
}

// Running sum and sum of squares of a scalar.
struct MomentAccumulator {
  std::uint64_t count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;

  void Add(double x) {
    ++count;
    sum += x;
    sum_sq += x * x;
  }
  void Merge(const MomentAccumulator& other) {
    count += other.count;
    sum += other.sum;
    sum_sq += other.sum_sq;
  }
  double Mean() const { return count ? sum / double(count) : 0.0; }
  // Sample standard deviation over sqrt(count).
  double StandardError() const {
    if (count < 2) return 0.0;
    const double n = double(count);
    const double var = std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0));
    return std::sqrt(var / n);
  }
};

}  // namespace nomaharq

#endif  // NOMAHARQ_BLOCK_REDUCE_H_
