// Copyright 2026 The qseal Authors
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

#pragma once

#include <cstdint>
#include <vector>

namespace qseal {

// Counter-based pseudorandom stream: output i is a 64-bit hash of
// (seed, stream, i). Identical (seed, stream) pairs reproduce the same
// sequence bit-exactly on every platform, and fork() derives independent
// substreams without touching the parent, so any protocol run or Monte
// Carlo trial can be replayed from a single root seed.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53 significant bits.
  double next_double();

  // Uniform in [0, bound); bound must be positive. Rejection-sampled, unbiased.
  std::uint64_t next_below(std::uint64_t bound);

  bool next_bit();
  bool bernoulli(double p);

  // Independent substream identified by (seed, substream). The parent's
  // counter is not advanced.
  RandomStream fork(std::uint64_t substream) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Uniformly random permutation of {0, ..., n-1} (Fisher-Yates).
std::vector<int> random_permutation(int n, RandomStream& rng);

}  // namespace qseal
