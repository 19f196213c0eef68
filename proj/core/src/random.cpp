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

#include "qseal/random.hpp"

#include <stdexcept>
#include <utility>

namespace qseal {

namespace {

// SplitMix64 finalizer; full-period 64-bit mixer.
std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), key_(mix64(mix64(seed) ^ mix64(~stream))) {}

std::uint64_t RandomStream::next_u64() {
  return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
}

double RandomStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::next_below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
  // Reject the tail that would bias the modulus.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound + 1) % bound;
  std::uint64_t v = next_u64();
  while (v > limit) v = next_u64();
  return v % bound;
}

bool RandomStream::next_bit() { return (next_u64() & 1) != 0; }

bool RandomStream::bernoulli(double p) { return next_double() < p; }

RandomStream RandomStream::fork(std::uint64_t substream) const {
  RandomStream child(0, 0);
  child.seed_ = seed_;
  child.stream_ = substream;
  child.key_ = mix64(key_ ^ mix64(substream + 0x632be59bd9b4e019ULL));
  child.counter_ = 0;
  return child;
}

std::vector<int> random_permutation(int n, RandomStream& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i) + 1));
    std::swap(perm[i], perm[j]);
  }
  return perm;
}

}  // namespace qseal
