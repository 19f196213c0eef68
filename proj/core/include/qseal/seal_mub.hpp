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
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qseal/random.hpp"
#include "qseal/state.hpp"

namespace qseal {

// Basis-sealing parameters: each message bit occupies a block of N qubits,
// m of which carry the bit in the reading basis; the other N-m sealing
// qubits sit in the Hadamard basis with secret values. bp() is the original
// 3-qubits-per-bit scheme; ss() is the minority-fraction variant (m/N < 1/2),
// which trades certain retrieval for resistance to collective reading.
struct MubSealParams {
  int block_size = 3;     // N
  int message_count = 2;  // m
  Basis sealing_basis = Basis::Hadamard;

  int sealing_count() const { return block_size - message_count; }
  double message_fraction() const {
    return static_cast<double>(message_count) / static_cast<double>(block_size);
  }
  // 1 <= m <= N.
  void validate() const;

  static MubSealParams bp() { return {3, 2, Basis::Hadamard}; }
  static MubSealParams ss(int block_size, int message_count);

  bool operator==(const MubSealParams&) const = default;
};

// Per-block private record. Role r of the block lives at physical offset
// perm[r]; roles 0..m-1 are message qubits prepared in |b>, roles m..N-1 are
// sealing qubits prepared in |+> (value 0) or |-> (value 1).
struct BlockSecret {
  int bit = 0;
  std::vector<int> perm;
  std::vector<int> sealing_values;
};

// The sealer's full private record; reconstructs every prepared qubit.
struct SealSecret {
  MubSealParams params;
  std::uint64_t seed = 0;
  std::vector<BlockSecret> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  // Exact prepared state at (block, offset).
  SingleQubit prepared_state(int block, int offset) const;
  bool is_sealing_qubit(int block, int offset) const;
};

// One message block. Stored as per-qubit factors while the block remains a
// product state; collective operations densify it. Factor-wise simulation is
// exact here because every protocol operation either touches one qubit (plus
// its own ancillas) or the whole block jointly.
class SealedBlock {
 public:
  explicit SealedBlock(std::vector<SingleQubit> factors);
  static SealedBlock from_dense(QuantumState state);

  int num_qubits() const;
  bool entangled() const { return dense_.has_value(); }
  const std::vector<SingleQubit>& factors() const;

  int measure_qubit(int offset, Basis basis, RandomStream& rng);

  // SWAP test of the block qubit at `offset` against a fresh reference copy:
  // appends copy + ancilla, runs the test, measures both out again. Returns
  // the ancilla bit (1 = mismatch detected).
  int swap_test_against(int offset, const SingleQubit& reference, RandomStream& rng);

  // Two-outcome projective measurement onto the majority-0 / majority-1
  // spans of reading-basis states. Densifies; block size must be odd.
  int project_majority(RandomStream& rng);

  QuantumState to_dense() const;

 private:
  QuantumState& densify();

  std::vector<SingleQubit> factors_;
  std::optional<QuantumState> dense_;
};

// A sealed register plus its public metadata (scheme parameters and block
// count are announced; permutations and sealing values are not). Blocks are
// never entangled with each other, so the joint register is represented
// blockwise. Qubit `block * N + offset` is qubit `offset` of `block`.
class SealedMessage {
 public:
  SealedMessage(MubSealParams params, std::vector<SealedBlock> blocks);

  const MubSealParams& params() const { return params_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int block_size() const { return params_.block_size; }
  int total_qubits() const { return block_count() * block_size(); }

  SealedBlock& block(int i) { return blocks_[static_cast<std::size_t>(i)]; }
  const SealedBlock& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }

  std::pair<int, int> locate(int global_index) const;

 private:
  MubSealParams params_;
  std::vector<SealedBlock> blocks_;
};

// Seals one classical bit per block: m qubits in |b>, N-m sealing qubits
// independently uniform over {|+>, |->}, positions permuted uniformly.
// The secret records everything needed to reproduce the product state.
std::pair<SealedMessage, SealSecret> seal_bits(std::span<const int> bits,
                                               const MubSealParams& params, RandomStream& rng);

struct ReadResult {
  std::vector<int> bits;
  // Even block sizes can tie; ties resolve to 0 and are flagged.
  std::vector<bool> ties;
};

// Public retrieval: measures every qubit in the reading basis and majority-
// votes each block. Needs no secret.
ReadResult read_majority(SealedMessage& sealed, RandomStream& rng);

// Exact prepared state at a global qubit index (sealer-side reconstruction).
SingleQubit reference_state(const SealSecret& secret, int global_index);

enum class Verdict { Sealed, Broken };

struct VerificationReport {
  std::vector<int> tested_indices;
  std::vector<int> outcomes;  // SWAP-test bit per tested index
  int tested_sealing = 0;     // derived from the secret; not public knowledge
  int tested_message = 0;
  Verdict verdict = Verdict::Sealed;
  // Probability this particular test would flag an honest full read.
  double detection_power = 0.0;
};

// SWAP-tests each listed qubit against a fresh reference copy from the
// secret. test_indices must be a proper subset of all indices. Broken iff
// any test returns 1. Copies and ancillas are consumed; tested qubits stay
// in the register.
VerificationReport verify(SealedMessage& sealed, const SealSecret& secret,
                          std::span<const int> test_indices, RandomStream& rng);

// Covers every index with two proper-subset passes and merges the reports.
VerificationReport verify_all(SealedMessage& sealed, const SealSecret& secret, RandomStream& rng);

// 1 - (3/4)^s: the probability that testing s sealing qubits flags a message
// whose qubits were all read in the reading basis. Each tested sealing qubit
// fires with probability 1/4 (SWAP-test formula at overlap 1/2).
double detection_power(int tested_sealing_qubits);

}  // namespace qseal
