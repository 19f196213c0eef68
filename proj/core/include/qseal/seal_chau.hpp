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

#include <array>
#include <cstdint>
#include <vector>

#include "qseal/codes.hpp"
#include "qseal/random.hpp"
#include "qseal/seal_mub.hpp"
#include "qseal/state.hpp"

namespace qseal {

// Quantum-payload sealing: the message qubit is CSS-encoded, t of its n
// physical qubits are withheld, and each withheld public slot is filled by
// one qubit of a privately held [[n',1,3]]-encoded |0> decoy codeword.
// Reading by error correction disturbs the decoy's entanglement with the
// sealer's qubits; verification re-measures the decoy stabilizers.
struct ChauParams {
  int css_length = 7;        // n
  int css_distance = 3;      // d
  int stabilizer_length = 5; // n'
  // Advisory rate parameter carried with the config; no specific bound is
  // enforced on it.
  double min_distance_ratio = 0.0;

  // t = floor((d-1)/2), the number of withheld/decoy positions.
  int withheld_count() const { return (css_distance - 1) / 2; }
  int total_qubits() const { return css_length + withheld_count() * stabilizer_length; }
  void validate() const;

  bool operator==(const ChauParams&) const = default;
};

// Sealer-side private record: which CSS position was withheld, which decoy
// qubit fills its slot, the payload, and the preparation seed (everything
// needed to re-prepare the instance bit-exactly).
struct ChauSecret {
  int withheld_position = 0;
  int decoy_exposed_qubit = 0;
  SingleQubit message;
  std::uint64_t seed = 0;
};

// A sealed instance: the joint register, the public slot map, and the
// private remainder. Slot i presents itself to readers as CSS position i;
// the slot at the withheld position is physically the decoy qubit.
class ChauSealInstance {
 public:
  ChauSealInstance(ChauParams params, CssCodeSpec announced, QuantumState state,
                   std::vector<int> public_slots, std::vector<int> private_indices,
                   ChauSecret secret);

  const ChauParams& params() const { return params_; }
  const CssCodeSpec& announced_code() const { return announced_; }
  const std::vector<int>& public_slots() const { return public_slots_; }
  const std::vector<int>& private_indices() const { return private_indices_; }
  const ChauSecret& secret() const { return secret_; }
  // Register indices of decoy codeword `i` (creation layout; the exposed
  // qubit stays at its original index, so recombination is index lookup).
  std::vector<int> decoy_block(int i) const;

  QuantumState& state() { return state_; }
  const QuantumState& state() const { return state_; }

 private:
  ChauParams params_;
  CssCodeSpec announced_;
  QuantumState state_;
  std::vector<int> public_slots_;
  std::vector<int> private_indices_;
  ChauSecret secret_;
};

// Seals one message qubit. Draws the instance seed from `rng`; all
// preparation choices derive from that seed, so the instance can be
// re-prepared from its secret alone.
ChauSealInstance chau_seal(const SingleQubit& message, const ChauParams& params,
                           RandomStream& rng);

// Bit-exact fresh copy of the instance as it was at creation.
ChauSealInstance chau_reprepare(const ChauSealInstance& instance);

struct ChauReadResult {
  int bit = 0;
  // Set when the syndrome has no correctable explanation; the read is
  // abandoned rather than guessing a recovery.
  bool aborted = false;
  std::vector<int> syndrome;
};

// The canonical CSS read over the public slots only: measure all announced
// syndromes (the decoy registers as an error), apply the minimum-weight
// correction, measure logical Z. Takes no secret.
ChauReadResult chau_read_honest(ChauSealInstance& instance, RandomStream& rng);

struct ChauVerificationReport {
  // Per decoy codeword: n'-1 generator bits, then the logical-Z bit.
  std::vector<std::vector<int>> decoy_checks;
  // Optional CSS cross-check over the recombined CSS qubits (empty if off).
  std::vector<int> css_syndrome;
  Verdict verdict = Verdict::Sealed;
};

// Sealer-side verification: recombines each decoy codeword (public slot +
// private qubits) and measures its generators and logical Z. Broken iff any
// bit is nonzero. Untouched instances verify sealed with probability 1.
ChauVerificationReport chau_verify(ChauSealInstance& instance, RandomStream& rng,
                                   bool css_cross_check = false);

struct OpacityStats {
  long trials = 0;
  // ones[slot][basis]: count of outcome 1 (basis 0 = reading, 1 = hadamard).
  std::vector<std::array<long, 2>> ones;

  double frequency(int slot, Basis basis) const {
    return static_cast<double>(ones[static_cast<std::size_t>(slot)]
                                   [basis == Basis::Hadamard ? 1 : 0]) /
           static_cast<double>(trials);
  }
};

// Measures each public slot of fresh re-preparations of the instance in both
// bases, `trials` times. Every slot of a sealed instance is maximally mixed,
// so the decoy slot is statistically indistinguishable from genuine slots.
OpacityStats chau_is_opaque(const ChauSealInstance& instance, long trials, RandomStream& rng);

}  // namespace qseal
