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

#include <string>
#include <vector>

#include "qseal/random.hpp"
#include "qseal/seal_chau.hpp"
#include "qseal/seal_mub.hpp"

namespace qseal {

// Result of an adversarial read. Attacks mutate the register they are given
// (the post-attack state stays normalized and available for verification)
// and never see seal secrets, only public structure.
struct AttackOutcome {
  std::string strategy;
  std::vector<int> read_bits;
  // Filled by harnesses that know the ground truth; attacks leave it empty.
  std::vector<bool> per_block_success;
  bool aborted = false;
};

// Measure every qubit in the reading basis and resend the observed
// computational states (the only clone available after measurement).
// Reads perfectly for m > N/2 but leaves every sealing qubit collapsed.
AttackOutcome attack_measure_resend(SealedMessage& sealed, RandomStream& rng);

// Collective block measurement: projects each block onto the span of
// reading-basis states whose majority bit is 0 or 1. For m > N/2 the block
// state lies entirely inside one majority subspace, so the read is perfect
// and the state is untouched; minority-fraction blocks are disturbed.
// Requires odd N.
AttackOutcome attack_collective_majority(SealedMessage& sealed, RandomStream& rng);

// Baseline adversary for the quantum-payload scheme: measures all public
// slots in the reading basis and decodes the observed word classically
// against the announced parity checks.
AttackOutcome attack_crude_read_chau(ChauSealInstance& instance, RandomStream& rng);

}  // namespace qseal
