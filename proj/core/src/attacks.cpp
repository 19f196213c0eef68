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

#include "qseal/attacks.hpp"

#include <bit>
#include <stdexcept>

namespace qseal {

AttackOutcome attack_measure_resend(SealedMessage& sealed, RandomStream& rng) {
  AttackOutcome outcome;
  outcome.strategy = "measure_resend";
  const int n = sealed.block_size();
  for (int b = 0; b < sealed.block_count(); ++b) {
    int ones = 0;
    for (int offset = 0; offset < n; ++offset)
      ones += sealed.block(b).measure_qubit(offset, Basis::Reading, rng);
    // Re-preparing the observed computational state is the identity on the
    // collapsed register; the damage is already done by the measurement.
    outcome.read_bits.push_back(2 * ones > n ? 1 : 0);
  }
  return outcome;
}

AttackOutcome attack_collective_majority(SealedMessage& sealed, RandomStream& rng) {
  if (sealed.block_size() % 2 == 0)
    throw std::invalid_argument("attack_collective_majority: block size must be odd");
  AttackOutcome outcome;
  outcome.strategy = "collective_majority";
  for (int b = 0; b < sealed.block_count(); ++b)
    outcome.read_bits.push_back(sealed.block(b).project_majority(rng));
  return outcome;
}

namespace {

// Classical Hamming decode of a 7-bit observed word: correct the position
// the parity checks point at, then read the logical parity.
int hamming_guess(const CssCodeSpec& code, const std::vector<int>& word) {
  int syndrome = 0;
  for (std::size_t row = 0; row < code.z_checks.size(); ++row) {
    int parity = 0;
    for (int q = 0; q < code.n; ++q)
      if (code.z_checks[row] & (1u << q)) parity ^= word[static_cast<std::size_t>(q)];
    if (parity) syndrome |= (1 << row);
  }
  std::vector<int> corrected = word;
  if (syndrome != 0 && syndrome <= code.n)
    corrected[static_cast<std::size_t>(syndrome - 1)] ^= 1;
  int logical = 0;
  for (int q = 0; q < code.n; ++q)
    if (code.logical_z.letter(q) == Pauli::Z) logical ^= corrected[static_cast<std::size_t>(q)];
  return logical;
}

}  // namespace

AttackOutcome attack_crude_read_chau(ChauSealInstance& instance, RandomStream& rng) {
  AttackOutcome outcome;
  outcome.strategy = "crude_read";
  std::vector<int> word;
  word.reserve(instance.public_slots().size());
  for (int reg_index : instance.public_slots())
    word.push_back(instance.state().measure_qubit(reg_index, Basis::Reading, rng));
  outcome.read_bits.push_back(hamming_guess(instance.announced_code(), word));
  return outcome;
}

}  // namespace qseal
