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
#include <span>
#include <string>
#include <vector>

#include "qseal/pauli.hpp"
#include "qseal/random.hpp"
#include "qseal/state.hpp"

namespace qseal {

// CSS code: separate X-type and Z-type parity checks, each row a bitmask
// over physical qubits (bit q = qubit q).
struct CssCodeSpec {
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<std::uint32_t> x_checks;
  std::vector<std::uint32_t> z_checks;
  PauliString logical_x;
  PauliString logical_z;

  // Generator order is fixed: X-checks in row order, then Z-checks. Syndromes
  // are bit-exact reproducible because of this.
  std::vector<PauliString> generators() const;

  // One generator per line as "x-bits z-bits" (symplectic halves).
  std::string check_matrix_text() const;
};

// General stabilizer code given directly by its generator list.
struct StabilizerCodeSpec {
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<PauliString> generator_list;
  PauliString logical_x;
  PauliString logical_z;

  const std::vector<PauliString>& generators() const { return generator_list; }
  std::string check_matrix_text() const;
};

// Steane [[7,1,3]]: Hamming [7,4] parity checks as both X- and Z-type
// generators; logical X and Z are weight-3 representatives on qubits {0,1,2}.
CssCodeSpec steane_code();

// Five-qubit [[5,1,3]] perfect code: the four cyclic shifts of XZZXI,
// logical Z = ZZZZZ.
StabilizerCodeSpec five_qubit_code();

// Number of correctable errors, floor((d-1)/2).
int correctable_weight(int distance);

// Encodes a 1-qubit logical state into the code's n physical qubits by
// stabilizer projection (product of (I+g)/2 applied to |0...0>, then the
// logical-X image for the |1> component). Output is a +1 eigenstate of every
// generator; encoding is linear in the logical amplitudes.
QuantumState encode(const CssCodeSpec& code, const SingleQubit& logical);
QuantumState encode(const StabilizerCodeSpec& code, const SingleQubit& logical);

// Projectively measures every generator over `block` (register qubit indices,
// block[i] = physical qubit i of the code), in the fixed generator order.
// Returns one bit per generator: 0 for outcome +1, 1 for -1.
std::vector<int> measure_syndrome(QuantumState& state, const CssCodeSpec& code,
                                  std::span<const int> block, RandomStream& rng);
std::vector<int> measure_syndrome(QuantumState& state, const StabilizerCodeSpec& code,
                                  std::span<const int> block, RandomStream& rng);

struct Correction {
  bool correctable = true;
  // The recovery that was applied (identity when none / not correctable).
  PauliString recovery;
};

// Applies the minimum-weight Pauli recovery consistent with `syndrome`.
// Syndromes with no explanation of weight <= floor((d-1)/2) are flagged
// uncorrectable and leave the state untouched.
Correction correct(QuantumState& state, const CssCodeSpec& code, std::span<const int> block,
                   std::span<const int> syndrome);
Correction correct(QuantumState& state, const StabilizerCodeSpec& code,
                   std::span<const int> block, std::span<const int> syndrome);

// Projective logical-Z readout: returns 0 for outcome +1, 1 for -1.
int decode_logical_measure(QuantumState& state, const CssCodeSpec& code,
                           std::span<const int> block, RandomStream& rng);
int decode_logical_measure(QuantumState& state, const StabilizerCodeSpec& code,
                           std::span<const int> block, RandomStream& rng);

}  // namespace qseal
