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

// Test-only exact oracles. Everything here recomputes protocol statistics by
// direct linear algebra on raw amplitude vectors -- deliberately separate
// from the qseal_core code paths it is used to check. Branch probabilities
// are carried as unnormalized vectors (norm^2 = absolute probability), so no
// renormalization is ever needed.

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qseal/pauli.hpp"

namespace qseal::oracle {

using CVec = std::vector<std::complex<double>>;

// Qubit i is bit i of the index, matching the production convention.
CVec basis(int num_qubits, std::uint64_t index);
CVec kron(const CVec& low, const CVec& high);  // `high` occupies the upper bits
double norm2(const CVec& v);

void apply_h(CVec& v, int qubit);
void apply_cswap(CVec& v, int control, int a, int b);

// Pauli string as flip/phase masks.
struct PauliMasks {
  std::uint64_t flip = 0;   // X or Y sites
  std::uint64_t phase = 0;  // Z or Y sites
  int y_count = 0;
  int sign = +1;
};
PauliMasks masks_of(const PauliString& p);
PauliMasks masks_of(const PauliString& p, const std::vector<int>& positions, int width);
CVec apply_pauli(const CVec& v, const PauliMasks& m);

// (I + sign*P)/2 applied without normalization.
CVec project_pauli(const CVec& v, const PauliMasks& m, int sign);

// Unnormalized collapse onto bit b of `qubit`.
CVec project_qubit(const CVec& v, int qubit, int b);
// Removes `qubit`, which must be collapsed to bit b.
CVec drop_qubit(const CVec& v, int qubit, int b, int num_qubits);

// Exact probability that a chain of commuting Pauli checks all read +1.
double all_plus_probability(const CVec& v, const std::vector<PauliMasks>& checks);

// Exact probability that the SWAP-test verification of the listed qubits
// against the given reference states returns all-zero outcomes, enumerating
// every copy-measurement branch. `refs[i]` is the (a0, a1) pair for qubit
// `qubits[i]`.
double all_swap_pass_probability(const CVec& v, int num_qubits,
                                 const std::vector<int>& qubits,
                                 const std::vector<std::pair<std::complex<double>,
                                                             std::complex<double>>>& refs);

// Exact majority-vote read success for a basis-sealing block: m qubits carry
// bit b, the other N-m are uniform sealing qubits; ties resolve to 0.
double majority_success_exact(int block_size, int message_count, int bit);

}  // namespace qseal::oracle
