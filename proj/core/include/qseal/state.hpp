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

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qseal/pauli.hpp"
#include "qseal/random.hpp"

namespace qseal {

using Amplitude = std::complex<double>;

// Norm / fidelity tolerance used throughout; double precision leaves ample
// headroom at the register sizes simulated here.
inline constexpr double kNormTolerance = 1e-9;

// Dense simulation is refused beyond this width (16 MiB of amplitudes).
// The protocols target registers of at most 16 qubits.
inline constexpr int kMaxDenseQubits = 20;

// A normalized single-qubit pure state.
struct SingleQubit {
  Amplitude a0{1.0, 0.0};
  Amplitude a1{0.0, 0.0};
};

// Validates normalization within kNormTolerance.
SingleQubit make_single_qubit(Amplitude a0, Amplitude a1);

namespace states {
SingleQubit zero();
SingleQubit one();
SingleQubit plus();
SingleQubit minus();
// Computational basis bit -> |0> or |1>.
SingleQubit bit(int b);
}  // namespace states

enum class Gate { H, X, Z, Cnot, Cswap };

// Reading basis = computational; Hadamard basis = {|+>, |->}. A Hadamard
// basis outcome of 0 means "+".
enum class Basis { Reading, Hadamard };

// Dense pure state over n qubits. Qubit i is bit i of the basis-state index
// (least significant bit = qubit 0). All mutating operations renormalize, so
// the L2 norm stays within kNormTolerance of 1.
class QuantumState {
 public:
  // Zero-qubit register: a single amplitude of 1 (identity under tensor).
  QuantumState();

  static QuantumState basis_state(int num_qubits, std::uint64_t index);

  // Adopts a full amplitude vector (length must be 2^num_qubits); the
  // caller is responsible for normalization (renormalize() if unsure).
  static QuantumState from_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude amplitude(std::uint64_t index) const { return amps_[index]; }

  double norm() const;
  void renormalize();

  // -- gates ----------------------------------------------------------------

  // targets: H/X/Z take one qubit, Cnot takes {control, target},
  // Cswap takes {control, a, b}. Indices must be distinct and in range.
  void apply(Gate gate, std::span<const int> targets);
  void apply(Gate gate, std::initializer_list<int> targets);

  // Applies a signed Pauli string (Y phases included).
  void apply_pauli(const PauliString& op);

  // -- measurement ----------------------------------------------------------

  // Marginal probability that `qubit` reads 1 in the given basis.
  double probability_one(int qubit, Basis basis = Basis::Reading) const;

  // Born-rule projective measurement; collapses and renormalizes. Repeating
  // the same measurement immediately yields the same bit.
  int measure_qubit(int qubit, Basis basis, RandomStream& rng);
  std::vector<int> measure_qubits(std::span<const int> qubits, Basis basis, RandomStream& rng);

  // <psi| P |psi>; real for any signed Pauli string.
  double expectation_pauli(const PauliString& op) const;

  // Projective measurement of a Pauli observable: returns +1 or -1, leaves
  // the state projected with (I +- P)/2 and renormalized. Eigenstates are
  // returned unchanged.
  int measure_pauli(const PauliString& op, RandomStream& rng);

  // SWAP test: H on ancilla, CSWAP(ancilla; a, b), H, measure ancilla.
  // For product inputs P(bit = 1) = (1 - |<psi_a|psi_b>|^2) / 2. The ancilla
  // must be in |0> and is consumed (measured).
  int swap_test(int qubit_a, int qubit_b, int ancilla, RandomStream& rng);

  // Two-outcome projective measurement of an observable diagonal in the
  // reading basis: outcome 1 keeps exactly the basis states selected by the
  // predicate. Collapses and renormalizes.
  int measure_diagonal(const std::function<bool(std::uint64_t)>& predicate, RandomStream& rng);

  // -- register surgery -----------------------------------------------------

  // Appends one qubit as the new highest index.
  void append_qubit(const SingleQubit& q);

  // Measures `qubit` in the reading basis and removes it from the register.
  int measure_and_remove(int qubit, RandomStream& rng);

  // Tensor product; `other` occupies the higher qubit indices.
  QuantumState tensor(const QuantumState& other) const;

  // c0*a + c1*b, not normalized. Widths must match.
  static QuantumState superpose(Amplitude c0, const QuantumState& a, Amplitude c1,
                                const QuantumState& b);

  // Debug dump: "index re im" per nonzero amplitude, sorted by index,
  // 12 significant digits.
  std::string dump() const;

  bool operator==(const QuantumState&) const = default;

 private:
  void check_targets(std::span<const int> targets, std::size_t expected) const;

  int num_qubits_ = 0;
  std::vector<Amplitude> amps_;
};

// Tensor product of single-qubit states; qubit i of the result is specs[i].
QuantumState prepare_product(std::span<const SingleQubit> specs);
QuantumState prepare_product(std::initializer_list<SingleQubit> specs);

// <a|b>, conjugate-linear in the first argument. Widths must match.
Amplitude inner_product(const QuantumState& a, const QuantumState& b);

// |<a|b>|^2.
double fidelity(const QuantumState& a, const QuantumState& b);

QuantumState to_state(const SingleQubit& q);

}  // namespace qseal
