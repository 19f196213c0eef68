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
#include <string_view>
#include <vector>

namespace qseal {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);

// Signed Pauli operator on a fixed-width register: sign in {+1, -1} times a
// tensor product of I/X/Y/Z letters, one per qubit. Carrier for stabilizer
// generators, logical operators and correction frames.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> letters, int sign = +1);

  // Parses e.g. "XZZXI"; length fixes the register width.
  static PauliString from_label(std::string_view label, int sign = +1);
  // Single-letter operator: `p` on `qubit`, identity elsewhere.
  static PauliString single(int num_qubits, int qubit, Pauli p);
  // Same letter on every listed qubit.
  static PauliString on_support(int num_qubits, std::span<const int> qubits, Pauli p);

  int num_qubits() const { return static_cast<int>(letters_.size()); }
  int sign() const { return sign_; }
  Pauli letter(int qubit) const { return letters_[static_cast<std::size_t>(qubit)]; }
  const std::vector<Pauli>& letters() const { return letters_; }

  // Number of non-identity letters.
  int weight() const;

  bool commutes_with(const PauliString& other) const;

  // Reinterprets this string, defined on `positions.size()` qubits, as an
  // operator on a `register_qubits`-wide register with letter i placed at
  // positions[i] and identity elsewhere.
  PauliString embedded(int register_qubits, std::span<const int> positions) const;

  // "+XZZXI" / "-ZZZZZ".
  std::string label() const;

  bool operator==(const PauliString&) const = default;

 private:
  std::vector<Pauli> letters_;
  int sign_ = +1;
};

}  // namespace qseal
