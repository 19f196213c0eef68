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

#include "qseal/pauli.hpp"

#include <stdexcept>

namespace qseal {

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString::PauliString(std::vector<Pauli> letters, int sign)
    : letters_(std::move(letters)), sign_(sign) {
  if (sign != +1 && sign != -1) throw std::invalid_argument("PauliString: sign must be +1 or -1");
}

PauliString PauliString::from_label(std::string_view label, int sign) {
  std::vector<Pauli> letters;
  letters.reserve(label.size());
  for (char c : label) {
    switch (c) {
      case 'I': letters.push_back(Pauli::I); break;
      case 'X': letters.push_back(Pauli::X); break;
      case 'Y': letters.push_back(Pauli::Y); break;
      case 'Z': letters.push_back(Pauli::Z); break;
      default: throw std::invalid_argument("PauliString: bad letter in label");
    }
  }
  return PauliString(std::move(letters), sign);
}

PauliString PauliString::single(int num_qubits, int qubit, Pauli p) {
  if (qubit < 0 || qubit >= num_qubits) throw std::out_of_range("PauliString: qubit out of range");
  std::vector<Pauli> letters(static_cast<std::size_t>(num_qubits), Pauli::I);
  letters[static_cast<std::size_t>(qubit)] = p;
  return PauliString(std::move(letters));
}

PauliString PauliString::on_support(int num_qubits, std::span<const int> qubits, Pauli p) {
  std::vector<Pauli> letters(static_cast<std::size_t>(num_qubits), Pauli::I);
  for (int q : qubits) {
    if (q < 0 || q >= num_qubits) throw std::out_of_range("PauliString: qubit out of range");
    letters[static_cast<std::size_t>(q)] = p;
  }
  return PauliString(std::move(letters));
}

int PauliString::weight() const {
  int w = 0;
  for (Pauli p : letters_)
    if (p != Pauli::I) ++w;
  return w;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.num_qubits() != num_qubits())
    throw std::invalid_argument("commutes_with: width mismatch");
  // Two Pauli strings commute iff they anticommute on an even number of sites.
  int anti = 0;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    const Pauli a = letters_[i];
    const Pauli b = other.letters_[i];
    if (a != Pauli::I && b != Pauli::I && a != b) ++anti;
  }
  return anti % 2 == 0;
}

PauliString PauliString::embedded(int register_qubits, std::span<const int> positions) const {
  if (positions.size() != letters_.size())
    throw std::invalid_argument("embedded: positions length must match operator width");
  std::vector<Pauli> letters(static_cast<std::size_t>(register_qubits), Pauli::I);
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const int q = positions[i];
    if (q < 0 || q >= register_qubits) throw std::out_of_range("embedded: position out of range");
    if (letters_[i] != Pauli::I) letters[static_cast<std::size_t>(q)] = letters_[i];
  }
  return PauliString(std::move(letters), sign_);
}

std::string PauliString::label() const {
  std::string s;
  s.reserve(letters_.size() + 1);
  s.push_back(sign_ > 0 ? '+' : '-');
  for (Pauli p : letters_) s.push_back(pauli_char(p));
  return s;
}

}  // namespace qseal
