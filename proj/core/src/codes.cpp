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

#include "qseal/codes.hpp"

#include <map>
#include <stdexcept>

namespace qseal {

namespace {

// Uniform internal handle over both spec flavors.
struct CodeView {
  int n, k, d;
  std::vector<PauliString> gens;
  PauliString logical_x, logical_z;
};

CodeView view(const CssCodeSpec& c) {
  return {c.n, c.k, c.d, c.generators(), c.logical_x, c.logical_z};
}
CodeView view(const StabilizerCodeSpec& c) {
  return {c.n, c.k, c.d, c.generator_list, c.logical_x, c.logical_z};
}

std::vector<int> support(std::uint32_t mask, int n) {
  std::vector<int> qubits;
  for (int q = 0; q < n; ++q)
    if (mask & (1u << q)) qubits.push_back(q);
  return qubits;
}

QuantumState encode_impl(const CodeView& code, const SingleQubit& logical) {
  if (code.k != 1) throw std::invalid_argument("encode: only k = 1 codes are supported");
  // Stabilizer group averaging: |0_L> is the normalized image of |0...0>
  // under prod_g (I+g)/2. |0...0> is a +1 eigenstate of the Z-type logical,
  // so the projection lands on logical |0>.
  QuantumState enc0 = QuantumState::basis_state(code.n, 0);
  for (const PauliString& g : code.gens) {
    QuantumState image = enc0;
    image.apply_pauli(g);
    enc0 = QuantumState::superpose(0.5, enc0, 0.5, image);
  }
  if (enc0.norm() < 1e-12)
    throw std::runtime_error("encode: |0...0> has no component in the codespace");
  enc0.renormalize();

  QuantumState enc1 = enc0;
  enc1.apply_pauli(code.logical_x);

  QuantumState out = QuantumState::superpose(logical.a0, enc0, logical.a1, enc1);
  out.renormalize();
  return out;
}

std::vector<int> syndrome_impl(QuantumState& state, const CodeView& code,
                               std::span<const int> block, RandomStream& rng) {
  if (static_cast<int>(block.size()) != code.n)
    throw std::invalid_argument("measure_syndrome: block size must equal code length");
  std::vector<int> bits;
  bits.reserve(code.gens.size());
  for (const PauliString& g : code.gens)
    bits.push_back(state.measure_pauli(g.embedded(state.num_qubits(), block), rng) > 0 ? 0 : 1);
  return bits;
}

std::uint32_t syndrome_key(std::span<const int> bits) {
  std::uint32_t key = 0;
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits[i]) key |= (1u << i);
  return key;
}

std::uint32_t syndrome_of(const CodeView& code, const PauliString& error) {
  std::uint32_t key = 0;
  for (std::size_t i = 0; i < code.gens.size(); ++i)
    if (!code.gens[i].commutes_with(error)) key |= (1u << i);
  return key;
}

// Minimum-weight lookup over all errors of weight <= floor((d-1)/2).
// Only weight-1 tables ship (both concrete codes have d = 3); the syndrome
// map is injective there, checked by tests.
std::map<std::uint32_t, PauliString> recovery_table(const CodeView& code) {
  std::map<std::uint32_t, PauliString> table;
  table.emplace(0u, PauliString::on_support(code.n, {}, Pauli::I));
  for (int q = 0; q < code.n; ++q) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      const PauliString err = PauliString::single(code.n, q, p);
      table.emplace(syndrome_of(code, err), err);
    }
  }
  return table;
}

Correction correct_impl(QuantumState& state, const CodeView& code, std::span<const int> block,
                        std::span<const int> syndrome) {
  if (static_cast<int>(block.size()) != code.n)
    throw std::invalid_argument("correct: block size must equal code length");
  if (syndrome.size() != code.gens.size())
    throw std::invalid_argument("correct: syndrome length must match generator count");
  const auto table = recovery_table(code);
  const auto it = table.find(syndrome_key(syndrome));
  if (it == table.end())
    return {false, PauliString::on_support(code.n, {}, Pauli::I)};
  if (it->second.weight() > 0)
    state.apply_pauli(it->second.embedded(state.num_qubits(), block));
  return {true, it->second};
}

int decode_impl(QuantumState& state, const CodeView& code, std::span<const int> block,
                RandomStream& rng) {
  if (static_cast<int>(block.size()) != code.n)
    throw std::invalid_argument("decode_logical_measure: block size must equal code length");
  return state.measure_pauli(code.logical_z.embedded(state.num_qubits(), block), rng) > 0 ? 0 : 1;
}

std::string symplectic_rows(const std::vector<PauliString>& gens) {
  std::string out;
  for (const PauliString& g : gens) {
    std::string xs, zs;
    for (int q = 0; q < g.num_qubits(); ++q) {
      const Pauli p = g.letter(q);
      xs += (p == Pauli::X || p == Pauli::Y) ? '1' : '0';
      zs += (p == Pauli::Z || p == Pauli::Y) ? '1' : '0';
    }
    out += xs + " " + zs + "\n";
  }
  return out;
}

}  // namespace

std::vector<PauliString> CssCodeSpec::generators() const {
  std::vector<PauliString> gens;
  gens.reserve(x_checks.size() + z_checks.size());
  for (std::uint32_t row : x_checks)
    gens.push_back(PauliString::on_support(n, support(row, n), Pauli::X));
  for (std::uint32_t row : z_checks)
    gens.push_back(PauliString::on_support(n, support(row, n), Pauli::Z));
  return gens;
}

std::string CssCodeSpec::check_matrix_text() const { return symplectic_rows(generators()); }

std::string StabilizerCodeSpec::check_matrix_text() const {
  return symplectic_rows(generator_list);
}

CssCodeSpec steane_code() {
  CssCodeSpec code;
  code.n = 7;
  code.k = 1;
  code.d = 3;
  // Hamming [7,4] parity checks; column q is the binary expansion of q+1,
  // row r is bit r. The Z-check syndrome of an X error at qubit q therefore
  // reads q+1 in binary.
  code.x_checks = {0x55, 0x66, 0x78};
  code.z_checks = {0x55, 0x66, 0x78};
  const std::vector<int> corner = {0, 1, 2};
  code.logical_x = PauliString::on_support(7, corner, Pauli::X);
  code.logical_z = PauliString::on_support(7, corner, Pauli::Z);
  return code;
}

StabilizerCodeSpec five_qubit_code() {
  StabilizerCodeSpec code;
  code.n = 5;
  code.k = 1;
  code.d = 3;
  code.generator_list = {
      PauliString::from_label("XZZXI"),
      PauliString::from_label("IXZZX"),
      PauliString::from_label("XIXZZ"),
      PauliString::from_label("ZXIXZ"),
  };
  code.logical_x = PauliString::from_label("XXXXX");
  code.logical_z = PauliString::from_label("ZZZZZ");
  return code;
}

int correctable_weight(int distance) { return (distance - 1) / 2; }

QuantumState encode(const CssCodeSpec& code, const SingleQubit& logical) {
  return encode_impl(view(code), logical);
}
QuantumState encode(const StabilizerCodeSpec& code, const SingleQubit& logical) {
  return encode_impl(view(code), logical);
}

std::vector<int> measure_syndrome(QuantumState& state, const CssCodeSpec& code,
                                  std::span<const int> block, RandomStream& rng) {
  return syndrome_impl(state, view(code), block, rng);
}
std::vector<int> measure_syndrome(QuantumState& state, const StabilizerCodeSpec& code,
                                  std::span<const int> block, RandomStream& rng) {
  return syndrome_impl(state, view(code), block, rng);
}

Correction correct(QuantumState& state, const CssCodeSpec& code, std::span<const int> block,
                   std::span<const int> syndrome) {
  return correct_impl(state, view(code), block, syndrome);
}
Correction correct(QuantumState& state, const StabilizerCodeSpec& code,
                   std::span<const int> block, std::span<const int> syndrome) {
  return correct_impl(state, view(code), block, syndrome);
}

int decode_logical_measure(QuantumState& state, const CssCodeSpec& code,
                           std::span<const int> block, RandomStream& rng) {
  return decode_impl(state, view(code), block, rng);
}
int decode_logical_measure(QuantumState& state, const StabilizerCodeSpec& code,
                           std::span<const int> block, RandomStream& rng) {
  return decode_impl(state, view(code), block, rng);
}

}  // namespace qseal
