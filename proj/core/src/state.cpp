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

#include "qseal/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qseal {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

std::uint64_t bit_mask(int qubit) { return std::uint64_t{1} << qubit; }

void check_width(int num_qubits) {
  if (num_qubits < 0) throw std::invalid_argument("negative qubit count");
  if (num_qubits > kMaxDenseQubits)
    throw std::invalid_argument("register too wide for dense simulation");
}

}  // namespace

SingleQubit make_single_qubit(Amplitude a0, Amplitude a1) {
  const double n = std::norm(a0) + std::norm(a1);
  if (std::abs(n - 1.0) > kNormTolerance)
    throw std::invalid_argument("single-qubit amplitudes are not normalized");
  return SingleQubit{a0, a1};
}

namespace states {
SingleQubit zero() { return {1.0, 0.0}; }
SingleQubit one() { return {0.0, 1.0}; }
SingleQubit plus() { return {kInvSqrt2, kInvSqrt2}; }
SingleQubit minus() { return {kInvSqrt2, -kInvSqrt2}; }
SingleQubit bit(int b) { return b ? one() : zero(); }
}  // namespace states

QuantumState::QuantumState() : num_qubits_(0), amps_{Amplitude{1.0, 0.0}} {}

QuantumState QuantumState::basis_state(int num_qubits, std::uint64_t index) {
  check_width(num_qubits);
  QuantumState s;
  s.num_qubits_ = num_qubits;
  s.amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  if (index >= s.amps_.size()) throw std::out_of_range("basis_state: index out of range");
  s.amps_[index] = Amplitude{1.0, 0.0};
  return s;
}

QuantumState QuantumState::from_amplitudes(int num_qubits, std::vector<Amplitude> amplitudes) {
  check_width(num_qubits);
  if (amplitudes.size() != (std::size_t{1} << num_qubits))
    throw std::invalid_argument("from_amplitudes: length must be 2^num_qubits");
  QuantumState s;
  s.num_qubits_ = num_qubits;
  s.amps_ = std::move(amplitudes);
  return s;
}

double QuantumState::norm() const {
  double n = 0.0;
  for (const Amplitude& a : amps_) n += std::norm(a);
  return std::sqrt(n);
}

void QuantumState::renormalize() {
  const double n = norm();
  if (n <= 0.0) throw std::runtime_error("cannot renormalize a zero state");
  const double inv = 1.0 / n;
  for (Amplitude& a : amps_) a *= inv;
}

void QuantumState::check_targets(std::span<const int> targets, std::size_t expected) const {
  if (targets.size() != expected) throw std::invalid_argument("gate: wrong target count");
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] < 0 || targets[i] >= num_qubits_)
      throw std::out_of_range("gate: target out of range");
    for (std::size_t j = i + 1; j < targets.size(); ++j)
      if (targets[i] == targets[j]) throw std::invalid_argument("gate: duplicate targets");
  }
}

void QuantumState::apply(Gate gate, std::initializer_list<int> targets) {
  apply(gate, std::span<const int>(targets.begin(), targets.size()));
}

void QuantumState::apply(Gate gate, std::span<const int> targets) {
  switch (gate) {
    case Gate::H: {
      check_targets(targets, 1);
      const std::uint64_t m = bit_mask(targets[0]);
      for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        if (i & m) continue;
        const Amplitude lo = amps_[i];
        const Amplitude hi = amps_[i | m];
        amps_[i] = kInvSqrt2 * (lo + hi);
        amps_[i | m] = kInvSqrt2 * (lo - hi);
      }
      break;
    }
    case Gate::X: {
      check_targets(targets, 1);
      const std::uint64_t m = bit_mask(targets[0]);
      for (std::uint64_t i = 0; i < amps_.size(); ++i)
        if (!(i & m)) std::swap(amps_[i], amps_[i | m]);
      break;
    }
    case Gate::Z: {
      check_targets(targets, 1);
      const std::uint64_t m = bit_mask(targets[0]);
      for (std::uint64_t i = 0; i < amps_.size(); ++i)
        if (i & m) amps_[i] = -amps_[i];
      break;
    }
    case Gate::Cnot: {
      check_targets(targets, 2);
      const std::uint64_t c = bit_mask(targets[0]);
      const std::uint64_t t = bit_mask(targets[1]);
      for (std::uint64_t i = 0; i < amps_.size(); ++i)
        if ((i & c) && !(i & t)) std::swap(amps_[i], amps_[i | t]);
      break;
    }
    case Gate::Cswap: {
      check_targets(targets, 3);
      const std::uint64_t c = bit_mask(targets[0]);
      const std::uint64_t a = bit_mask(targets[1]);
      const std::uint64_t b = bit_mask(targets[2]);
      for (std::uint64_t i = 0; i < amps_.size(); ++i)
        if ((i & c) && (i & a) && !(i & b)) std::swap(amps_[i], amps_[(i ^ a) | b]);
      break;
    }
  }
}

namespace {

// Mask form of a signed Pauli string. Per-site action: X |b> = |1-b>,
// Z |b> = (-1)^b |b>, Y |b> = i(-1)^b |1-b>.
struct PauliMasks {
  std::uint64_t flip = 0;   // X or Y sites
  std::uint64_t phase = 0;  // Z or Y sites
  Amplitude global{1.0, 0.0};
};

PauliMasks masks_of(const PauliString& op) {
  PauliMasks m;
  int y_count = 0;
  for (int q = 0; q < op.num_qubits(); ++q) {
    switch (op.letter(q)) {
      case Pauli::I: break;
      case Pauli::X: m.flip |= bit_mask(q); break;
      case Pauli::Y: m.flip |= bit_mask(q); m.phase |= bit_mask(q); ++y_count; break;
      case Pauli::Z: m.phase |= bit_mask(q); break;
    }
  }
  static constexpr Amplitude kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  m.global = static_cast<double>(op.sign()) * kIPow[y_count % 4];
  return m;
}

double phase_sign(std::uint64_t index, std::uint64_t phase_mask) {
  return (std::popcount(index & phase_mask) % 2) ? -1.0 : 1.0;
}

}  // namespace

void QuantumState::apply_pauli(const PauliString& op) {
  if (op.num_qubits() != num_qubits_) throw std::invalid_argument("apply_pauli: width mismatch");
  const PauliMasks m = masks_of(op);
  if (m.flip == 0) {
    for (std::uint64_t i = 0; i < amps_.size(); ++i)
      amps_[i] *= m.global * phase_sign(i, m.phase);
    return;
  }
  // In place over (i, i^flip) pairs, visiting each once.
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    const std::uint64_t j = i ^ m.flip;
    if (j < i) continue;
    const Amplitude vi = amps_[i];
    amps_[i] = m.global * phase_sign(j, m.phase) * amps_[j];
    amps_[j] = m.global * phase_sign(i, m.phase) * vi;
  }
}

double QuantumState::probability_one(int qubit, Basis basis) const {
  if (qubit < 0 || qubit >= num_qubits_) throw std::out_of_range("qubit out of range");
  if (basis == Basis::Hadamard) {
    QuantumState rotated = *this;
    rotated.apply(Gate::H, {qubit});
    return rotated.probability_one(qubit, Basis::Reading);
  }
  const std::uint64_t m = bit_mask(qubit);
  double p = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if (i & m) p += std::norm(amps_[i]);
  return p;
}

int QuantumState::measure_qubit(int qubit, Basis basis, RandomStream& rng) {
  if (qubit < 0 || qubit >= num_qubits_) throw std::out_of_range("qubit out of range");
  if (basis == Basis::Hadamard) {
    // Measuring in {|+>, |->} is H-conjugated reading-basis measurement;
    // the closing H restores the eigenstate of the projected outcome.
    apply(Gate::H, {qubit});
    const int bit = measure_qubit(qubit, Basis::Reading, rng);
    apply(Gate::H, {qubit});
    return bit;
  }
  const std::uint64_t m = bit_mask(qubit);
  const double p1 = probability_one(qubit);
  // Probability-0 branches are never selected; this also makes immediate
  // re-measurement exactly repeatable.
  int bit;
  if (p1 >= 1.0 - kNormTolerance) {
    bit = 1;
  } else if (p1 <= kNormTolerance) {
    bit = 0;
  } else {
    bit = rng.next_double() < p1 ? 1 : 0;
  }
  const std::uint64_t keep = bit ? m : 0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if ((i & m) != keep) amps_[i] = Amplitude{0.0, 0.0};
  renormalize();
  return bit;
}

std::vector<int> QuantumState::measure_qubits(std::span<const int> qubits, Basis basis,
                                              RandomStream& rng) {
  for (std::size_t i = 0; i < qubits.size(); ++i)
    for (std::size_t j = i + 1; j < qubits.size(); ++j)
      if (qubits[i] == qubits[j]) throw std::invalid_argument("measure_qubits: duplicate indices");
  std::vector<int> bits;
  bits.reserve(qubits.size());
  for (int q : qubits) bits.push_back(measure_qubit(q, basis, rng));
  return bits;
}

double QuantumState::expectation_pauli(const PauliString& op) const {
  if (op.num_qubits() != num_qubits_)
    throw std::invalid_argument("expectation_pauli: width mismatch");
  const PauliMasks m = masks_of(op);
  // <psi|P|psi> = sum_i conj(psi_{i^flip}) * global * ph(i) * psi_i.
  Amplitude acc{0.0, 0.0};
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    acc += std::conj(amps_[i ^ m.flip]) * (m.global * phase_sign(i, m.phase)) * amps_[i];
  return acc.real();
}

int QuantumState::measure_pauli(const PauliString& op, RandomStream& rng) {
  if (op.num_qubits() != num_qubits_) throw std::invalid_argument("measure_pauli: width mismatch");
  const double expect = expectation_pauli(op);
  const double p_plus = std::clamp(0.5 * (1.0 + expect), 0.0, 1.0);
  // Probability-0 branches are never selected.
  int outcome;
  if (p_plus >= 1.0 - kNormTolerance) {
    outcome = +1;
  } else if (p_plus <= kNormTolerance) {
    outcome = -1;
  } else {
    outcome = rng.next_double() < p_plus ? +1 : -1;
  }
  // Project with (I + outcome*P)/2, in place over (i, i^flip) pairs.
  const PauliMasks m = masks_of(op);
  const Amplitude g = (outcome > 0 ? 1.0 : -1.0) * m.global;
  if (m.flip == 0) {
    for (std::uint64_t i = 0; i < amps_.size(); ++i)
      amps_[i] = 0.5 * (amps_[i] + g * phase_sign(i, m.phase) * amps_[i]);
  } else {
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
      const std::uint64_t j = i ^ m.flip;
      if (j < i) continue;
      const Amplitude vi = amps_[i];
      const Amplitude vj = amps_[j];
      amps_[i] = 0.5 * (vi + g * phase_sign(j, m.phase) * vj);
      amps_[j] = 0.5 * (vj + g * phase_sign(i, m.phase) * vi);
    }
  }
  renormalize();
  return outcome;
}

int QuantumState::measure_diagonal(const std::function<bool(std::uint64_t)>& predicate,
                                   RandomStream& rng) {
  double p1 = 0.0;
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if (predicate(i)) p1 += std::norm(amps_[i]);
  p1 = std::clamp(p1, 0.0, 1.0);
  int bit;
  if (p1 >= 1.0 - kNormTolerance) {
    bit = 1;
  } else if (p1 <= kNormTolerance) {
    bit = 0;
  } else {
    bit = rng.next_double() < p1 ? 1 : 0;
  }
  for (std::uint64_t i = 0; i < amps_.size(); ++i)
    if (predicate(i) != (bit == 1)) amps_[i] = Amplitude{0.0, 0.0};
  renormalize();
  return bit;
}

int QuantumState::swap_test(int qubit_a, int qubit_b, int ancilla, RandomStream& rng) {
  if (qubit_a == qubit_b || qubit_a == ancilla || qubit_b == ancilla)
    throw std::invalid_argument("swap_test: indices must be distinct");
  if (probability_one(ancilla) > kNormTolerance)
    throw std::invalid_argument("swap_test: ancilla must be prepared in |0>");
  apply(Gate::H, {ancilla});
  apply(Gate::Cswap, {ancilla, qubit_a, qubit_b});
  apply(Gate::H, {ancilla});
  return measure_qubit(ancilla, Basis::Reading, rng);
}

void QuantumState::append_qubit(const SingleQubit& q) {
  check_width(num_qubits_ + 1);
  const std::size_t dim = amps_.size();
  amps_.resize(dim * 2);
  for (std::size_t i = 0; i < dim; ++i) {
    amps_[dim + i] = amps_[i] * q.a1;
    amps_[i] *= q.a0;
  }
  ++num_qubits_;
}

int QuantumState::measure_and_remove(int qubit, RandomStream& rng) {
  const int bit = measure_qubit(qubit, Basis::Reading, rng);
  const std::uint64_t m = bit_mask(qubit);
  const std::uint64_t low = m - 1;
  std::vector<Amplitude> out(amps_.size() / 2);
  for (std::uint64_t j = 0; j < out.size(); ++j) {
    const std::uint64_t src = ((j & ~low) << 1) | (bit ? m : 0) | (j & low);
    out[j] = amps_[src];
  }
  amps_ = std::move(out);
  --num_qubits_;
  renormalize();
  return bit;
}

QuantumState QuantumState::tensor(const QuantumState& other) const {
  check_width(num_qubits_ + other.num_qubits_);
  QuantumState out;
  out.num_qubits_ = num_qubits_ + other.num_qubits_;
  out.amps_.assign(amps_.size() * other.amps_.size(), Amplitude{0.0, 0.0});
  for (std::size_t hi = 0; hi < other.amps_.size(); ++hi) {
    if (other.amps_[hi] == Amplitude{0.0, 0.0}) continue;
    for (std::size_t lo = 0; lo < amps_.size(); ++lo)
      out.amps_[(hi << num_qubits_) | lo] = other.amps_[hi] * amps_[lo];
  }
  return out;
}

QuantumState QuantumState::superpose(Amplitude c0, const QuantumState& a, Amplitude c1,
                                     const QuantumState& b) {
  if (a.num_qubits_ != b.num_qubits_)
    throw std::invalid_argument("superpose: dimension mismatch");
  QuantumState out = a;
  for (std::size_t i = 0; i < out.amps_.size(); ++i)
    out.amps_[i] = c0 * a.amps_[i] + c1 * b.amps_[i];
  return out;
}

std::string QuantumState::dump() const {
  std::string out;
  char line[80];
  for (std::uint64_t i = 0; i < amps_.size(); ++i) {
    if (std::norm(amps_[i]) <= 1e-24) continue;
    std::snprintf(line, sizeof line, "%llu %.12g %.12g\n",
                  static_cast<unsigned long long>(i), amps_[i].real(), amps_[i].imag());
    out += line;
  }
  return out;
}

QuantumState prepare_product(std::span<const SingleQubit> specs) {
  check_width(static_cast<int>(specs.size()));
  QuantumState s;
  for (const SingleQubit& q : specs) {
    // Re-validate: callers may aggregate amplitudes from outside make_single_qubit.
    const double n = std::norm(q.a0) + std::norm(q.a1);
    if (std::abs(n - 1.0) > kNormTolerance)
      throw std::invalid_argument("prepare_product: non-normalized qubit spec");
    s.append_qubit(q);
  }
  return s;
}

QuantumState prepare_product(std::initializer_list<SingleQubit> specs) {
  return prepare_product(std::span<const SingleQubit>(specs.begin(), specs.size()));
}

Amplitude inner_product(const QuantumState& a, const QuantumState& b) {
  if (a.num_qubits() != b.num_qubits())
    throw std::invalid_argument("inner_product: dimension mismatch");
  Amplitude acc{0.0, 0.0};
  const auto av = a.amplitudes();
  const auto bv = b.amplitudes();
  for (std::size_t i = 0; i < av.size(); ++i) acc += std::conj(av[i]) * bv[i];
  return acc;
}

double fidelity(const QuantumState& a, const QuantumState& b) {
  return std::norm(inner_product(a, b));
}

QuantumState to_state(const SingleQubit& q) {
  return prepare_product({q});
}

}  // namespace qseal
