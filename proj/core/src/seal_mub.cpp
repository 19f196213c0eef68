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

#include "qseal/seal_mub.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qseal {

void MubSealParams::validate() const {
  if (block_size < 1) throw std::invalid_argument("block_size must be positive");
  if (message_count < 1 || message_count > block_size)
    throw std::invalid_argument("message_count must satisfy 1 <= m <= N");
  if (sealing_basis != Basis::Hadamard)
    throw std::invalid_argument("only the Hadamard sealing basis is supported");
}

MubSealParams MubSealParams::ss(int block_size, int message_count) {
  MubSealParams p{block_size, message_count, Basis::Hadamard};
  p.validate();
  if (2 * message_count >= block_size)
    throw std::invalid_argument("minority-fraction preset requires m/N < 1/2");
  return p;
}

SingleQubit SealSecret::prepared_state(int block, int offset) const {
  const BlockSecret& bs = blocks.at(static_cast<std::size_t>(block));
  for (int role = 0; role < params.block_size; ++role) {
    if (bs.perm[static_cast<std::size_t>(role)] != offset) continue;
    if (role < params.message_count) return states::bit(bs.bit);
    const int value = bs.sealing_values[static_cast<std::size_t>(role - params.message_count)];
    return value ? states::minus() : states::plus();
  }
  throw std::out_of_range("prepared_state: offset not in block");
}

bool SealSecret::is_sealing_qubit(int block, int offset) const {
  const BlockSecret& bs = blocks.at(static_cast<std::size_t>(block));
  for (int role = 0; role < params.block_size; ++role)
    if (bs.perm[static_cast<std::size_t>(role)] == offset) return role >= params.message_count;
  throw std::out_of_range("is_sealing_qubit: offset not in block");
}

SealedBlock::SealedBlock(std::vector<SingleQubit> factors) : factors_(std::move(factors)) {}

SealedBlock SealedBlock::from_dense(QuantumState state) {
  SealedBlock b{{}};
  b.factors_.clear();
  b.dense_ = std::move(state);
  return b;
}

int SealedBlock::num_qubits() const {
  return dense_ ? dense_->num_qubits() : static_cast<int>(factors_.size());
}

const std::vector<SingleQubit>& SealedBlock::factors() const {
  if (dense_) throw std::logic_error("factors(): block is entangled");
  return factors_;
}

QuantumState& SealedBlock::densify() {
  if (!dense_) {
    dense_ = prepare_product(factors_);
    factors_.clear();
  }
  return *dense_;
}

QuantumState SealedBlock::to_dense() const {
  return dense_ ? *dense_ : prepare_product(factors_);
}

int SealedBlock::measure_qubit(int offset, Basis basis, RandomStream& rng) {
  if (offset < 0 || offset >= num_qubits()) throw std::out_of_range("block offset out of range");
  if (dense_) return dense_->measure_qubit(offset, basis, rng);
  QuantumState one = to_state(factors_[static_cast<std::size_t>(offset)]);
  const int bit = one.measure_qubit(0, basis, rng);
  factors_[static_cast<std::size_t>(offset)] = SingleQubit{one.amplitude(0), one.amplitude(1)};
  return bit;
}

int SealedBlock::swap_test_against(int offset, const SingleQubit& reference, RandomStream& rng) {
  if (offset < 0 || offset >= num_qubits()) throw std::out_of_range("block offset out of range");
  if (dense_) {
    QuantumState& s = *dense_;
    const int copy = s.num_qubits();
    const int ancilla = copy + 1;
    s.append_qubit(reference);
    s.append_qubit(states::zero());
    const int bit = s.swap_test(offset, copy, ancilla, rng);
    s.measure_and_remove(ancilla, rng);
    s.measure_and_remove(copy, rng);
    return bit;
  }
  // Product block: the test only ever entangles the tested qubit with its
  // copy, and the copy is measured out immediately, so the block stays a
  // product state with an updated single-qubit factor.
  QuantumState mini = prepare_product({factors_[static_cast<std::size_t>(offset)], reference,
                                       states::zero()});
  const int bit = mini.swap_test(0, 1, 2, rng);
  mini.measure_and_remove(2, rng);
  mini.measure_and_remove(1, rng);
  factors_[static_cast<std::size_t>(offset)] = SingleQubit{mini.amplitude(0), mini.amplitude(1)};
  return bit;
}

int SealedBlock::project_majority(RandomStream& rng) {
  const int n = num_qubits();
  if (n % 2 == 0) throw std::invalid_argument("project_majority: block size must be odd");
  QuantumState& s = densify();
  return s.measure_diagonal(
      [n](std::uint64_t index) { return 2 * std::popcount(index) > n; }, rng);
}

SealedMessage::SealedMessage(MubSealParams params, std::vector<SealedBlock> blocks)
    : params_(params), blocks_(std::move(blocks)) {
  params_.validate();
  for (const SealedBlock& b : blocks_)
    if (b.num_qubits() != params_.block_size)
      throw std::invalid_argument("SealedMessage: block width mismatch");
}

std::pair<int, int> SealedMessage::locate(int global_index) const {
  if (global_index < 0 || global_index >= total_qubits())
    throw std::out_of_range("qubit index out of range");
  return {global_index / block_size(), global_index % block_size()};
}

namespace {

std::vector<SingleQubit> block_factors(const MubSealParams& params, const BlockSecret& bs) {
  std::vector<SingleQubit> factors(static_cast<std::size_t>(params.block_size));
  for (int role = 0; role < params.block_size; ++role) {
    const int offset = bs.perm[static_cast<std::size_t>(role)];
    if (role < params.message_count) {
      factors[static_cast<std::size_t>(offset)] = states::bit(bs.bit);
    } else {
      const int value = bs.sealing_values[static_cast<std::size_t>(role - params.message_count)];
      factors[static_cast<std::size_t>(offset)] = value ? states::minus() : states::plus();
    }
  }
  return factors;
}

}  // namespace

std::pair<SealedMessage, SealSecret> seal_bits(std::span<const int> bits,
                                               const MubSealParams& params, RandomStream& rng) {
  params.validate();
  SealSecret secret;
  secret.params = params;
  secret.seed = rng.seed();
  std::vector<SealedBlock> blocks;
  blocks.reserve(bits.size());
  for (int bit : bits) {
    if (bit != 0 && bit != 1) throw std::invalid_argument("seal_bits: bits must be 0 or 1");
    BlockSecret bs;
    bs.bit = bit;
    // Draw order per block is fixed: permutation, then sealing values.
    bs.perm = random_permutation(params.block_size, rng);
    bs.sealing_values.reserve(static_cast<std::size_t>(params.sealing_count()));
    for (int i = 0; i < params.sealing_count(); ++i)
      bs.sealing_values.push_back(rng.next_bit() ? 1 : 0);
    blocks.emplace_back(block_factors(params, bs));
    secret.blocks.push_back(std::move(bs));
  }
  return {SealedMessage(params, std::move(blocks)), std::move(secret)};
}

ReadResult read_majority(SealedMessage& sealed, RandomStream& rng) {
  const int n = sealed.block_size();
  ReadResult result;
  result.bits.reserve(static_cast<std::size_t>(sealed.block_count()));
  result.ties.reserve(static_cast<std::size_t>(sealed.block_count()));
  for (int b = 0; b < sealed.block_count(); ++b) {
    int ones = 0;
    for (int offset = 0; offset < n; ++offset)
      ones += sealed.block(b).measure_qubit(offset, Basis::Reading, rng);
    const bool tie = (2 * ones == n);
    result.bits.push_back(2 * ones > n ? 1 : 0);
    result.ties.push_back(tie);
  }
  return result;
}

SingleQubit reference_state(const SealSecret& secret, int global_index) {
  const int n = secret.params.block_size;
  if (global_index < 0 || global_index >= n * secret.block_count())
    throw std::out_of_range("reference_state: index out of range");
  return secret.prepared_state(global_index / n, global_index % n);
}

VerificationReport verify(SealedMessage& sealed, const SealSecret& secret,
                          std::span<const int> test_indices, RandomStream& rng) {
  if (secret.params != sealed.params() || secret.block_count() != sealed.block_count())
    throw std::invalid_argument("verify: secret does not match message");
  std::vector<int> indices(test_indices.begin(), test_indices.end());
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw std::invalid_argument("verify: duplicate test indices");
  if (static_cast<int>(indices.size()) >= sealed.total_qubits())
    throw std::invalid_argument("verify: test indices must form a proper subset");

  VerificationReport report;
  report.tested_indices = indices;
  for (int index : indices) {
    const auto [blk, offset] = sealed.locate(index);
    const SingleQubit ref = secret.prepared_state(blk, offset);
    const int bit = sealed.block(blk).swap_test_against(offset, ref, rng);
    report.outcomes.push_back(bit);
    if (secret.is_sealing_qubit(blk, offset))
      ++report.tested_sealing;
    else
      ++report.tested_message;
  }
  const bool any = std::any_of(report.outcomes.begin(), report.outcomes.end(),
                               [](int b) { return b != 0; });
  report.verdict = any ? Verdict::Broken : Verdict::Sealed;
  report.detection_power = detection_power(report.tested_sealing);
  return report;
}

VerificationReport verify_all(SealedMessage& sealed, const SealSecret& secret,
                              RandomStream& rng) {
  const int total = sealed.total_qubits();
  if (total == 0) return {};
  if (total == 1)
    throw std::invalid_argument("verify_all: single-qubit registers cannot be fully tested");
  // Two passes, each a proper subset, jointly covering every index.
  std::vector<int> first, second;
  for (int i = 0; i + 1 < total; ++i) first.push_back(i);
  second.push_back(total - 1);
  VerificationReport a = verify(sealed, secret, first, rng);
  const VerificationReport b = verify(sealed, secret, second, rng);
  a.tested_indices.insert(a.tested_indices.end(), b.tested_indices.begin(),
                          b.tested_indices.end());
  a.outcomes.insert(a.outcomes.end(), b.outcomes.begin(), b.outcomes.end());
  a.tested_sealing += b.tested_sealing;
  a.tested_message += b.tested_message;
  a.verdict = (a.verdict == Verdict::Broken || b.verdict == Verdict::Broken) ? Verdict::Broken
                                                                             : Verdict::Sealed;
  a.detection_power = detection_power(a.tested_sealing);
  return a;
}

double detection_power(int tested_sealing_qubits) {
  if (tested_sealing_qubits < 0) throw std::invalid_argument("detection_power: s must be >= 0");
  return 1.0 - std::pow(0.75, tested_sealing_qubits);
}

}  // namespace qseal
