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

#include "qseal/seal_chau.hpp"

#include <algorithm>
#include <stdexcept>

namespace qseal {

namespace {

// Substream tag for instance preparation draws.
constexpr std::uint64_t kPrepStream = 0xc4a05ea1ULL;

}  // namespace

void ChauParams::validate() const {
  if (withheld_count() < 1)
    throw std::invalid_argument("ChauParams: distance must give t = floor((d-1)/2) >= 1");
  if (css_length < 3) throw std::invalid_argument("ChauParams: CSS length must be at least 3");
  if (css_distance > css_length)
    throw std::invalid_argument("ChauParams: distance cannot exceed length");
  if (stabilizer_length < 2)
    throw std::invalid_argument("ChauParams: stabilizer code length too small");
}

ChauSealInstance::ChauSealInstance(ChauParams params, CssCodeSpec announced, QuantumState state,
                                   std::vector<int> public_slots,
                                   std::vector<int> private_indices, ChauSecret secret)
    : params_(params),
      announced_(std::move(announced)),
      state_(std::move(state)),
      public_slots_(std::move(public_slots)),
      private_indices_(std::move(private_indices)),
      secret_(secret) {
  if (static_cast<int>(public_slots_.size()) != params_.css_length)
    throw std::invalid_argument("ChauSealInstance: slot count must equal CSS length");
  if (state_.num_qubits() != params_.total_qubits())
    throw std::invalid_argument("ChauSealInstance: register width mismatch");
}

std::vector<int> ChauSealInstance::decoy_block(int i) const {
  if (i < 0 || i >= params_.withheld_count())
    throw std::out_of_range("decoy_block: index out of range");
  std::vector<int> block;
  const int base = params_.css_length + i * params_.stabilizer_length;
  for (int q = 0; q < params_.stabilizer_length; ++q) block.push_back(base + q);
  return block;
}

namespace {

ChauSealInstance prepare_instance(const ChauSecret& secret, const ChauParams& params) {
  // Register layout: CSS positions 0..n-1, then the decoy codeword(s).
  // Slot indirection stands in for physically shipping qubits around.
  const CssCodeSpec css = steane_code();
  const StabilizerCodeSpec decoy_code = five_qubit_code();
  QuantumState reg = encode(css, secret.message).tensor(encode(decoy_code, states::zero()));

  std::vector<int> slots(static_cast<std::size_t>(params.css_length));
  for (int i = 0; i < params.css_length; ++i) slots[static_cast<std::size_t>(i)] = i;
  const int exposed_reg = params.css_length + secret.decoy_exposed_qubit;
  slots[static_cast<std::size_t>(secret.withheld_position)] = exposed_reg;

  std::vector<int> private_indices{secret.withheld_position};
  for (int q = params.css_length; q < params.total_qubits(); ++q)
    if (q != exposed_reg) private_indices.push_back(q);

  return ChauSealInstance(params, css, std::move(reg), std::move(slots),
                          std::move(private_indices), secret);
}

}  // namespace

ChauSealInstance chau_seal(const SingleQubit& message, const ChauParams& params,
                           RandomStream& rng) {
  params.validate();
  // Only the [[7,1,3]] + [[5,1,3]] instance is instantiable; wider configs
  // are representable in ChauParams but have no shipped code pair.
  if (params.css_length != 7 || params.css_distance != 3 || params.stabilizer_length != 5)
    throw std::invalid_argument("chau_seal: only the n=7, d=3, n'=5 instance is supported");
  const double n = std::norm(message.a0) + std::norm(message.a1);
  if (std::abs(n - 1.0) > kNormTolerance)
    throw std::invalid_argument("chau_seal: message is not normalized");

  ChauSecret secret;
  secret.message = message;
  secret.seed = rng.next_u64();
  RandomStream prep(secret.seed, kPrepStream);
  secret.withheld_position = static_cast<int>(prep.next_below(params.css_length));
  secret.decoy_exposed_qubit = static_cast<int>(prep.next_below(params.stabilizer_length));
  return prepare_instance(secret, params);
}

ChauSealInstance chau_reprepare(const ChauSealInstance& instance) {
  return prepare_instance(instance.secret(), instance.params());
}

ChauReadResult chau_read_honest(ChauSealInstance& instance, RandomStream& rng) {
  // Uses only public knowledge: the announced code and the slot sequence.
  const CssCodeSpec& code = instance.announced_code();
  const std::vector<int>& slots = instance.public_slots();
  ChauReadResult result;
  result.syndrome = measure_syndrome(instance.state(), code, slots, rng);
  const Correction corr = correct(instance.state(), code, slots, result.syndrome);
  if (!corr.correctable) {
    result.aborted = true;
    return result;
  }
  result.bit = decode_logical_measure(instance.state(), code, slots, rng);
  return result;
}

ChauVerificationReport chau_verify(ChauSealInstance& instance, RandomStream& rng,
                                   bool css_cross_check) {
  const StabilizerCodeSpec decoy_code = five_qubit_code();
  ChauVerificationReport report;
  bool any = false;
  for (int i = 0; i < instance.params().withheld_count(); ++i) {
    const std::vector<int> block = instance.decoy_block(i);
    std::vector<int> bits = measure_syndrome(instance.state(), decoy_code, block, rng);
    bits.push_back(decode_logical_measure(instance.state(), decoy_code, block, rng));
    for (int b : bits) any = any || (b != 0);
    report.decoy_checks.push_back(std::move(bits));
  }
  if (css_cross_check) {
    // The true CSS qubits never moved; positions 0..n-1 recombine the
    // withheld qubit with the released ones.
    std::vector<int> css_block(static_cast<std::size_t>(instance.params().css_length));
    for (int q = 0; q < instance.params().css_length; ++q)
      css_block[static_cast<std::size_t>(q)] = q;
    report.css_syndrome =
        measure_syndrome(instance.state(), instance.announced_code(), css_block, rng);
    for (int b : report.css_syndrome) any = any || (b != 0);
  }
  report.verdict = any ? Verdict::Broken : Verdict::Sealed;
  return report;
}

OpacityStats chau_is_opaque(const ChauSealInstance& instance, long trials, RandomStream& rng) {
  if (trials < 1) throw std::invalid_argument("chau_is_opaque: trials must be positive");
  OpacityStats stats;
  stats.trials = trials;
  stats.ones.assign(instance.public_slots().size(), {0, 0});
  for (long t = 0; t < trials; ++t) {
    for (int basis_index = 0; basis_index < 2; ++basis_index) {
      const Basis basis = basis_index == 0 ? Basis::Reading : Basis::Hadamard;
      ChauSealInstance fresh = chau_reprepare(instance);
      for (std::size_t slot = 0; slot < fresh.public_slots().size(); ++slot) {
        const int bit =
            fresh.state().measure_qubit(fresh.public_slots()[slot], basis, rng);
        stats.ones[slot][static_cast<std::size_t>(basis_index)] += bit;
      }
    }
  }
  return stats;
}

}  // namespace qseal
