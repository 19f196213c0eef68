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

// Dense-statevector kernel and protocol throughput benchmarks across the
// supported register sizes (up to 16 qubits).

#include <benchmark/benchmark.h>

#include "qseal/attacks.hpp"
#include "qseal/codes.hpp"
#include "qseal/seal_chau.hpp"
#include "qseal/seal_mub.hpp"
#include "qseal/state.hpp"

namespace {

using namespace qseal;

QuantumState plus_register(int num_qubits) {
  std::vector<SingleQubit> specs(static_cast<std::size_t>(num_qubits), states::plus());
  return prepare_product(specs);
}

void BM_HGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  QuantumState s = plus_register(n);
  int q = 0;
  for (auto _ : state) {
    s.apply(Gate::H, {q});
    q = (q + 1) % n;
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_HGate)->DenseRange(8, 16, 4);

void BM_CnotGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  QuantumState s = plus_register(n);
  int q = 0;
  for (auto _ : state) {
    s.apply(Gate::Cnot, {q, (q + 1) % n});
    q = (q + 1) % n;
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_CnotGate)->DenseRange(8, 16, 4);

void BM_CswapGate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  QuantumState s = plus_register(n);
  for (auto _ : state) {
    s.apply(Gate::Cswap, {0, 1, 2});
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_CswapGate)->DenseRange(8, 16, 4);

void BM_PauliStringApply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  QuantumState s = plus_register(n);
  std::vector<Pauli> letters(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) letters[static_cast<std::size_t>(q)] =
      q % 3 == 0 ? Pauli::X : (q % 3 == 1 ? Pauli::Z : Pauli::Y);
  const PauliString op(letters);
  for (auto _ : state) {
    s.apply_pauli(op);
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_PauliStringApply)->DenseRange(8, 16, 4);

void BM_PauliMeasure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(1);
  const QuantumState base = plus_register(n);
  const PauliString op = PauliString::on_support(n, std::vector<int>{0, 1, 2}, Pauli::Z);
  for (auto _ : state) {
    QuantumState s = base;
    benchmark::DoNotOptimize(s.measure_pauli(op, rng));
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_PauliMeasure)->DenseRange(8, 16, 4);

void BM_SwapTest(benchmark::State& state) {
  RandomStream rng(2);
  for (auto _ : state) {
    QuantumState s = prepare_product({states::plus(), states::zero(), states::zero()});
    benchmark::DoNotOptimize(s.swap_test(0, 1, 2, rng));
  }
}
BENCHMARK(BM_SwapTest);

void BM_SealVerifyRoundTrip(benchmark::State& state) {
  const int blocks = static_cast<int>(state.range(0));
  RandomStream rng(3);
  std::vector<int> bits(static_cast<std::size_t>(blocks), 1);
  for (auto _ : state) {
    auto [msg, secret] = seal_bits(bits, MubSealParams::bp(), rng);
    read_majority(msg, rng);
    benchmark::DoNotOptimize(verify_all(msg, secret, rng));
  }
  state.SetItemsProcessed(state.iterations() * blocks);
}
BENCHMARK(BM_SealVerifyRoundTrip)->Arg(1)->Arg(8)->Arg(32);

void BM_SteaneEncode(benchmark::State& state) {
  const CssCodeSpec code = steane_code();
  for (auto _ : state) benchmark::DoNotOptimize(encode(code, states::plus()));
}
BENCHMARK(BM_SteaneEncode);

void BM_ChauSealReadVerify(benchmark::State& state) {
  RandomStream rng(4);
  for (auto _ : state) {
    ChauSealInstance inst = chau_seal(states::zero(), ChauParams{}, rng);
    chau_read_honest(inst, rng);
    benchmark::DoNotOptimize(chau_verify(inst, rng));
  }
}
BENCHMARK(BM_ChauSealReadVerify);

void BM_CollectiveAttack9(benchmark::State& state) {
  RandomStream rng(5);
  std::vector<int> bits{1};
  for (auto _ : state) {
    auto [msg, secret] = seal_bits(bits, MubSealParams::ss(9, 4), rng);
    benchmark::DoNotOptimize(attack_collective_majority(msg, rng));
  }
}
BENCHMARK(BM_CollectiveAttack9);

}  // namespace

BENCHMARK_MAIN();
