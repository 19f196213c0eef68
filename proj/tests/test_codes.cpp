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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "doctest.h"
#include "qseal/codes.hpp"
#include "support/oracle.hpp"
#include "support/test_util.hpp"

using namespace qseal;
using qseal::testutil::within_se;

namespace {

std::vector<int> iota_block(int n) {
  std::vector<int> b(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) b[static_cast<std::size_t>(i)] = i;
  return b;
}

// Symplectic (x|z) masks of a Pauli string; enough to compose products when
// phases are irrelevant (weights, commutation).
struct XZ {
  std::uint32_t x = 0, z = 0;
};

XZ xz_of(const PauliString& p) {
  XZ m;
  for (int q = 0; q < p.num_qubits(); ++q) {
    const Pauli l = p.letter(q);
    if (l == Pauli::X || l == Pauli::Y) m.x |= (1u << q);
    if (l == Pauli::Z || l == Pauli::Y) m.z |= (1u << q);
  }
  return m;
}

int weight_of(XZ m) { return std::popcount(m.x | m.z); }

}  // namespace

TEST_CASE("steane code structure") {
  const CssCodeSpec code = steane_code();
  CHECK(code.n == 7);
  CHECK(code.k == 1);
  CHECK(code.d == 3);

  const auto gens = code.generators();
  CHECK(gens.size() == 6);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) CHECK(gens[i].commutes_with(gens[j]));

  for (const PauliString& g : gens) {
    CHECK(code.logical_x.commutes_with(g));
    CHECK(code.logical_z.commutes_with(g));
  }
  CHECK_FALSE(code.logical_x.commutes_with(code.logical_z));
}

TEST_CASE("steane minimum logical weight is 3, exhaustively over stabilizer cosets") {
  const CssCodeSpec code = steane_code();
  const auto gens = code.generators();
  const XZ lx = xz_of(code.logical_x);
  const XZ lz = xz_of(code.logical_z);
  const XZ ly{lx.x ^ lz.x, lx.z ^ lz.z};

  int min_weight = 99;
  for (std::uint32_t subset = 0; subset < 64; ++subset) {
    XZ acc;
    for (int g = 0; g < 6; ++g)
      if (subset & (1u << g)) {
        const XZ gm = xz_of(gens[static_cast<std::size_t>(g)]);
        acc.x ^= gm.x;
        acc.z ^= gm.z;
      }
    for (const XZ& logical : {lx, lz, ly}) {
      const XZ rep{acc.x ^ logical.x, acc.z ^ logical.z};
      min_weight = std::min(min_weight, weight_of(rep));
    }
  }
  CHECK(min_weight == 3);
}

TEST_CASE("five-qubit code structure") {
  const StabilizerCodeSpec code = five_qubit_code();
  CHECK(code.n == 5);
  CHECK(code.k == 1);
  CHECK(code.d == 3);
  CHECK(code.generator_list.size() == 4);
  CHECK(code.generator_list[0].label() == "+XZZXI");
  CHECK(code.logical_z.label() == "+ZZZZZ");

  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      CHECK(code.generator_list[i].commutes_with(code.generator_list[j]));

  // Independence: no nonempty generator subset multiplies to the identity.
  for (std::uint32_t subset = 1; subset < 16; ++subset) {
    XZ acc;
    for (int g = 0; g < 4; ++g)
      if (subset & (1u << g)) {
        const XZ gm = xz_of(code.generator_list[static_cast<std::size_t>(g)]);
        acc.x ^= gm.x;
        acc.z ^= gm.z;
      }
    CHECK(weight_of(acc) > 0);
  }

  // Every single-qubit Pauli error anticommutes with at least one generator.
  for (int q = 0; q < 5; ++q)
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      const PauliString err = PauliString::single(5, q, p);
      bool caught = false;
      for (const PauliString& g : code.generator_list) caught = caught || !g.commutes_with(err);
      CHECK(caught);
    }
}

TEST_CASE("encode(steane,|0>) matches the stabilizer group average") {
  const CssCodeSpec code = steane_code();
  const QuantumState enc0 = encode(code, states::zero());

  // Independent route: sum g|0000000> over all 64 stabilizer group elements.
  const auto gens = code.generators();
  oracle::CVec acc(128, {0.0, 0.0});
  for (std::uint32_t subset = 0; subset < 64; ++subset) {
    oracle::CVec v = oracle::basis(7, 0);
    for (int g = 0; g < 6; ++g)
      if (subset & (1u << g))
        v = oracle::apply_pauli(v, oracle::masks_of(gens[static_cast<std::size_t>(g)]));
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
  }
  const double inv = 1.0 / std::sqrt(oracle::norm2(acc));
  Amplitude overlap{0.0, 0.0};
  for (std::size_t i = 0; i < acc.size(); ++i)
    overlap += std::conj(acc[i] * inv) * enc0.amplitude(i);
  CHECK(std::norm(overlap) == doctest::Approx(1.0).epsilon(1e-9));

  // Exactly 8 equal-magnitude basis states.
  int nonzero = 0;
  for (std::size_t i = 0; i < enc0.dimension(); ++i) {
    if (std::abs(enc0.amplitude(i)) < 1e-12) continue;
    ++nonzero;
    CHECK(std::abs(enc0.amplitude(i)) == doctest::Approx(1.0 / std::sqrt(8.0)));
  }
  CHECK(nonzero == 8);

  RandomStream rng(1);
  QuantumState probe = enc0;
  for (const PauliString& g : gens) CHECK(probe.measure_pauli(g, rng) == +1);
  CHECK(probe.measure_pauli(code.logical_z, rng) == +1);
}

TEST_CASE("encode(five_qubit,|0>) is a +1 eigenstate of all checks") {
  const StabilizerCodeSpec code = five_qubit_code();
  QuantumState enc0 = encode(code, states::zero());
  RandomStream rng(2);
  for (const PauliString& g : code.generator_list) CHECK(enc0.measure_pauli(g, rng) == +1);
  CHECK(enc0.measure_pauli(code.logical_z, rng) == +1);
}

TEST_CASE("encoding is linear in the logical amplitudes") {
  const CssCodeSpec code = steane_code();
  const QuantumState enc_plus = encode(code, states::plus());
  const QuantumState combo = QuantumState::superpose(
      {0.7071067811865475, 0.0}, encode(code, states::zero()),
      {0.7071067811865475, 0.0}, encode(code, states::one()));
  CHECK(fidelity(enc_plus, combo) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("fresh codewords have trivial syndrome and are undisturbed") {
  RandomStream rng(3);
  const CssCodeSpec css = steane_code();
  QuantumState s = encode(css, states::plus());
  const QuantumState before = s;
  const auto syn = measure_syndrome(s, css, iota_block(7), rng);
  for (int b : syn) CHECK(b == 0);
  CHECK(fidelity(s, before) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("steane syndromes point at the errored position (Hamming columns)") {
  RandomStream rng(4);
  const CssCodeSpec css = steane_code();
  std::set<std::vector<int>> seen;

  for (int q = 0; q < 7; ++q) {
    QuantumState s = encode(css, states::zero());
    s.apply_pauli(PauliString::single(7, q, Pauli::X));
    const auto syn = measure_syndrome(s, css, iota_block(7), rng);
    // X errors are invisible to X-checks and name position q+1 in Z-checks.
    for (int r = 0; r < 3; ++r) CHECK(syn[static_cast<std::size_t>(r)] == 0);
    int pointed = 0;
    for (int r = 0; r < 3; ++r) pointed |= syn[static_cast<std::size_t>(3 + r)] << r;
    CHECK(pointed == q + 1);
    seen.insert(syn);
  }
  CHECK(seen.size() == 7);

  for (int q = 0; q < 7; ++q) {
    QuantumState s = encode(css, states::zero());
    s.apply_pauli(PauliString::single(7, q, Pauli::Z));
    const auto syn = measure_syndrome(s, css, iota_block(7), rng);
    int pointed = 0;
    for (int r = 0; r < 3; ++r) pointed |= syn[static_cast<std::size_t>(r)] << r;
    CHECK(pointed == q + 1);
    for (int r = 3; r < 6; ++r) CHECK(syn[static_cast<std::size_t>(r)] == 0);
  }
}

TEST_CASE("every single-qubit pauli error is detected and corrected, both codes") {
  RandomStream rng(5);
  const CssCodeSpec css = steane_code();
  const StabilizerCodeSpec five = five_qubit_code();
  const std::vector<SingleQubit> logicals{states::zero(), states::one(), states::plus()};

  for (const SingleQubit& logical : logicals) {
    const QuantumState css_word = encode(css, logical);
    for (int q = 0; q < 7; ++q)
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        QuantumState s = css_word;
        s.apply_pauli(PauliString::single(7, q, p));
        const auto syn = measure_syndrome(s, css, iota_block(7), rng);
        bool nonzero = false;
        for (int b : syn) nonzero = nonzero || b;
        CHECK(nonzero);
        const Correction c = correct(s, css, iota_block(7), syn);
        CHECK(c.correctable);
        CHECK(fidelity(s, css_word) >= 1.0 - 1e-9);
      }

    const QuantumState five_word = encode(five, logical);
    for (int q = 0; q < 5; ++q)
      for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        QuantumState s = five_word;
        s.apply_pauli(PauliString::single(5, q, p));
        const auto syn = measure_syndrome(s, five, iota_block(5), rng);
        bool nonzero = false;
        for (int b : syn) nonzero = nonzero || b;
        CHECK(nonzero);
        const Correction c = correct(s, five, iota_block(5), syn);
        CHECK(c.correctable);
        CHECK(fidelity(s, five_word) >= 1.0 - 1e-9);
      }
  }
}

TEST_CASE("weight-1 syndromes are injective for both codes") {
  const CssCodeSpec css = steane_code();
  const StabilizerCodeSpec five = five_qubit_code();

  const auto sig = [](const std::vector<PauliString>& gens, const PauliString& err) {
    std::vector<int> s;
    for (const PauliString& g : gens) s.push_back(g.commutes_with(err) ? 0 : 1);
    return s;
  };

  std::set<std::vector<int>> css_seen;
  for (int q = 0; q < 7; ++q)
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z})
      css_seen.insert(sig(css.generators(), PauliString::single(7, q, p)));
  CHECK(css_seen.size() == 21);

  std::set<std::vector<int>> five_seen;
  for (int q = 0; q < 5; ++q)
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z})
      five_seen.insert(sig(five.generator_list, PauliString::single(5, q, p)));
  CHECK(five_seen.size() == 15);
}

TEST_CASE("zero syndrome applies the identity recovery") {
  RandomStream rng(6);
  const CssCodeSpec css = steane_code();
  QuantumState s = encode(css, states::plus());
  const QuantumState before = s;
  const std::vector<int> zero_syn(6, 0);
  const Correction c = correct(s, css, iota_block(7), zero_syn);
  CHECK(c.correctable);
  CHECK(c.recovery.weight() == 0);
  CHECK(fidelity(s, before) == doctest::Approx(1.0));
}

TEST_CASE("syndromes without a weight-1 explanation are flagged, not guessed") {
  const CssCodeSpec css = steane_code();
  QuantumState s = encode(css, states::zero());
  // X-checks point a Z error at qubit 0, Z-checks point an X error at
  // qubit 1. No single Pauli explains both halves (a Y would point the same
  // position twice), so the minimum-weight explanation has weight 2 > t.
  std::vector<int> syn(6, 0);
  syn[0] = 1;
  syn[4] = 1;
  const QuantumState before = s;
  const Correction c = correct(s, css, iota_block(7), syn);
  CHECK_FALSE(c.correctable);
  CHECK(fidelity(s, before) == doctest::Approx(1.0));
}

TEST_CASE("logical readout follows the logical state") {
  RandomStream rng(7);
  const CssCodeSpec css = steane_code();
  QuantumState zero_word = encode(css, states::zero());
  CHECK(decode_logical_measure(zero_word, css, iota_block(7), rng) == 0);
  QuantumState one_word = encode(css, states::one());
  CHECK(decode_logical_measure(one_word, css, iota_block(7), rng) == 1);

  const QuantumState plus_word = encode(css, states::plus());
  const long trials = 10000;
  long ones = 0;
  for (long t = 0; t < trials; ++t) {
    QuantumState s = plus_word;
    ones += decode_logical_measure(s, css, iota_block(7), rng);
  }
  CHECK(within_se(static_cast<double>(ones) / trials, 0.5, trials));
}

TEST_CASE("encode/decode round trip statistics match the raw qubit") {
  RandomStream rng(8);
  const CssCodeSpec css = steane_code();
  const long trials = 2000;
  for (int i = 0; i < 20; ++i) {
    const SingleQubit logical = testutil::random_single_qubit(rng);
    const double p1 = std::norm(logical.a1);
    const QuantumState word = encode(css, logical);
    long ones = 0;
    for (long t = 0; t < trials; ++t) {
      QuantumState s = word;
      ones += decode_logical_measure(s, css, iota_block(7), rng);
    }
    CHECK(within_se(static_cast<double>(ones) / trials, p1, trials));
  }
}

TEST_CASE("codeword single-qubit marginals are maximally mixed in both bases") {
  RandomStream rng(9);
  const StabilizerCodeSpec five = five_qubit_code();
  const CssCodeSpec css = steane_code();

  std::vector<QuantumState> words;
  words.push_back(encode(five, states::zero()));
  words.push_back(encode(css, states::zero()));
  words.push_back(encode(css, states::one()));
  words.push_back(encode(css, states::plus()));
  words.push_back(encode(css, testutil::random_single_qubit(rng)));

  for (const QuantumState& word : words) {
    for (int q = 0; q < word.num_qubits(); ++q) {
      CHECK(word.probability_one(q, Basis::Reading) == doctest::Approx(0.5).epsilon(1e-9));
      CHECK(word.probability_one(q, Basis::Hadamard) == doctest::Approx(0.5).epsilon(1e-9));
    }
  }

  // Sampled flavor on the five-qubit |0> codeword.
  const QuantumState word = words[0];
  const long trials = 10000;
  for (int q = 0; q < 5; ++q) {
    long ones_read = 0, ones_had = 0;
    for (long t = 0; t < trials; ++t) {
      QuantumState a = word;
      ones_read += a.measure_qubit(q, Basis::Reading, rng);
      QuantumState b = word;
      ones_had += b.measure_qubit(q, Basis::Hadamard, rng);
    }
    CHECK(within_se(static_cast<double>(ones_read) / trials, 0.5, trials));
    CHECK(within_se(static_cast<double>(ones_had) / trials, 0.5, trials));
  }
}

TEST_CASE("rejects k != 1 codes and bad blocks") {
  CssCodeSpec bad = steane_code();
  bad.k = 2;
  CHECK_THROWS_AS(encode(bad, states::zero()), std::invalid_argument);

  RandomStream rng(10);
  const CssCodeSpec css = steane_code();
  QuantumState s = encode(css, states::zero());
  const std::vector<int> short_block{0, 1, 2};
  CHECK_THROWS_AS(measure_syndrome(s, css, short_block, rng), std::invalid_argument);
}

TEST_CASE("check matrices export as symplectic 0/1 rows") {
  const std::string text = five_qubit_code().check_matrix_text();
  CHECK(text ==
        "10010 01100\n"
        "01001 00110\n"
        "10100 00011\n"
        "01010 10001\n");
  const std::string css_text = steane_code().check_matrix_text();
  CHECK(css_text.substr(0, 14) == "1010101 000000");
}
