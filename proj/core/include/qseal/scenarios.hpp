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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qseal/attacks.hpp"
#include "qseal/seal_chau.hpp"
#include "qseal/seal_mub.hpp"

namespace qseal {

enum class Scheme { Bp, Ss, Chau };
enum class Adversary { None, MeasureResend, Collective, CrudeRead };

std::string scheme_name(Scheme s);
std::string adversary_name(Adversary a);

// One seeded Monte Carlo experiment: seal -> optional intrusion -> verify,
// aggregated over `trials` independent trials (trial i runs on substream i
// of `seed`, so results are reproducible and order-independent).
struct ExperimentConfig {
  Scheme scheme = Scheme::Bp;
  MubSealParams mub = MubSealParams::bp();
  ChauParams chau{};
  int message_bits = 8;                       // blocks per trial (bp/ss)
  SingleQubit chau_message = states::zero();  // payload per trial (chau)
  long trials = 1000;
  std::uint64_t seed = 0;
  Adversary adversary = Adversary::None;
  double adversary_probability = 1.0;  // p_eve
  // Fraction of qubits verified per trial (bp/ss) or of public slots whose
  // decoys get checked (chau).
  double test_fraction = 1.0;
  // Worker threads. Trial i always runs on substream i and aggregation is
  // pure counting, so any thread count emits identical statistics.
  int threads = 1;

  void validate() const;
};

struct ExperimentResult {
  long trials_total = 0;
  long trials_attacked = 0;
  double detection_rate = 0.0;     // over adversary-present trials
  double false_alarm_rate = 0.0;   // over adversary-absent trials
  double read_accuracy = 0.0;      // adversary's per-block bit accuracy
  double detection_halfwidth = 0.0;
  double false_alarm_halfwidth = 0.0;
  double accuracy_halfwidth = 0.0;
  // Wall-clock; reported on stderr by the CLI, never serialized into tables.
  double runtime_seconds = 0.0;
};

ExperimentResult run_eavesdrop(const ExperimentConfig& config);

// Named application presets sharing the seal -> optional intrusion -> verify
// skeleton. "message_receipt" and "packaging" model a certain read by the
// recipient (or package opener); "quiz" models a copying thief; "eavesdrop"
// an interceptor present half the time. Unknown names are rejected.
ExperimentConfig experiment_preset(const std::string& name, long trials, std::uint64_t seed);

struct CurvePoint {
  int tested_sealing = 0;
  double empirical = 0.0;
  double analytic = 0.0;  // 1 - (3/4)^s
};

// Detection rate after a full honest read versus the number of tested
// sealing qubits, with the closed form alongside.
std::vector<CurvePoint> run_detection_curve(const MubSealParams& params,
                                            std::span<const int> s_values, long trials,
                                            std::uint64_t seed);

struct ChauCurvePoint {
  double fraction = 0.0;  // fraction of public slots covered by verification
  double empirical = 0.0;
};

// Detection rate after a crude public read versus the fraction of public
// slots the verifier covers: a decoy is only checked when its slot is in the
// covered set, so the rate climbs roughly as fraction times the full-coverage
// detection probability.
std::vector<ChauCurvePoint> run_chau_detection_curve(const ChauParams& params,
                                                     std::span<const double> fractions,
                                                     long trials, std::uint64_t seed);

enum class EarlyOpen { None, Read, Collective };

struct CommitmentEvent {
  std::string actor;
  std::string action;
  std::string detail;
};

struct CommitmentTranscript {
  std::vector<CommitmentEvent> events;
  int committed_bit = 0;
  bool early_opened = false;
  bool detected = false;
  int revealed_bit = 0;
};

// Scripted commitment flow: Alice seals one bit and hands the register to
// Bob; Bob optionally opens early; Alice verifies the sealing qubit; the
// reveal reads the register. Collective early opening is never detected --
// the scheme is only a loose commitment.
CommitmentTranscript run_bit_commitment(std::uint64_t seed, EarlyOpen early = EarlyOpen::None);

enum class SemaphoreAction { PWait, PAcquire, VRelease, CriticalEnter, CriticalExit };

std::string semaphore_action_name(SemaphoreAction a);

struct SemaphoreEvent {
  int round = 0;
  int process = 0;
  SemaphoreAction action = SemaphoreAction::PWait;
};

struct SemaphoreTrace {
  std::vector<SemaphoreEvent> events;
  bool completed = false;
};

// Cooperative round-robin semaphore demo on a quantum-sealed token: P spins
// while a live seal verifies intact, then seals the token itself; V releases
// by reading (breaking) the seal. Deterministic for a fixed seed.
SemaphoreTrace run_semaphore_demo(int num_processes, int ops_per_process, std::uint64_t seed);

// No two processes are ever inside their critical sections at once.
bool mutual_exclusion_holds(const SemaphoreTrace& trace);

}  // namespace qseal
