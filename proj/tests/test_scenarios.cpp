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

#include <cmath>

#include "doctest.h"
#include "qseal/scenarios.hpp"
#include "support/golden_values.hpp"
#include "support/test_util.hpp"

using namespace qseal;
using qseal::testutil::within_se;

TEST_CASE("eavesdropping experiment: measure-and-resend at full test coverage") {
  ExperimentConfig c;
  c.scheme = Scheme::Bp;
  c.message_bits = 8;
  c.trials = 10000;
  c.seed = 101;
  c.adversary = Adversary::MeasureResend;
  c.adversary_probability = 1.0;
  c.test_fraction = 1.0;
  const ExperimentResult r = run_eavesdrop(c);
  CHECK(r.trials_attacked == c.trials);
  // 8 blocks x 1 sealing qubit each.
  CHECK(within_se(r.detection_rate, detection_power(8), c.trials));
  CHECK(r.read_accuracy == doctest::Approx(1.0));
  CHECK(r.false_alarm_rate == 0.0);
}

TEST_CASE("no adversary means no false alarms, exactly") {
  ExperimentConfig c;
  c.scheme = Scheme::Bp;
  c.trials = 2000;
  c.seed = 102;
  c.adversary = Adversary::None;
  const ExperimentResult r = run_eavesdrop(c);
  CHECK(r.trials_attacked == 0);
  CHECK(r.false_alarm_rate == 0.0);
  CHECK(r.detection_rate == 0.0);
}

TEST_CASE("collective adversary reads perfectly and is never detected") {
  ExperimentConfig c;
  c.scheme = Scheme::Bp;
  c.message_bits = 4;
  c.trials = 2000;
  c.seed = 103;
  c.adversary = Adversary::Collective;
  const ExperimentResult r = run_eavesdrop(c);
  CHECK(r.detection_rate == 0.0);
  CHECK(r.read_accuracy == doctest::Approx(1.0));
}

TEST_CASE("partial adversary presence splits the trial population") {
  ExperimentConfig c;
  c.scheme = Scheme::Bp;
  c.message_bits = 2;
  c.trials = 4000;
  c.seed = 104;
  c.adversary = Adversary::MeasureResend;
  c.adversary_probability = 0.5;
  const ExperimentResult r = run_eavesdrop(c);
  CHECK(within_se(static_cast<double>(r.trials_attacked) / r.trials_total, 0.5, r.trials_total));
  CHECK(r.false_alarm_rate == 0.0);
  CHECK(within_se(r.detection_rate, detection_power(2), r.trials_attacked));
}

TEST_CASE("chau experiment detects crude reading at q*") {
  ExperimentConfig c;
  c.scheme = Scheme::Chau;
  c.trials = 4000;
  c.seed = 105;
  c.adversary = Adversary::CrudeRead;
  const ExperimentResult r = run_eavesdrop(c);
  CHECK(within_se(r.detection_rate, golden::kChauCrudeDetect, c.trials));
  CHECK(r.read_accuracy == doctest::Approx(golden::kChauCrudeAccuracyZero));
  CHECK(r.false_alarm_rate == 0.0);
}

TEST_CASE("invalid scheme/adversary combinations are rejected") {
  ExperimentConfig c;
  c.scheme = Scheme::Chau;
  c.adversary = Adversary::MeasureResend;
  CHECK_THROWS_AS(run_eavesdrop(c), std::invalid_argument);

  c.scheme = Scheme::Bp;
  c.adversary = Adversary::CrudeRead;
  CHECK_THROWS_AS(run_eavesdrop(c), std::invalid_argument);

  c = ExperimentConfig{};
  c.mub = MubSealParams::ss(4, 1);
  c.scheme = Scheme::Ss;
  c.adversary = Adversary::Collective;
  CHECK_THROWS_AS(run_eavesdrop(c), std::invalid_argument);

  c = ExperimentConfig{};
  c.trials = 0;
  CHECK_THROWS_AS(run_eavesdrop(c), std::invalid_argument);
  c = ExperimentConfig{};
  c.adversary_probability = 1.5;
  CHECK_THROWS_AS(run_eavesdrop(c), std::invalid_argument);
}

TEST_CASE("parallel trials emit bit-identical statistics") {
  ExperimentConfig c;
  c.scheme = Scheme::Bp;
  c.message_bits = 4;
  c.trials = 3001;  // deliberately not a multiple of the worker count
  c.seed = 115;
  c.adversary = Adversary::MeasureResend;
  c.adversary_probability = 0.7;
  c.test_fraction = 0.5;

  c.threads = 1;
  const ExperimentResult serial = run_eavesdrop(c);
  c.threads = 4;
  const ExperimentResult parallel = run_eavesdrop(c);

  CHECK(parallel.trials_attacked == serial.trials_attacked);
  CHECK(parallel.detection_rate == serial.detection_rate);
  CHECK(parallel.false_alarm_rate == serial.false_alarm_rate);
  CHECK(parallel.read_accuracy == serial.read_accuracy);

  c.threads = 0;
  CHECK_THROWS_AS(run_eavesdrop(c), std::invalid_argument);
}

TEST_CASE("detection curve matches the closed form point by point") {
  const std::vector<int> s_values{0, 1, 2, 4};
  const auto points = run_detection_curve(MubSealParams::bp(), s_values, 5000, 106);
  REQUIRE(points.size() == 4);

  CHECK(points[0].tested_sealing == 0);
  CHECK(points[0].empirical == 0.0);
  CHECK(points[0].analytic == 0.0);

  for (const auto& p : points) {
    CHECK(p.analytic == doctest::Approx(detection_power(p.tested_sealing)));
    CHECK(within_se(p.empirical, p.analytic, 5000));
  }
  // Monotone nondecreasing empirical column.
  for (std::size_t i = 1; i < points.size(); ++i)
    CHECK(points[i].empirical >= points[i - 1].empirical);
}

TEST_CASE("chau detection curve grows with the covered slot fraction") {
  const std::vector<double> fractions{0.0, 0.5, 1.0};
  const auto points = run_chau_detection_curve(ChauParams{}, fractions, 4000, 107);
  REQUIRE(points.size() == 3);
  CHECK(points[0].empirical == 0.0);
  // Coverage 0.5 rounds to 4 of 7 slots; the decoy is caught 4/7 of the time.
  CHECK(within_se(points[1].empirical, (4.0 / 7.0) * golden::kChauCrudeDetect, 4000));
  CHECK(within_se(points[2].empirical, golden::kChauCrudeDetect, 4000));
  CHECK(points[0].empirical <= points[1].empirical);
  CHECK(points[1].empirical <= points[2].empirical);
}

TEST_CASE("bit commitment without early opening reveals cleanly") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const CommitmentTranscript t = run_bit_commitment(seed, EarlyOpen::None);
    CHECK_FALSE(t.early_opened);
    CHECK_FALSE(t.detected);
    CHECK(t.revealed_bit == t.committed_bit);
    CHECK(t.events.size() == 3);
  }
}

TEST_CASE("early opening by reading is detected a quarter of the time") {
  long detected = 0;
  const long seeds = 4000;
  for (long seed = 0; seed < seeds; ++seed) {
    const CommitmentTranscript t =
        run_bit_commitment(static_cast<std::uint64_t>(seed), EarlyOpen::Read);
    CHECK(t.revealed_bit == t.committed_bit);  // majority read still recovers
    if (t.detected) ++detected;
  }
  CHECK(within_se(static_cast<double>(detected) / seeds, 0.25, seeds));
}

TEST_CASE("collective early opening documents the loose-commitment caveat") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const CommitmentTranscript t = run_bit_commitment(seed, EarlyOpen::Collective);
    CHECK(t.early_opened);
    CHECK_FALSE(t.detected);
    CHECK(t.revealed_bit == t.committed_bit);
  }
}

TEST_CASE("semaphore traces satisfy mutual exclusion") {
  const SemaphoreTrace t = run_semaphore_demo(2, 3, 108);
  CHECK(t.completed);
  CHECK(mutual_exclusion_holds(t));

  int acquisitions = 0;
  for (const SemaphoreEvent& e : t.events)
    if (e.action == SemaphoreAction::PAcquire) ++acquisitions;
  CHECK(acquisitions == 6);
}

TEST_CASE("a single process acquires immediately, every time") {
  const SemaphoreTrace t = run_semaphore_demo(1, 4, 109);
  CHECK(t.completed);
  CHECK(mutual_exclusion_holds(t));
  for (const SemaphoreEvent& e : t.events) CHECK(e.action != SemaphoreAction::PWait);
}

TEST_CASE("semaphore traces are bit-identical under a fixed seed") {
  const SemaphoreTrace a = run_semaphore_demo(4, 5, 110);
  const SemaphoreTrace b = run_semaphore_demo(4, 5, 110);
  REQUIRE(a.events.size() == b.events.size());
  for (std::size_t i = 0; i < a.events.size(); ++i) {
    CHECK(a.events[i].round == b.events[i].round);
    CHECK(a.events[i].process == b.events[i].process);
    CHECK(a.events[i].action == b.events[i].action);
  }
}

TEST_CASE("semaphore rejects degenerate configurations") {
  CHECK_THROWS_AS(run_semaphore_demo(0, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(run_semaphore_demo(2, -1, 1), std::invalid_argument);
}

TEST_CASE("contended semaphore runs log waits") {
  const SemaphoreTrace t = run_semaphore_demo(3, 2, 111);
  CHECK(t.completed);
  CHECK(mutual_exclusion_holds(t));
  int waits = 0;
  for (const SemaphoreEvent& e : t.events)
    if (e.action == SemaphoreAction::PWait) ++waits;
  CHECK(waits > 0);
}
