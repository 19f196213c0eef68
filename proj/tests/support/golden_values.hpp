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

// Frozen exact-oracle statistics. Generated by tests/golden_gen.cpp (run the
// `golden_gen` target and diff against these before trusting any change to
// the oracles). Values are exact dyadic rationals; tests assert the
// recomputed oracle output matches to 1e-12 and Monte Carlo runs land within
// four standard errors.

#pragma once

namespace qseal::golden {

// Quantum-payload scheme, default [[7,1,3]] + [[5,1,3]] instance.
inline constexpr double kChauHonestAccuracyZero = 1.0;
inline constexpr double kChauHonestAccuracyOne = 1.0;
inline constexpr double kChauHonestAbort = 0.0;
inline constexpr double kChauHonestDetect = 0.75;        // p*
inline constexpr double kChauCrudeAccuracyZero = 1.0;
inline constexpr double kChauCrudeDetect = 0.5;          // q*

// Collective majority-subspace attack on minority-fraction blocks.
inline constexpr double kSsCollectiveAccuracy94 = 31.0 / 32.0;
inline constexpr double kSsCollectiveDetect94 = 781.0 / 16384.0;  // r*
inline constexpr double kSsCollectiveAccuracy31 = 3.0 / 4.0;
inline constexpr double kSsCollectiveDetect31 = 7.0 / 32.0;

// Majority-vote read success (binomial over sealing-qubit outcomes).
inline constexpr double kMajoritySuccess94 = 31.0 / 32.0;
inline constexpr double kMajoritySuccess157 = 255.0 / 256.0;
inline constexpr double kMajoritySuccess2512 = 8191.0 / 8192.0;

}  // namespace qseal::golden
