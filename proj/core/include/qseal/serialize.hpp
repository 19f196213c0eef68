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

#include <string>
#include <vector>

#include "qseal/attacks.hpp"
#include "qseal/seal_chau.hpp"
#include "qseal/seal_mub.hpp"

namespace qseal {

// Every qseal file starts with this tag on its own line.
inline constexpr const char* kFormatVersion = "qseal-v1";

// %.6g -- the fixed precision for emitted statistics tables.
std::string format_double(double value);
// %.12g -- the fixed precision for amplitudes and state dumps.
std::string format_double12(double value);

// Flat result table with preformatted cells; `numeric` marks columns whose
// cells are emitted unquoted in JSON.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<bool> numeric;
  std::vector<std::vector<std::string>> rows;
};

// Header row then one comma-joined line per row.
std::string to_csv(const ResultTable& table);
// Array of one object per row, keys in column order.
std::string to_json(const ResultTable& table);

// Sealed-message file: metadata header plus per-block states (product
// factors or a dense amplitude dump).
std::string message_to_text(const SealedMessage& message);
SealedMessage message_from_text(const std::string& text);

// Secret file: one "block_index,bit,permutation,sealing_values,seed" record
// per block.
std::string secret_to_text(const SealSecret& secret);
SealSecret secret_from_text(const std::string& text);

// Sealed-instance file for the quantum-payload scheme: params, secret, slot
// map and the full register amplitudes (the register may be mid-protocol).
std::string chau_to_text(const ChauSealInstance& instance);
ChauSealInstance chau_from_text(const std::string& text);

// One-object JSON record of an adversarial read, for harness logs.
std::string attack_outcome_to_json(const AttackOutcome& outcome, std::uint64_t seed);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace qseal
