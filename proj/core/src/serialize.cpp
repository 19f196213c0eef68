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

#include "qseal/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qseal {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void expect_token(std::istream& in, const std::string& expected) {
  std::string tok;
  if (!(in >> tok) || tok != expected)
    throw std::runtime_error("parse error: expected '" + expected + "', got '" + tok + "'");
}

double read_double(std::istream& in) {
  double v;
  if (!(in >> v)) throw std::runtime_error("parse error: expected a number");
  return v;
}

long read_long(std::istream& in) {
  long v;
  if (!(in >> v)) throw std::runtime_error("parse error: expected an integer");
  return v;
}

std::uint64_t read_u64(std::istream& in) {
  std::uint64_t v;
  if (!(in >> v)) throw std::runtime_error("parse error: expected an unsigned integer");
  return v;
}

// Amplitude dump block: "amps <count>" then "<index> <re> <im>" per line.
void write_amps(std::ostream& out, const QuantumState& s) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.dimension(); ++i)
    if (std::norm(s.amplitude(i)) > 1e-24) ++count;
  out << "amps " << count << "\n";
  for (std::size_t i = 0; i < s.dimension(); ++i) {
    const Amplitude a = s.amplitude(i);
    if (std::norm(a) <= 1e-24) continue;
    out << i << " " << format_double12(a.real()) << " " << format_double12(a.imag()) << "\n";
  }
}

QuantumState read_amps(std::istream& in, int num_qubits) {
  expect_token(in, "amps");
  const long count = read_long(in);
  std::vector<Amplitude> amps(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  for (long line = 0; line < count; ++line) {
    const std::uint64_t index = read_u64(in);
    if (index >= amps.size()) throw std::runtime_error("parse error: amplitude index too large");
    const double re = read_double(in);
    const double im = read_double(in);
    amps[index] = Amplitude{re, im};
  }
  QuantumState out = QuantumState::from_amplitudes(num_qubits, std::move(amps));
  out.renormalize();
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string format_double(double value) { return fmt("%.6g", value); }
std::string format_double12(double value) { return fmt("%.12g", value); }

std::string to_csv(const ResultTable& table) {
  std::ostringstream out;
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? "," : "") << table.columns[c];
  out << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << "\n";
  }
  return out.str();
}

std::string to_json(const ResultTable& table) {
  std::ostringstream out;
  out << "[\n";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << "  {";
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? ", " : "") << "\"" << json_escape(table.columns[c]) << "\": ";
      if (c < table.numeric.size() && table.numeric[c])
        out << table.rows[r][c];
      else
        out << "\"" << json_escape(table.rows[r][c]) << "\"";
    }
    out << "}" << (r + 1 < table.rows.size() ? "," : "") << "\n";
  }
  out << "]\n";
  return out.str();
}

std::string message_to_text(const SealedMessage& message) {
  std::ostringstream out;
  out << kFormatVersion << " message\n";
  out << "block_size " << message.params().block_size << "\n";
  out << "message_count " << message.params().message_count << "\n";
  out << "blocks " << message.block_count() << "\n";
  for (int b = 0; b < message.block_count(); ++b) {
    const SealedBlock& blk = message.block(b);
    if (blk.entangled()) {
      out << "block " << b << " dense\n";
      write_amps(out, blk.to_dense());
    } else {
      out << "block " << b << " product\n";
      for (int q = 0; q < blk.num_qubits(); ++q) {
        const SingleQubit& f = blk.factors()[static_cast<std::size_t>(q)];
        out << "factor " << q << " " << format_double12(f.a0.real()) << " "
            << format_double12(f.a0.imag()) << " " << format_double12(f.a1.real()) << " "
            << format_double12(f.a1.imag()) << "\n";
      }
    }
  }
  out << "end\n";
  return out.str();
}

SealedMessage message_from_text(const std::string& text) {
  std::istringstream in(text);
  expect_token(in, kFormatVersion);
  expect_token(in, "message");
  MubSealParams params;
  expect_token(in, "block_size");
  params.block_size = static_cast<int>(read_long(in));
  expect_token(in, "message_count");
  params.message_count = static_cast<int>(read_long(in));
  expect_token(in, "blocks");
  const int block_count = static_cast<int>(read_long(in));

  std::vector<SealedBlock> blocks;
  blocks.reserve(static_cast<std::size_t>(block_count));
  for (int b = 0; b < block_count; ++b) {
    expect_token(in, "block");
    if (read_long(in) != b) throw std::runtime_error("parse error: block index mismatch");
    std::string kind;
    if (!(in >> kind)) throw std::runtime_error("parse error: missing block kind");
    if (kind == "dense") {
      blocks.push_back(SealedBlock::from_dense(read_amps(in, params.block_size)));
    } else if (kind == "product") {
      std::vector<SingleQubit> factors;
      for (int q = 0; q < params.block_size; ++q) {
        expect_token(in, "factor");
        if (read_long(in) != q) throw std::runtime_error("parse error: factor index mismatch");
        const double r0 = read_double(in), i0 = read_double(in);
        const double r1 = read_double(in), i1 = read_double(in);
        Amplitude a0{r0, i0}, a1{r1, i1};
        const double n = std::sqrt(std::norm(a0) + std::norm(a1));
        if (n <= 0.0) throw std::runtime_error("parse error: zero factor");
        factors.push_back(SingleQubit{a0 / n, a1 / n});
      }
      blocks.emplace_back(std::move(factors));
    } else {
      throw std::runtime_error("parse error: unknown block kind '" + kind + "'");
    }
  }
  expect_token(in, "end");
  return SealedMessage(params, std::move(blocks));
}

std::string secret_to_text(const SealSecret& secret) {
  std::ostringstream out;
  out << kFormatVersion << " secret\n";
  out << "block_size " << secret.params.block_size << "\n";
  out << "message_count " << secret.params.message_count << "\n";
  out << "blocks " << secret.block_count() << "\n";
  for (int b = 0; b < secret.block_count(); ++b) {
    const BlockSecret& bs = secret.blocks[static_cast<std::size_t>(b)];
    out << b << "," << bs.bit << ",";
    for (std::size_t i = 0; i < bs.perm.size(); ++i) out << (i ? " " : "") << bs.perm[i];
    out << ",";
    for (std::size_t i = 0; i < bs.sealing_values.size(); ++i)
      out << (i ? " " : "") << bs.sealing_values[i];
    out << "," << secret.seed << "\n";
  }
  out << "end\n";
  return out.str();
}

SealSecret secret_from_text(const std::string& text) {
  std::istringstream in(text);
  expect_token(in, kFormatVersion);
  expect_token(in, "secret");
  SealSecret secret;
  expect_token(in, "block_size");
  secret.params.block_size = static_cast<int>(read_long(in));
  expect_token(in, "message_count");
  secret.params.message_count = static_cast<int>(read_long(in));
  expect_token(in, "blocks");
  const int blocks = static_cast<int>(read_long(in));
  std::string line;
  std::getline(in, line);  // finish header line
  for (int b = 0; b < blocks; ++b) {
    if (!std::getline(in, line)) throw std::runtime_error("parse error: missing secret record");
    std::istringstream rec(line);
    std::string field;
    BlockSecret bs;
    std::getline(rec, field, ',');
    if (std::stoi(field) != b) throw std::runtime_error("parse error: record index mismatch");
    std::getline(rec, field, ',');
    bs.bit = std::stoi(field);
    std::getline(rec, field, ',');
    {
      std::istringstream perm(field);
      int v;
      while (perm >> v) bs.perm.push_back(v);
    }
    std::getline(rec, field, ',');
    {
      std::istringstream vals(field);
      int v;
      while (vals >> v) bs.sealing_values.push_back(v);
    }
    std::getline(rec, field, ',');
    secret.seed = std::stoull(field);
    secret.blocks.push_back(std::move(bs));
  }
  expect_token(in, "end");
  return secret;
}

std::string chau_to_text(const ChauSealInstance& instance) {
  std::ostringstream out;
  const ChauParams& p = instance.params();
  const ChauSecret& s = instance.secret();
  out << kFormatVersion << " chau\n";
  out << "css_length " << p.css_length << "\n";
  out << "css_distance " << p.css_distance << "\n";
  out << "stabilizer_length " << p.stabilizer_length << "\n";
  out << "min_distance_ratio " << format_double12(p.min_distance_ratio) << "\n";
  out << "seed " << s.seed << "\n";
  out << "withheld " << s.withheld_position << "\n";
  out << "exposed " << s.decoy_exposed_qubit << "\n";
  out << "message " << format_double12(s.message.a0.real()) << " "
      << format_double12(s.message.a0.imag()) << " " << format_double12(s.message.a1.real())
      << " " << format_double12(s.message.a1.imag()) << "\n";
  write_amps(out, instance.state());
  out << "end\n";
  return out.str();
}

ChauSealInstance chau_from_text(const std::string& text) {
  std::istringstream in(text);
  expect_token(in, kFormatVersion);
  expect_token(in, "chau");
  ChauParams params;
  expect_token(in, "css_length");
  params.css_length = static_cast<int>(read_long(in));
  expect_token(in, "css_distance");
  params.css_distance = static_cast<int>(read_long(in));
  expect_token(in, "stabilizer_length");
  params.stabilizer_length = static_cast<int>(read_long(in));
  expect_token(in, "min_distance_ratio");
  params.min_distance_ratio = read_double(in);
  ChauSecret secret;
  expect_token(in, "seed");
  secret.seed = read_u64(in);
  expect_token(in, "withheld");
  secret.withheld_position = static_cast<int>(read_long(in));
  expect_token(in, "exposed");
  secret.decoy_exposed_qubit = static_cast<int>(read_long(in));
  expect_token(in, "message");
  const double r0 = read_double(in), i0 = read_double(in);
  const double r1 = read_double(in), i1 = read_double(in);
  secret.message = SingleQubit{{r0, i0}, {r1, i1}};
  QuantumState reg = read_amps(in, params.total_qubits());
  expect_token(in, "end");

  // Rebuild the slot map from the secret and install the (possibly
  // mid-protocol) register amplitudes.
  std::vector<int> slots(static_cast<std::size_t>(params.css_length));
  for (int i = 0; i < params.css_length; ++i) slots[static_cast<std::size_t>(i)] = i;
  const int exposed = params.css_length + secret.decoy_exposed_qubit;
  slots[static_cast<std::size_t>(secret.withheld_position)] = exposed;
  std::vector<int> priv{secret.withheld_position};
  for (int q = params.css_length; q < params.total_qubits(); ++q)
    if (q != exposed) priv.push_back(q);
  return ChauSealInstance(params, steane_code(), std::move(reg), std::move(slots),
                          std::move(priv), secret);
}

std::string attack_outcome_to_json(const AttackOutcome& outcome, std::uint64_t seed) {
  std::ostringstream out;
  out << "{\"strategy\": \"" << json_escape(outcome.strategy) << "\", \"bits\": [";
  for (std::size_t i = 0; i < outcome.read_bits.size(); ++i)
    out << (i ? ", " : "") << outcome.read_bits[i];
  out << "], \"success\": [";
  for (std::size_t i = 0; i < outcome.per_block_success.size(); ++i)
    out << (i ? ", " : "") << (outcome.per_block_success[i] ? "true" : "false");
  out << "], \"aborted\": " << (outcome.aborted ? "true" : "false") << ", \"seed\": " << seed
      << "}\n";
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace qseal
