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

// Command-line laboratory for quantum message sealing: seal/read/verify/
// attack single messages through files, and run seeded Monte Carlo
// experiments emitting CSV or JSON tables. Exit codes: 0 success, 1 usage
// error, 2 verification returned a broken verdict.

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qseal/attacks.hpp"
#include "qseal/scenarios.hpp"
#include "qseal/seal_chau.hpp"
#include "qseal/seal_mub.hpp"
#include "qseal/serialize.hpp"

namespace {

using namespace qseal;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBroken = 2;

struct CommonOpts {
  std::string scheme = "bp";
  std::uint64_t seed = 0;
  long trials = 1000;
  std::string out;
  std::string format = "csv";
  int block_size = 0;      // 0 = scheme default
  int message_count = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_trials = true) {
  cmd->add_option("--scheme", o.scheme, "Sealing scheme: bp, ss or chau")
      ->check(CLI::IsMember({"bp", "ss", "chau"}));
  cmd->add_option("--seed", o.seed, "Root seed; identical seeds reproduce byte-identical output");
  if (with_trials) cmd->add_option("--trials", o.trials, "Monte Carlo trials");
  cmd->add_option("--out", o.out, "Output file (defaults to stdout)");
  cmd->add_option("--format", o.format, "Table format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--block-size", o.block_size, "Qubits per message bit (bp/ss)");
  cmd->add_option("--message-count", o.message_count, "Reading-basis qubits per block (bp/ss)");
}

MubSealParams mub_params(const CommonOpts& o) {
  MubSealParams p = MubSealParams::bp();
  if (o.scheme == "ss") p = MubSealParams::ss(9, 4);
  if (o.block_size > 0) p.block_size = o.block_size;
  if (o.message_count > 0) p.message_count = o.message_count;
  p.validate();
  if (o.scheme == "ss" && 2 * p.message_count >= p.block_size)
    throw CLI::ValidationError("--message-count", "ss requires m/N < 1/2");
  return p;
}

SingleQubit parse_payload(const std::string& payload) {
  if (payload == "0") return states::zero();
  if (payload == "1") return states::one();
  if (payload == "+") return states::plus();
  if (payload == "-") return states::minus();
  throw CLI::ValidationError("--payload", "must be one of 0, 1, +, -");
}

void emit(const CommonOpts& o, const ResultTable& table) {
  const std::string text = o.format == "json" ? to_json(table) : to_csv(table);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    // Emitted files carry the format-version tag on their first line.
    write_text_file(o.out, std::string(kFormatVersion) + "\n" + text);
  }
}

ResultTable experiment_table(const ExperimentConfig& c, const ExperimentResult& r) {
  ResultTable t;
  t.columns = {"scheme",         "adversary",        "trials",
               "trials_attacked", "detection_rate",  "detection_halfwidth",
               "false_alarm_rate", "false_alarm_halfwidth", "read_accuracy",
               "accuracy_halfwidth"};
  t.numeric = {false, false, true, true, true, true, true, true, true, true};
  t.rows.push_back({scheme_name(c.scheme), adversary_name(c.adversary),
                    std::to_string(r.trials_total), std::to_string(r.trials_attacked),
                    format_double(r.detection_rate), format_double(r.detection_halfwidth),
                    format_double(r.false_alarm_rate), format_double(r.false_alarm_halfwidth),
                    format_double(r.read_accuracy), format_double(r.accuracy_halfwidth)});
  return t;
}

int cmd_seal(const CommonOpts& o, const std::string& bits_text, const std::string& payload,
             const std::string& secret_out) {
  if (o.out.empty()) throw CLI::ValidationError("--out", "seal requires an output file");
  RandomStream rng(o.seed);
  if (o.scheme == "chau") {
    const ChauSealInstance inst = chau_seal(parse_payload(payload), ChauParams{}, rng);
    write_text_file(o.out, chau_to_text(inst));
    std::cout << "sealed 1 qubit (chau): " << o.out << "\n";
    return kExitOk;
  }
  if (secret_out.empty())
    throw CLI::ValidationError("--secret-out", "bp/ss sealing requires a secret file");
  std::vector<int> bits;
  for (char c : bits_text) {
    if (c != '0' && c != '1') throw CLI::ValidationError("--bits", "must be a 0/1 string");
    bits.push_back(c - '0');
  }
  auto [msg, secret] = seal_bits(bits, mub_params(o), rng);
  write_text_file(o.out, message_to_text(msg));
  write_text_file(secret_out, secret_to_text(secret));
  std::cout << "sealed " << bits.size() << " bits (" << o.scheme << "): " << o.out << "\n";
  return kExitOk;
}

int cmd_read(const CommonOpts& o, const std::string& in, const std::string& out_file) {
  RandomStream rng(o.seed);
  const std::string target = out_file.empty() ? in : out_file;
  if (o.scheme == "chau") {
    ChauSealInstance inst = chau_from_text(read_text_file(in));
    const ChauReadResult r = chau_read_honest(inst, rng);
    write_text_file(target, chau_to_text(inst));
    if (r.aborted) {
      std::cout << "aborted\n";
    } else {
      std::cout << r.bit << "\n";
    }
    return kExitOk;
  }
  SealedMessage msg = message_from_text(read_text_file(in));
  const ReadResult r = read_majority(msg, rng);
  write_text_file(target, message_to_text(msg));
  for (std::size_t i = 0; i < r.bits.size(); ++i) std::cout << r.bits[i];
  std::cout << "\n";
  return kExitOk;
}

int cmd_verify(const CommonOpts& o, const std::string& in, const std::string& secret_file,
               double test_fraction, const std::string& indices_text, bool css_cross_check) {
  RandomStream rng(o.seed);
  if (o.scheme == "chau") {
    ChauSealInstance inst = chau_from_text(read_text_file(in));
    const ChauVerificationReport r = chau_verify(inst, rng, css_cross_check);
    write_text_file(in, chau_to_text(inst));
    const bool broken = r.verdict == Verdict::Broken;
    ResultTable t;
    t.columns = {"verdict", "decoy_checks", "css_checks"};
    t.numeric = {false, true, true};
    int decoy_bits = 0;
    for (const auto& checks : r.decoy_checks) decoy_bits += static_cast<int>(checks.size());
    t.rows.push_back({broken ? "broken" : "sealed", std::to_string(decoy_bits),
                      std::to_string(r.css_syndrome.size())});
    emit(o, t);
    return broken ? kExitBroken : kExitOk;
  }

  SealedMessage msg = message_from_text(read_text_file(in));
  const SealSecret secret = secret_from_text(read_text_file(secret_file));
  VerificationReport report;
  if (!indices_text.empty()) {
    std::vector<int> indices;
    std::string tok;
    std::istringstream stream(indices_text);
    while (std::getline(stream, tok, ',')) indices.push_back(std::stoi(tok));
    report = verify(msg, secret, indices, rng);
  } else {
    const int total = msg.total_qubits();
    const int k = static_cast<int>(std::lround(test_fraction * total));
    if (k >= total) {
      report = verify_all(msg, secret, rng);
    } else {
      // A seeded random proper subset, like a sealer choosing test positions.
      std::vector<int> pool(static_cast<std::size_t>(total));
      for (int i = 0; i < total; ++i) pool[static_cast<std::size_t>(i)] = i;
      for (int i = 0; i < k; ++i) {
        const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(total - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
      }
      pool.resize(static_cast<std::size_t>(k));
      report = verify(msg, secret, pool, rng);
    }
  }
  write_text_file(in, message_to_text(msg));

  const bool broken = report.verdict == Verdict::Broken;
  ResultTable t;
  t.columns = {"verdict", "tested", "tested_sealing", "tested_message", "detection_power"};
  t.numeric = {false, true, true, true, true};
  t.rows.push_back({broken ? "broken" : "sealed",
                    std::to_string(report.tested_indices.size()),
                    std::to_string(report.tested_sealing),
                    std::to_string(report.tested_message),
                    format_double(report.detection_power)});
  emit(o, t);
  return broken ? kExitBroken : kExitOk;
}

int cmd_attack(const CommonOpts& o, const std::string& strategy, const std::string& in,
               const std::string& out_file) {
  RandomStream rng(o.seed);
  const std::string target = out_file.empty() ? in : out_file;
  AttackOutcome out;
  if (o.scheme == "chau") {
    if (strategy != "crude_read")
      throw CLI::ValidationError("--strategy", "chau supports crude_read only");
    ChauSealInstance inst = chau_from_text(read_text_file(in));
    out = attack_crude_read_chau(inst, rng);
    write_text_file(target, chau_to_text(inst));
  } else {
    SealedMessage msg = message_from_text(read_text_file(in));
    if (strategy == "measure_resend") {
      out = attack_measure_resend(msg, rng);
    } else if (strategy == "collective") {
      out = attack_collective_majority(msg, rng);
    } else {
      throw CLI::ValidationError("--strategy", "must be measure_resend or collective");
    }
    write_text_file(target, message_to_text(msg));
  }
  if (!o.out.empty())
    write_text_file(o.out, std::string(kFormatVersion) + "\n" +
                               attack_outcome_to_json(out, o.seed));
  std::cout << out.strategy << " ";
  for (int b : out.read_bits) std::cout << b;
  std::cout << "\n";
  return kExitOk;
}

int cmd_experiment(const CommonOpts& o, const std::string& preset, const std::string& adversary,
                   double p_eve, double test_fraction, int message_bits,
                   const std::string& payload, int threads) {
  ExperimentConfig c;
  if (!preset.empty()) {
    c = experiment_preset(preset, o.trials, o.seed);
  } else {
    c.scheme = o.scheme == "bp" ? Scheme::Bp : (o.scheme == "ss" ? Scheme::Ss : Scheme::Chau);
    if (c.scheme != Scheme::Chau) c.mub = mub_params(o);
    c.message_bits = message_bits;
    c.chau_message = parse_payload(payload);
    c.trials = o.trials;
    c.seed = o.seed;
    if (adversary == "none")
      c.adversary = Adversary::None;
    else if (adversary == "measure_resend")
      c.adversary = Adversary::MeasureResend;
    else if (adversary == "collective")
      c.adversary = Adversary::Collective;
    else if (adversary == "crude_read")
      c.adversary = Adversary::CrudeRead;
    else
      throw CLI::ValidationError("--adversary", "unknown adversary");
    c.adversary_probability = p_eve;
    c.test_fraction = test_fraction;
  }
  c.threads = threads;

  const ExperimentResult r = run_eavesdrop(c);
  emit(o, experiment_table(c, r));
  std::cerr << "runtime_seconds " << format_double(r.runtime_seconds) << "\n";
  return kExitOk;
}

int cmd_curve(const CommonOpts& o, const std::string& s_values_text,
              const std::string& fractions_text) {
  if (o.scheme == "chau") {
    std::vector<double> fractions;
    std::string tok;
    std::istringstream stream(fractions_text);
    while (std::getline(stream, tok, ',')) fractions.push_back(std::stod(tok));
    const auto points = run_chau_detection_curve(ChauParams{}, fractions, o.trials, o.seed);
    ResultTable t;
    t.columns = {"public_slots_tested_fraction", "empirical_detection"};
    t.numeric = {true, true};
    for (const auto& p : points)
      t.rows.push_back({format_double(p.fraction), format_double(p.empirical)});
    emit(o, t);
    return kExitOk;
  }
  std::vector<int> s_values;
  std::string tok;
  std::istringstream stream(s_values_text);
  while (std::getline(stream, tok, ',')) s_values.push_back(std::stoi(tok));
  const auto points = run_detection_curve(mub_params(o), s_values, o.trials, o.seed);
  ResultTable t;
  t.columns = {"s", "empirical_detection", "analytic_detection"};
  t.numeric = {true, true, true};
  for (const auto& p : points)
    t.rows.push_back({std::to_string(p.tested_sealing), format_double(p.empirical),
                      format_double(p.analytic)});
  emit(o, t);
  return kExitOk;
}

int cmd_commit(const CommonOpts& o, const std::string& early_text) {
  EarlyOpen early = EarlyOpen::None;
  if (early_text == "read")
    early = EarlyOpen::Read;
  else if (early_text == "collective")
    early = EarlyOpen::Collective;
  else if (early_text != "none")
    throw CLI::ValidationError("--early-open", "must be none, read or collective");

  const CommitmentTranscript t = run_bit_commitment(o.seed, early);
  ResultTable table;
  table.columns = {"step", "actor", "action", "detail"};
  table.numeric = {true, false, false, false};
  for (std::size_t i = 0; i < t.events.size(); ++i)
    table.rows.push_back({std::to_string(i), t.events[i].actor, t.events[i].action,
                          t.events[i].detail});
  table.rows.push_back({std::to_string(t.events.size()), "harness", "summary",
                        std::string("committed=") + std::to_string(t.committed_bit) +
                            " revealed=" + std::to_string(t.revealed_bit) +
                            " detected=" + (t.detected ? "1" : "0")});
  emit(o, table);
  return kExitOk;
}

int cmd_semaphore(const CommonOpts& o, int processes, int ops) {
  const SemaphoreTrace trace = run_semaphore_demo(processes, ops, o.seed);
  if (!mutual_exclusion_holds(trace)) {
    std::cerr << "mutual exclusion violated\n";
    return kExitUsage;
  }
  ResultTable t;
  t.columns = {"round", "process", "action"};
  t.numeric = {true, true, false};
  for (const SemaphoreEvent& e : trace.events)
    t.rows.push_back({std::to_string(e.round), std::to_string(e.process),
                      semaphore_action_name(e.action)});
  emit(o, t);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qseal: a desk-scale laboratory for quantum message sealing"};
  app.require_subcommand(1);

  CommonOpts seal_opts, read_opts, verify_opts, attack_opts, exp_opts, curve_opts, commit_opts,
      sem_opts;

  // seal
  auto* seal = app.add_subcommand("seal", "Seal bits (bp/ss) or one payload qubit (chau)");
  std::string seal_bits_text = "0", seal_payload = "0", seal_secret_out;
  add_common(seal, seal_opts, false);
  seal->add_option("--bits", seal_bits_text, "Message bits, e.g. 0110 (bp/ss)");
  seal->add_option("--payload", seal_payload, "Payload state for chau: 0, 1, + or -");
  seal->add_option("--secret-out", seal_secret_out, "Secret file (bp/ss)");

  // read
  auto* read = app.add_subcommand("read", "Honest retrieval; collapses the register");
  std::string read_in, read_out;
  add_common(read, read_opts, false);
  read->add_option("--in", read_in, "Sealed message / instance file")->required();
  read->add_option("--write-to", read_out, "Post-read register file (default: overwrite --in)");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Sealer-side verification; exit 2 if broken");
  std::string verify_in, verify_secret, verify_indices;
  double verify_fraction = 1.0;
  bool verify_cross = false;
  add_common(verify_cmd, verify_opts, false);
  verify_cmd->add_option("--in", verify_in, "Sealed message / instance file")->required();
  verify_cmd->add_option("--secret", verify_secret, "Secret file (bp/ss)");
  verify_cmd->add_option("--test-fraction", verify_fraction, "Fraction of qubits to test");
  verify_cmd->add_option("--test-indices", verify_indices, "Explicit indices, e.g. 0,3,7");
  verify_cmd->add_flag("--css-cross-check", verify_cross, "Also check CSS syndromes (chau)");

  // attack
  auto* attack = app.add_subcommand("attack", "Adversarial read of a sealed file");
  std::string attack_strategy = "measure_resend", attack_in, attack_out;
  add_common(attack, attack_opts, false);
  attack->add_option("--strategy", attack_strategy,
                     "measure_resend, collective or crude_read");
  attack->add_option("--in", attack_in, "Sealed message / instance file")->required();
  attack->add_option("--write-to", attack_out, "Post-attack register file (default: --in)");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Seeded eavesdropping experiment");
  std::string exp_preset, exp_adversary = "none", exp_payload = "0";
  double exp_p_eve = 1.0, exp_fraction = 1.0;
  int exp_message_bits = 8, exp_threads = 1;
  add_common(experiment, exp_opts);
  experiment->add_option("--threads", exp_threads,
                         "Worker threads; any value emits identical statistics");
  experiment->add_option("--preset", exp_preset,
                         "Application preset: message_receipt, packaging, quiz or eavesdrop");
  experiment->add_option("--adversary", exp_adversary,
                         "none, measure_resend, collective or crude_read");
  experiment->add_option("--p-eve", exp_p_eve, "Probability a trial is attacked");
  experiment->add_option("--test-fraction", exp_fraction, "Fraction verified per trial");
  experiment->add_option("--message-bits", exp_message_bits, "Bits per sealed message");
  experiment->add_option("--payload", exp_payload, "chau payload: 0, 1, + or -");

  // curve
  auto* curve = app.add_subcommand("curve", "Detection rate vs tested qubits/checks");
  std::string curve_s = "0,1,2,4,8", curve_fractions = "0,0.2,0.4,0.6,0.8,1";
  add_common(curve, curve_opts);
  curve->add_option("--s-values", curve_s, "Tested sealing-qubit counts (bp/ss)");
  curve->add_option("--fractions", curve_fractions, "Checked fractions (chau)");

  // commit
  auto* commit = app.add_subcommand("commit", "Scripted bit-commitment flow");
  std::string commit_early = "none";
  add_common(commit, commit_opts, false);
  commit->add_option("--early-open", commit_early, "none, read or collective");

  // semaphore
  auto* semaphore = app.add_subcommand("semaphore", "Sealed-token binary semaphore demo");
  int sem_processes = 2, sem_ops = 3;
  add_common(semaphore, sem_opts, false);
  semaphore->add_option("--processes", sem_processes, "Number of processes");
  semaphore->add_option("--ops", sem_ops, "Critical sections per process");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (seal->parsed()) return cmd_seal(seal_opts, seal_bits_text, seal_payload, seal_secret_out);
    if (read->parsed()) return cmd_read(read_opts, read_in, read_out);
    if (verify_cmd->parsed())
      return cmd_verify(verify_opts, verify_in, verify_secret, verify_fraction, verify_indices,
                        verify_cross);
    if (attack->parsed()) return cmd_attack(attack_opts, attack_strategy, attack_in, attack_out);
    if (experiment->parsed())
      return cmd_experiment(exp_opts, exp_preset, exp_adversary, exp_p_eve, exp_fraction,
                            exp_message_bits, exp_payload, exp_threads);
    if (curve->parsed()) return cmd_curve(curve_opts, curve_s, curve_fractions);
    if (commit->parsed()) return cmd_commit(commit_opts, commit_early);
    if (semaphore->parsed()) return cmd_semaphore(sem_opts, sem_processes, sem_ops);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
