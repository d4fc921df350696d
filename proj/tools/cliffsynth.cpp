// Copyright 2026 The cliffsynth Authors
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


#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cliffsynth.hpp"

namespace {

using namespace cliffsynth;

struct Output {
  std::string out;

  // QASM goes to --out if given, otherwise stdout; the certificate then goes
  // to whichever stream the circuit did not.
  void emit(const Circuit& c, const std::string& certificate) const {
    if (out.empty()) {
      std::cout << emit_text(c);
      std::cerr << certificate << "\n";
    } else {
      write_file(out, emit_text(c));
      std::cout << certificate << "\n";
    }
  }
};

json load_json(const std::string& path) { return json::parse(read_file(path)); }

int run_synth_lnn_hfree(const std::string& input, const Output& o) {
  auto target = target_from_json(load_json(input));
  Circuit c = assemble_hfree_lnn(target);
  if (!validate_connectivity(c, Connectivity::lnn(target.n)).empty()) {
    throw std::logic_error("emitted circuit violates LNN connectivity");
  }
  int d = two_qubit_depth(expand_swaps(c));
  o.emit(c, "depth=" + std::to_string(d) + " bound=" + std::to_string(5 * target.n));
  return d <= 5 * target.n ? 0 : 1;
}

int run_synth_lnn_clifford(const std::string& input, const Output& o) {
  auto t = tableau_from_json(load_json(input));
  auto res = synth_clifford_lnn_detailed(t);
  o.emit(res.circuit, "depth=" + std::to_string(res.depth) + " bound=" + std::to_string(res.bound) +
                          " tier=" + res.tier());
  return res.within_bound() ? 0 : 1;
}

int run_synth_a2a(const std::string& input, const Output& o) {
  auto target = target_from_json(load_json(input));
  Circuit c = synth_hfree_a2a(target);
  o.emit(c, "depth=" + std::to_string(two_qubit_depth(c)) + " two_qubit_gates=" +
                std::to_string(c.count_two_qubit()));
  return 0;
}

int run_verify(const std::string& circuit_path, const std::string& target_path) {
  Circuit c = parse_text(read_file(circuit_path));
  json j = load_json(target_path);
  bool equal = false;
  if (j.contains("symplectic")) {
    auto t = tableau_from_json(j);
    if (t.n() != c.n()) throw std::invalid_argument("qubit count mismatch");
    equal = tableau_of(c) == t;
  } else {
    auto target = target_from_json(j);
    if (target.n != c.n()) throw std::invalid_argument("qubit count mismatch");
    if (c.count(GateKind::H) > 0) {
      equal = tableau_of(c) == tableau_of(naive_hfree_circuit(target));
    } else {
      equal = hfree_canonical(c) == target;
    }
  }
  std::cout << (equal ? "equal" : "different") << "\n";
  return equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Depth-oriented Clifford circuit synthesis"};
  app.require_subcommand(1);

  auto* synth = app.add_subcommand("synth", "Synthesize a circuit");
  synth->require_subcommand(1);
  std::string input;
  Output out;
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--input", input, "Target or tableau JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out.out, "Write QASM here instead of stdout");
  };
  auto* lnn_hfree = synth->add_subcommand("lnn-hfree", "Hadamard-free target over LNN");
  auto* lnn_cliff = synth->add_subcommand("lnn-clifford", "Clifford tableau over LNN");
  auto* a2a = synth->add_subcommand("a2a-hfree", "Hadamard-free target over full connectivity");
  add_io(lnn_hfree);
  add_io(lnn_cliff);
  add_io(a2a);

  auto* verify = app.add_subcommand("verify", "Check a circuit against a target or tableau");
  std::string circuit_path, target_path;
  verify->add_option("--circuit", circuit_path, "QASM circuit")->required()->check(CLI::ExistingFile);
  verify->add_option("--target", target_path, "Target or tableau JSON")->required()->check(CLI::ExistingFile);

  auto* stats = app.add_subcommand("stats", "Statistics harness");
  stats->require_subcommand(1);
  auto* insertcz = stats->add_subcommand("insertcz", "CZ-basis statistics of CNOT synthesizers");
  StatsConfig cfg;
  std::string csv_path, json_path;
  bool detail = false;
  insertcz->add_option("--synth", cfg.synthesizer, "Synthesizer name")->capture_default_str();
  insertcz->add_option("--n-min", cfg.n_min)->required();
  insertcz->add_option("--n-max", cfg.n_max)->required();
  insertcz->add_option("--samples", cfg.samples)->required();
  insertcz->add_option("--seed", cfg.seed)->required();
  insertcz->add_option("--csv", csv_path, "CSV output file");
  insertcz->add_option("--json", json_path, "JSON output file");
  insertcz->add_option("--threads", cfg.threads)->capture_default_str();
  insertcz->add_flag("--verify-all", cfg.verify_all, "Oracle-check every sample");
  insertcz->add_flag("--detail", detail, "Per-sample records in the JSON output");

  auto* sample = app.add_subcommand("sample", "Random instances");
  sample->require_subcommand(1);
  int n = 0;
  std::uint64_t seed = 0;
  std::size_t gates = 0;
  std::string sample_out;
  auto add_sample = [&](CLI::App* sub) {
    sub->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed)->required();
    sub->add_option("--out", sample_out, "Output file (stdout if omitted)");
  };
  auto* s_hfree = sample->add_subcommand("hfree", "Uniform Hadamard-free target");
  auto* s_linear = sample->add_subcommand("linear", "Uniform invertible matrix");
  auto* s_cliff = sample->add_subcommand("clifford", "Tableau of a random H/S/CNOT circuit");
  add_sample(s_hfree);
  add_sample(s_linear);
  add_sample(s_cliff);
  s_cliff->add_option("--gates", gates, "Circuit length (default 20n)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (lnn_hfree->parsed()) return run_synth_lnn_hfree(input, out);
    if (lnn_cliff->parsed()) return run_synth_lnn_clifford(input, out);
    if (a2a->parsed()) return run_synth_a2a(input, out);
    if (verify->parsed()) return run_verify(circuit_path, target_path);
    if (insertcz->parsed()) {
      auto rep = run_insertcz_stats(cfg);
      std::string csv = stats_to_csv(rep);
      if (!csv_path.empty()) write_file(csv_path, csv);
      if (!json_path.empty()) write_file(json_path, stats_to_json(rep, detail));
      if (csv_path.empty() && json_path.empty()) std::cout << csv;
      return 0;
    }
    json j;
    if (s_hfree->parsed()) {
      j = target_to_json(sample_hfree(n, seed));
    } else if (s_linear->parsed()) {
      j = {{"n", n}, {"m", sample_linear(n, seed).to_strings()}};
    } else {
      Rng rng(seed);
      j = tableau_to_json(tableau_of(random_clifford_circuit(n, gates ? gates : 20 * std::size_t(n), rng)));
    }
    std::string text = j.dump() + "\n";
    if (sample_out.empty()) {
      std::cout << text;
    } else {
      write_file(sample_out, text);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
