// Copyright 2026 The aqcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aqcode/code.hpp"
#include "aqcode/decoupling.hpp"
#include "aqcode/errors.hpp"
#include "aqcode/graph.hpp"
#include "aqcode/hamiltonian.hpp"
#include "aqcode/io.hpp"
#include "aqcode/simulate.hpp"
#include "aqcode/statevector.hpp"

namespace {

using namespace aqcode;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::uint64_t budget_or_env(std::uint64_t flag_value, bool flag_given) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("AQCODE_ENUM_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw ParameterError("AQCODE_ENUM_BUDGET must be a positive integer");
    }
    return v;
  }
  return flag_value;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

StabilizerCode build_family(const std::string& family, int k) {
  return family == "gottesman" ? build_gottesman(k) : build_6k2k2(k);
}

int cmd_build(const std::string& family, int k, const std::string& out) {
  save_code(out, build_family(family, k));
  std::cerr << "wrote " << family << " code with k=" << k << " to " << out << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& code_path, int max_weight, std::uint64_t budget,
               int expect_distance, const std::string& out) {
  const StabilizerCode c = load_code(code_path);
  CodeAudit audit;
  audit.verification = verify_code(c);
  audit.weight_one_detected = detects_all_weight_one(c);
  audit.dist = distance(c, max_weight, budget);
  audit.expected_distance = expect_distance;
  emit(code_audit_to_json(audit), out);
  return audit.passed() ? kExitOk : kExitCheckFailure;
}

int cmd_encode(const std::string& h_path, const std::string& code_path, const std::string& out,
               const std::string& report_path) {
  const PauliHamiltonian h = load_hamiltonian(h_path);
  const StabilizerCode c = load_code(code_path);
  const PauliHamiltonian encoded = encode_hamiltonian(h, c);
  save_hamiltonian(out, encoded);

  json report;
  report["logical_terms"] = h.canonicalized().terms().size();
  report["encoded_terms"] = encoded.terms().size();
  json violations = json::array();
  for (const PauliTerm& t : encoded.terms()) {
    for (const PauliString& g : c.generators) {
      if (!t.op.commutes_with(g)) {
        violations.push_back({{"term", format_pauli(t.op)}, {"generator", format_pauli(g)}});
      }
    }
  }
  report["commutation_violations"] = violations;
  report["all_terms_commute"] = violations.empty();
  emit(report.dump(2) + "\n", report_path);
  return violations.empty() ? kExitOk : kExitCheckFailure;
}

int cmd_graph(const std::string& h_path, const std::string& code_path, bool include_stabilizers,
              const std::string& out, const std::string& dot_path, const std::string& format) {
  InteractionGraph g;
  bool have = false;
  if (!h_path.empty()) {
    g = interaction_graph(load_hamiltonian(h_path));
    have = true;
  }
  if (!code_path.empty()) {
    const InteractionGraph cg = code_graph(load_code(code_path), include_stabilizers);
    g = have ? merge_graphs(g, cg) : cg;
    have = true;
  }
  if (!have) throw ParameterError("graph needs --hamiltonian and/or --code");

  if (format == "dot") {
    emit(graph_to_dot(g), out);
    return kExitOk;
  }
  emit(graph_report_to_json(g, is_planar(g), bipartition(g)), out);
  if (!dot_path.empty()) write_text_file(dot_path, graph_to_dot(g));
  return kExitOk;
}

int cmd_simulate_init(int k, const std::string& out) {
  const StabilizerCode c = build_6k2k2(k);
  const StateVector psi = build_initial_state(k);

  auto stabilized_by = [&](const PauliString& p, double& deviation) {
    const StateVector applied = apply_pauli(p, psi);
    double max_dev = 0.0;
    for (std::size_t i = 0; i < psi.dim(); ++i) {
      max_dev = std::max(max_dev, std::abs(psi.amplitude(i) - applied.amplitude(i)));
    }
    deviation = max_dev;
    return max_dev < 1e-10;
  };

  bool all_pass = true;
  json report;
  report["k"] = k;
  report["n"] = c.n;
  json gens = json::array();
  for (const PauliString& g : c.generators) {
    double dev = 0.0;
    const bool ok = stabilized_by(g, dev);
    all_pass = all_pass && ok;
    gens.push_back({{"operator", format_pauli(g)},
                    {"eigenvalue", pauli_expectation(g, psi).real()},
                    {"deviation", dev},
                    {"pass", ok}});
  }
  report["generators"] = gens;

  json pairs = json::array();
  const std::size_t n = c.n;
  for (int i = 1; i <= k; ++i) {
    const std::size_t a = triple_flat_index(2 * i - 1, QubitRole::Mid);
    const std::size_t b = triple_flat_index(2 * i, QubitRole::Mid);
    for (const PauliString& p :
         {PauliString::x_on(n, {a, b}), PauliString::z_on(n, {a, b})}) {
      double dev = 0.0;
      const bool ok = stabilized_by(p, dev);
      all_pass = all_pass && ok;
      pairs.push_back({{"operator", format_pauli(p)},
                       {"eigenvalue", pauli_expectation(p, psi).real()},
                       {"deviation", dev},
                       {"pass", ok}});
    }
  }
  report["logical_pairs"] = pairs;

  const RestrictedSpectrum spectrum = codespace_spectrum(initial_hamiltonian(k), c);
  const double gap = spectrum.eigenvalues.size() > 1
                         ? spectrum.eigenvalues[1] - spectrum.eigenvalues[0]
                         : 0.0;
  const bool unique = gap > 1e-9;
  const double ground_overlap = psi.overlap(spectrum.eigenvectors.front());
  all_pass = all_pass && unique && ground_overlap > 1.0 - 1e-9;
  report["codespace"] = {{"eigenvalues", spectrum.eigenvalues},
                         {"gap", gap},
                         {"unique_ground", unique},
                         {"initial_state_ground_overlap", ground_overlap}};
  report["all_pass"] = all_pass;
  emit(report.dump(2) + "\n", out);
  return all_pass ? kExitOk : kExitCheckFailure;
}

int cmd_simulate_cat(int m, const std::string& basis_name, double total_time, int steps,
                     const std::string& out) {
  const Basis basis = basis_name == "x" ? Basis::X : Basis::Z;
  const CatPrepResult result = prepare_cat(m, basis, total_time, steps);
  const bool pass = result.cat_overlap > 0.99 && result.conserved_drift < 1e-6;
  json report{{"m", m},
              {"basis", basis_name},
              {"T", total_time},
              {"steps", steps},
              {"cat_overlap", result.cat_overlap},
              {"conserved_drift", result.conserved_drift},
              {"pass", pass}};
  emit(report.dump(2) + "\n", out);
  return pass ? kExitOk : kExitCheckFailure;
}

PauliHamiltonian default_dd_hamiltonian(int k, double penalty, const std::string& h_path,
                                        const StabilizerCode& code) {
  PauliHamiltonian logical(2 * static_cast<std::size_t>(k));
  if (!h_path.empty()) {
    logical = load_hamiltonian(h_path);
  } else {
    // Transverse-field Ising chain over the logical qubits.
    const std::size_t m = logical.num_qubits();
    for (std::size_t q = 0; q < m; ++q) logical.add_term(0.5, PauliString::single(m, q, 'X'));
    for (std::size_t q = 0; q + 1 < m; ++q) {
      logical.add_term(0.25, PauliString::z_on(m, {q, q + 1}));
    }
  }
  PauliHamiltonian h = encode_hamiltonian(logical, code);
  if (penalty > 0.0) h += penalty_hamiltonian(code, penalty);
  return h.canonicalized();
}

int cmd_simulate_dd(int k, std::vector<double> taus, std::vector<int> nds, double penalty,
                    const std::string& h_path, const std::string& out,
                    const std::string& fit_path, const std::string& format, long long seed) {
  const StabilizerCode code = build_6k2k2(k);
  const PauliHamiltonian h = default_dd_hamiltonian(k, penalty, h_path, code);
  const std::vector<FidelityRecord> records = dd_scaling_experiment(k, h, taus, nds);

  emit(format == "csv" ? fidelity_records_to_csv(records) : fidelity_records_to_jsonl(records),
       out);

  std::vector<std::pair<int, LogLogFit>> tau_fits;
  std::sort(nds.begin(), nds.end());
  nds.erase(std::unique(nds.begin(), nds.end()), nds.end());
  for (int nd : nds) {
    std::vector<double> xs, ys;
    for (const FidelityRecord& r : records) {
      if (r.n_pulses == nd && r.infidelity > 0.0) {
        xs.push_back(r.tau);
        ys.push_back(r.infidelity);
      }
    }
    if (xs.size() >= 2) tau_fits.push_back({nd, fit_loglog(xs, ys)});
  }
  std::vector<std::pair<double, LogLogFit>> nd_fits;
  std::vector<double> taus_sorted = taus;
  std::sort(taus_sorted.begin(), taus_sorted.end());
  for (double tau : taus_sorted) {
    std::vector<double> xs, ys;
    for (const FidelityRecord& r : records) {
      if (r.tau == tau && r.n_pulses > 0 && r.infidelity > 0.0) {
        xs.push_back(r.n_pulses);
        ys.push_back(r.infidelity);
      }
    }
    if (xs.size() >= 2) nd_fits.push_back({tau, fit_loglog(xs, ys)});
  }
  double max_ratio = 0.0;
  for (const FidelityRecord& r : records) {
    if (r.n_pulses > 0 && r.bound > 0.0) {
      max_ratio = std::max(max_ratio, r.infidelity / (r.bound * r.bound));
    }
  }

  json fits = json::parse(scaling_fits_to_json(tau_fits, nd_fits, max_ratio));
  fits["seed"] = seed;
  fits["penalty"] = penalty;
  const std::string fits_text = fits.dump(2) + "\n";
  if (!fit_path.empty()) {
    write_text_file(fit_path, fits_text);
  } else if (!out.empty()) {
    std::cout << fits_text;
  } else {
    std::cerr << fits_text;  // records own stdout
  }
  return kExitOk;
}

int cmd_demo(const std::string& out_dir) {
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  const auto path = [&](const char* name) { return (fs::path(out_dir) / name).string(); };
  int worst = kExitOk;
  auto stage = [&](const char* name, int code) {
    std::cerr << (code == kExitOk ? "ok   " : "FAIL ") << name << "\n";
    worst = std::max(worst, code);
  };

  stage("build 6k2k2 k=1", cmd_build("6k2k2", 1, path("code_6k2k2_k1.json")));
  stage("build gottesman k=1", cmd_build("gottesman", 1, path("code_gottesman_k1.json")));
  stage("verify 6k2k2 k=1",
        cmd_verify(path("code_6k2k2_k1.json"), 3, kDefaultEnumBudget, 2,
                   path("verify_6k2k2_k1.json")));
  stage("verify gottesman k=1",
        cmd_verify(path("code_gottesman_k1.json"), 3, kDefaultEnumBudget, 2,
                   path("verify_gottesman_k1.json")));

  {
    PauliHamiltonian h(2);
    h.add_term(0.5, PauliString::single(2, 0, 'X'));
    h.add_term(0.25, PauliString::z_on(2, {0, 1}));
    save_hamiltonian(path("problem.json"), h);
  }
  stage("encode problem", cmd_encode(path("problem.json"), path("code_6k2k2_k1.json"),
                                     path("encoded.json"), path("encode_report.json")));
  stage("graph encoded + penalties",
        cmd_graph(path("encoded.json"), path("code_6k2k2_k1.json"), true,
                  path("graph_report.json"), path("graph.dot"), "json"));

  {
    const StabilizerCode c = load_code(path("code_6k2k2_k1.json"));
    Bipartition parts;
    for (std::size_t q = 0; q < c.n; ++q) {
      (q % 2 == 0 ? parts.side_a : parts.side_b).push_back(q);
    }
    save_code(path("transformed.json"), hadamard_transform(c, parts));
  }
  stage("verify hadamard transform",
        cmd_verify(path("transformed.json"), 3, kDefaultEnumBudget, 2,
                   path("verify_transformed.json")));

  stage("simulate init k=1", cmd_simulate_init(1, path("init_report.json")));
  stage("simulate cat m=4", cmd_simulate_cat(4, "z", 64.0, 512, path("cat_report.json")));
  stage("simulate dd k=1",
        cmd_simulate_dd(1, {0.02, 0.04, 0.08, 0.16}, {0, 4, 8}, 1.0, "",
                        path("dd_records.jsonl"), path("dd_fits.json"), "jsonl", 0));
  std::cerr << "demo artifacts in " << out_dir << "\n";
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructs, audits and simulates the [[6k,2k,2]] and [[2k+2,2k,2]]\n"
               "error-detecting code families for adiabatic quantum computation."};
  app.require_subcommand(1);
  long long seed = 0;
  app.add_option("--seed", seed, "Seed echoed into sweep reports (runs are deterministic)");

  std::function<int()> action;

  // build <family> --k K --out PATH
  std::string family, out_path;
  int k = 1;
  auto* build = app.add_subcommand("build", "Construct a code and write its JSON description");
  build->add_option("family", family, "Code family")
      ->required()
      ->check(CLI::IsMember({"6k2k2", "gottesman"}));
  build->add_option("--k", k, "Family index k >= 1")->required();
  build->add_option("--out", out_path, "Output code JSON path")->required();
  build->callback([&] { action = [=] { return cmd_build(family, k, out_path); }; });

  // verify <code> [--max-weight] [--budget] [--expect-distance] [--out]
  std::string code_path;
  int max_weight = 3;
  std::uint64_t budget = kDefaultEnumBudget;
  bool budget_given = false;
  int expect_distance = 2;
  auto* verify = app.add_subcommand("verify", "Check code invariants, weight-1 detection and distance");
  verify->add_option("code", code_path, "Code JSON path")->required();
  verify->add_option("--max-weight", max_weight, "Largest error weight to enumerate (default 3)");
  verify->add_option("--budget", budget, "Enumeration budget (or env AQCODE_ENUM_BUDGET)")
      ->each([&](const std::string&) { budget_given = true; });
  verify->add_option("--expect-distance", expect_distance,
                     "Distance the exit status asserts (default 2)");
  verify->add_option("--out", out_path, "Report path (default stdout)");
  verify->callback([&] {
    action = [=] {
      return cmd_verify(code_path, max_weight, budget_or_env(budget, budget_given),
                        expect_distance, out_path);
    };
  });

  // encode --hamiltonian H --code C --out OUT [--report R]
  std::string h_path, report_path;
  auto* encode = app.add_subcommand("encode", "Map a 2-local logical Hamiltonian through a code");
  encode->add_option("--hamiltonian", h_path, "Logical Hamiltonian JSON")->required();
  encode->add_option("--code", code_path, "Code JSON (6k2k2 family)")->required();
  encode->add_option("--out", out_path, "Encoded Hamiltonian output path")->required();
  encode->add_option("--report", report_path, "Commutation audit path (default stdout)");
  encode->callback([&] {
    action = [=] { return cmd_encode(h_path, code_path, out_path, report_path); };
  });

  // graph [--hamiltonian H] [--code C] [--no-stabilizers] [--out R] [--dot D] [--format]
  std::string dot_path, format = "json";
  bool no_stabilizers = false;
  auto* graph = app.add_subcommand("graph", "Interaction-graph audit: degree, planarity, bipartiteness");
  graph->add_option("--hamiltonian", h_path, "Hamiltonian JSON to analyze");
  graph->add_option("--code", code_path, "Code JSON whose weight-2 operators join the graph");
  graph->add_flag("--no-stabilizers", no_stabilizers,
                  "Exclude weight-2 stabilizer (penalty) edges from the code graph");
  graph->add_option("--out", out_path, "Report path (default stdout)");
  graph->add_option("--dot", dot_path, "Also write a DOT file here");
  graph->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "dot"}));
  graph->callback([&] {
    action = [=] {
      return cmd_graph(h_path, code_path, !no_stabilizers, out_path, dot_path, format);
    };
  });

  // simulate init|cat|dd
  auto* simulate = app.add_subcommand("simulate", "Desk-scale statevector experiments");
  simulate->require_subcommand(1);

  auto* init = simulate->add_subcommand("init", "Verify the encoded initial state");
  init->add_option("--k", k, "Family index (6k <= 12)")->required();
  init->add_option("--out", out_path, "Report path (default stdout)");
  init->callback([&] { action = [=] { return cmd_simulate_init(k, out_path); }; });

  int m = 4, steps = 256;
  double total_time = 32.0;
  std::string basis = "z";
  auto* cat = simulate->add_subcommand("cat", "Adiabatic cat-state preparation");
  cat->add_option("--m", m, "Qubit count, 2..12")->required();
  cat->add_option("--basis", basis, "Cat basis")->check(CLI::IsMember({"x", "z"}));
  cat->add_option("--T", total_time, "Total anneal time (default 32)");
  cat->add_option("--steps", steps, "Propagation slices (default 256)");
  cat->add_option("--out", out_path, "Report path (default stdout)");
  cat->callback([&] {
    action = [=] { return cmd_simulate_cat(m, basis, total_time, steps, out_path); };
  });

  std::vector<double> taus{0.02, 0.04, 0.08, 0.16};
  std::vector<int> nds{0, 4, 8, 16, 32};
  double penalty = 1.0;
  std::string fit_path;
  auto* dd = simulate->add_subcommand("dd", "Decoupling-pulse error scaling experiment");
  dd->add_option("--k", k, "Family index (6k <= 12)")->required();
  dd->add_option("--taus", taus, "Pulse durations")->delimiter(',');
  dd->add_option("--nd", nds, "Pulse counts to record")->delimiter(',');
  dd->add_option("--penalty", penalty, "Penalty strength added to the encoded Hamiltonian (0 = none)");
  dd->add_option("--hamiltonian", h_path, "Logical Hamiltonian JSON (default: small TFI chain)");
  dd->add_option("--out", out_path, "Records path (default stdout)");
  dd->add_option("--fit", fit_path, "Fit summary path");
  dd->add_option("--format", format, "Records format")->check(CLI::IsMember({"json", "csv"}));
  dd->callback([&] {
    action = [=] {
      return cmd_simulate_dd(k, taus, nds, penalty, h_path, out_path, fit_path,
                             format == "csv" ? "csv" : "jsonl", seed);
    };
  });

  // demo
  std::string out_dir = "demo_out";
  auto* demo = app.add_subcommand("demo", "Run the full k=1 pipeline end to end");
  demo->add_option("--out-dir", out_dir, "Artifact directory (default demo_out)");
  demo->callback([&] { action = [=] { return cmd_demo(out_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const CodeInconsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const CodeInconsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
