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

#include "aqcode/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "aqcode/errors.hpp"

namespace aqcode {

namespace {

using nlohmann::json;
using ordered = nlohmann::ordered_json;

json parse_json(std::string_view text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError(std::string("malformed JSON in ") + what);
  return j;
}

std::vector<PauliString> parse_pauli_array(const json& arr, std::size_t n, const char* field) {
  if (!arr.is_array()) throw ParseError(std::string(field) + " must be an array");
  std::vector<PauliString> out;
  out.reserve(arr.size());
  for (const json& item : arr) {
    if (!item.is_string()) throw ParseError(std::string(field) + " entries must be Pauli text");
    out.push_back(parse_pauli(item.get<std::string>(), n));
  }
  return out;
}

json pauli_array(const std::vector<PauliString>& ops) {
  json arr = json::array();
  for (const PauliString& p : ops) arr.push_back(format_pauli(p));
  return arr;
}

}  // namespace

std::string code_to_json(const StabilizerCode& c) {
  json j;
  j["n"] = c.n;
  j["k"] = c.k;
  j["css"] = c.css;
  j["generators"] = pauli_array(c.generators);
  j["logical_x"] = pauli_array(c.logical_x);
  j["logical_z"] = pauli_array(c.logical_z);
  if (!c.labels.empty()) {
    json labels = json::array();
    for (const QubitLabel& l : c.labels) {
      labels.push_back({{"logical", l.logical_index}, {"role", to_string(l.role)}});
    }
    j["labels"] = labels;
  }
  return j.dump(2) + "\n";
}

StabilizerCode code_from_json(std::string_view text) {
  const json j = parse_json(text, "code file");
  try {
    StabilizerCode c;
    c.n = j.at("n").get<std::size_t>();
    c.k = j.at("k").get<std::size_t>();
    c.css = j.at("css").get<bool>();
    c.generators = parse_pauli_array(j.at("generators"), c.n, "generators");
    c.logical_x = parse_pauli_array(j.at("logical_x"), c.n, "logical_x");
    c.logical_z = parse_pauli_array(j.at("logical_z"), c.n, "logical_z");
    if (j.contains("labels")) {
      std::size_t flat = 0;
      for (const json& l : j.at("labels")) {
        c.labels.push_back(QubitLabel{l.at("logical").get<int>(),
                                      qubit_role_from_string(l.at("role").get<std::string>()),
                                      flat++});
      }
      if (c.labels.size() != c.n) throw ParseError("labels must list every physical qubit");
    }
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad code file: ") + e.what());
  }
}

std::string hamiltonian_to_json(const PauliHamiltonian& h) {
  json j;
  j["n"] = h.num_qubits();
  json terms = json::array();
  for (const PauliTerm& t : h.canonicalized().terms()) {
    terms.push_back({{"coeff", t.coeff}, {"pauli", format_pauli(t.op)}});
  }
  j["terms"] = terms;
  return j.dump(2) + "\n";
}

PauliHamiltonian hamiltonian_from_json(std::string_view text) {
  const json j = parse_json(text, "hamiltonian file");
  try {
    PauliHamiltonian h(j.at("n").get<std::size_t>());
    for (const json& t : j.at("terms")) {
      h.add_term(t.at("coeff").get<double>(),
                 parse_pauli(t.at("pauli").get<std::string>(), h.num_qubits()));
    }
    return h.canonicalized();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad hamiltonian file: ") + e.what());
  }
}

bool CodeAudit::passed() const {
  return verification.all_pass() && weight_one_detected && dist.distance.has_value() &&
         *dist.distance == expected_distance;
}

std::string code_audit_to_json(const CodeAudit& audit) {
  json j;
  json checks = json::array();
  for (const VerificationCheck& c : audit.verification.checks) {
    json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  j["checks"] = checks;
  j["weight_one_detected"] = audit.weight_one_detected;
  json dist;
  dist["max_weight"] = audit.dist.max_weight;
  if (audit.dist.distance) {
    dist["value"] = *audit.dist.distance;
  } else {
    dist["value"] = nullptr;
    dist["note"] = "greater than max_weight";
  }
  if (audit.dist.witness) dist["witness"] = format_pauli(*audit.dist.witness);
  j["distance"] = dist;
  j["expected_distance"] = audit.expected_distance;
  j["pass"] = audit.passed();
  return j.dump(2) + "\n";
}

std::string graph_report_to_json(const InteractionGraph& g, const PlanarityResult& planarity,
                                 const BipartitionResult& parts) {
  json j;
  j["vertices"] = g.vertices;
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"types", e.types}});
  }
  j["edges"] = edges;
  j["max_degree"] = max_degree(g);
  j["planar"] = planarity.planar;
  if (planarity.planar) {
    json emb = json::object();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      emb[std::to_string(g.vertices[i])] = planarity.embedding[i];
    }
    j["witness"]["embedding"] = emb;
  } else {
    json kur = json::array();
    for (const auto& [u, v] : planarity.kuratowski_edges) kur.push_back({u, v});
    j["witness"]["kuratowski_edges"] = kur;
  }
  j["bipartite"] = parts.bipartite;
  if (parts.bipartite) {
    j["witness"]["side_a"] = parts.parts.side_a;
    j["witness"]["side_b"] = parts.parts.side_b;
  } else {
    j["witness"]["odd_cycle"] = parts.odd_cycle;
  }
  return j.dump(2) + "\n";
}

std::string graph_to_dot(const InteractionGraph& g) {
  std::ostringstream out;
  out << "graph interactions {\n";
  for (std::size_t v : g.vertices) out << "  q" << v << ";\n";
  for (const auto& e : g.edges) {
    out << "  q" << e.u << " -- q" << e.v << " [label=\"";
    for (std::size_t i = 0; i < e.types.size(); ++i) {
      if (i > 0) out << ",";
      out << e.types[i];
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string fidelity_records_to_jsonl(std::span<const FidelityRecord> records) {
  std::ostringstream out;
  for (const FidelityRecord& r : records) {
    json j{{"tau", r.tau}, {"n_d", r.n_pulses}, {"infidelity", r.infidelity}, {"bound", r.bound}};
    out << j.dump() << "\n";
  }
  return out.str();
}

std::string fidelity_records_to_csv(std::span<const FidelityRecord> records) {
  std::ostringstream out;
  out << "tau,n_d,infidelity,bound\n";
  out.precision(17);
  for (const FidelityRecord& r : records) {
    out << r.tau << "," << r.n_pulses << "," << r.infidelity << "," << r.bound << "\n";
  }
  return out.str();
}

std::string scaling_fits_to_json(const std::vector<std::pair<int, LogLogFit>>& tau_fits,
                                 const std::vector<std::pair<double, LogLogFit>>& nd_fits,
                                 double max_bound_ratio) {
  json j;
  json tf = json::array();
  for (const auto& [nd, fit] : tau_fits) {
    tf.push_back({{"n_d", nd}, {"slope", fit.slope}, {"intercept", fit.intercept}, {"r2", fit.r2}});
  }
  json nf = json::array();
  for (const auto& [tau, fit] : nd_fits) {
    nf.push_back({{"tau", tau}, {"slope", fit.slope}, {"intercept", fit.intercept}, {"r2", fit.r2}});
  }
  j["infidelity_vs_tau"] = tf;
  j["infidelity_vs_nd"] = nf;
  j["max_bound_ratio"] = max_bound_ratio;
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

void save_code(const std::filesystem::path& path, const StabilizerCode& c) {
  write_text_file(path, code_to_json(c));
}

StabilizerCode load_code(const std::filesystem::path& path) {
  return code_from_json(read_text_file(path));
}

void save_hamiltonian(const std::filesystem::path& path, const PauliHamiltonian& h) {
  write_text_file(path, hamiltonian_to_json(h));
}

PauliHamiltonian load_hamiltonian(const std::filesystem::path& path) {
  return hamiltonian_from_json(read_text_file(path));
}

}  // namespace aqcode
