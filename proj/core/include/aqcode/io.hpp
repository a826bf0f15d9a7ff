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

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aqcode/code.hpp"
#include "aqcode/decoupling.hpp"
#include "aqcode/graph.hpp"
#include "aqcode/hamiltonian.hpp"

namespace aqcode {

// Pauli text is the interchange representation everywhere; see parse_pauli.
// JSON output is deterministic: keys are sorted and floats round-trip.

std::string code_to_json(const StabilizerCode& c);
StabilizerCode code_from_json(std::string_view text);
void save_code(const std::filesystem::path& path, const StabilizerCode& c);
StabilizerCode load_code(const std::filesystem::path& path);

std::string hamiltonian_to_json(const PauliHamiltonian& h);
PauliHamiltonian hamiltonian_from_json(std::string_view text);
void save_hamiltonian(const std::filesystem::path& path, const PauliHamiltonian& h);
PauliHamiltonian load_hamiltonian(const std::filesystem::path& path);

/// Everything cmd_verify reports about one code.
struct CodeAudit {
  VerificationReport verification;
  bool weight_one_detected = false;
  DistanceResult dist;
  int expected_distance = 2;

  bool passed() const;
};

std::string code_audit_to_json(const CodeAudit& audit);

std::string graph_report_to_json(const InteractionGraph& g, const PlanarityResult& planarity,
                                 const BipartitionResult& parts);
std::string graph_to_dot(const InteractionGraph& g);

std::string fidelity_records_to_jsonl(std::span<const FidelityRecord> records);
std::string fidelity_records_to_csv(std::span<const FidelityRecord> records);

/// Fit summary for a scaling sweep: slope vs tau at each pulse count, slope
/// vs pulse count at each tau, and the worst infidelity/bound^2 ratio.
std::string scaling_fits_to_json(const std::vector<std::pair<int, LogLogFit>>& tau_fits,
                                 const std::vector<std::pair<double, LogLogFit>>& nd_fits,
                                 double max_bound_ratio);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace aqcode
