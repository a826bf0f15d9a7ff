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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "aqcode/code.hpp"
#include "aqcode/hamiltonian.hpp"

namespace aqcode {

/// Qubits as vertices, two-body terms as edges. Each edge records the
/// interaction types present ("XX", "ZZ", "XZ", ...), letter at the lower
/// qubit first. No self-loops; parallel terms merge into one typed edge.
struct InteractionGraph {
  std::vector<std::size_t> vertices;  // sorted qubit ids
  struct Edge {
    std::size_t u = 0, v = 0;  // u < v
    std::vector<std::string> types;  // sorted, unique
  };
  std::vector<Edge> edges;  // sorted by (u, v)

  std::size_t degree(std::size_t vertex) const;
};

/// Graph over the support of h. Weight-1 terms contribute vertices only;
/// a weight >= 3 term raises UnsupportedTermError naming it.
InteractionGraph interaction_graph(const PauliHamiltonian& h);

/// Graph of a code's weight-two operators: the logical basis plus, when
/// include_stabilizers is set, the weight-two generators (the couplings an
/// energy-penalty realization must also wire up). Higher-weight operators
/// are not edges.
InteractionGraph code_graph(const StabilizerCode& c, bool include_stabilizers = true);

std::size_t max_degree(const InteractionGraph& g);

/// Union of vertices and typed edges.
InteractionGraph merge_graphs(const InteractionGraph& a, const InteractionGraph& b);

struct PlanarityResult {
  bool planar = false;
  /// Rotation system witness: embedding[i] lists the neighbors of
  /// vertices[i] in cyclic order. Empty when not planar.
  std::vector<std::vector<std::size_t>> embedding;
  /// Edges of a K5 or K3,3 subdivision. Empty when planar.
  std::vector<std::pair<std::size_t, std::size_t>> kuratowski_edges;
};

PlanarityResult is_planar(const InteractionGraph& g);

struct Bipartition {
  std::vector<std::size_t> side_a;
  std::vector<std::size_t> side_b;
};

struct BipartitionResult {
  bool bipartite = false;
  Bipartition parts;                    // valid when bipartite
  std::vector<std::size_t> odd_cycle;   // witness when not
};

/// Two-coloring by breadth-first layering.
BipartitionResult bipartition(const InteractionGraph& g);

/// Conjugates every generator and logical by Hadamards on side_b, swapping
/// X and Z there. The bipartition must cover all physical qubits exactly
/// once. Commutation relations are invariant; applying the same transform
/// twice returns the original code bit-exactly.
StabilizerCode hadamard_transform(const StabilizerCode& c, const Bipartition& b);

}  // namespace aqcode
