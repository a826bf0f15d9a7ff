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

#include "aqcode/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "aqcode/errors.hpp"

namespace aqcode {

namespace {

class GraphBuilder {
 public:
  void add_vertex(std::size_t v) { vertices_.insert(v); }

  void add_edge(std::size_t u, std::size_t v, std::string type) {
    vertices_.insert(u);
    vertices_.insert(v);
    if (u > v) std::swap(u, v);
    edge_types_[{u, v}].insert(std::move(type));
  }

  void add_weight_two_op(const PauliString& p) {
    std::vector<std::size_t> support;
    for (std::size_t q = 0; q < p.num_qubits(); ++q) {
      if (p.letter(q) != 'I') support.push_back(q);
    }
    std::string type{p.letter(support[0]), p.letter(support[1])};
    add_edge(support[0], support[1], std::move(type));
  }

  InteractionGraph build() const {
    InteractionGraph g;
    g.vertices.assign(vertices_.begin(), vertices_.end());
    for (const auto& [pair, types] : edge_types_) {
      g.edges.push_back({pair.first, pair.second, {types.begin(), types.end()}});
    }
    return g;
  }

 private:
  std::set<std::size_t> vertices_;
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::string>> edge_types_;
};

}  // namespace

std::size_t InteractionGraph::degree(std::size_t vertex) const {
  std::size_t d = 0;
  for (const Edge& e : edges) {
    if (e.u == vertex || e.v == vertex) ++d;
  }
  return d;
}

InteractionGraph interaction_graph(const PauliHamiltonian& h) {
  GraphBuilder builder;
  for (const PauliTerm& t : h.canonicalized().terms()) {
    const std::size_t w = t.op.weight();
    if (w >= 3) {
      throw UnsupportedTermError("term " + format_pauli(t.op) +
                                 " has weight " + std::to_string(w) +
                                 "; interaction graphs need weight <= 2");
    }
    if (w == 2) {
      builder.add_weight_two_op(t.op);
    } else if (w == 1) {
      for (std::size_t q = 0; q < t.op.num_qubits(); ++q) {
        if (t.op.letter(q) != 'I') builder.add_vertex(q);
      }
    }
  }
  return builder.build();
}

InteractionGraph code_graph(const StabilizerCode& c, bool include_stabilizers) {
  GraphBuilder builder;
  auto feed = [&](const std::vector<PauliString>& ops) {
    for (const PauliString& p : ops) {
      if (p.weight() == 2) builder.add_weight_two_op(p);
    }
  };
  feed(c.logical_x);
  feed(c.logical_z);
  if (include_stabilizers) feed(c.generators);
  return builder.build();
}

InteractionGraph merge_graphs(const InteractionGraph& a, const InteractionGraph& b) {
  GraphBuilder builder;
  for (const InteractionGraph* g : {&a, &b}) {
    for (std::size_t v : g->vertices) builder.add_vertex(v);
    for (const auto& e : g->edges) {
      for (const std::string& type : e.types) builder.add_edge(e.u, e.v, type);
    }
  }
  return builder.build();
}

std::size_t max_degree(const InteractionGraph& g) {
  std::map<std::size_t, std::size_t> deg;
  for (const auto& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::size_t best = 0;
  for (const auto& [v, d] : deg) best = std::max(best, d);
  return best;
}

PlanarityResult is_planar(const InteractionGraph& g) {
  using BoostGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                            boost::property<boost::edge_index_t, std::size_t>>;
  const std::size_t nv = g.vertices.size();
  std::map<std::size_t, std::size_t> index_of;
  for (std::size_t i = 0; i < nv; ++i) index_of[g.vertices[i]] = i;

  BoostGraph bg(nv);
  std::size_t edge_index = 0;
  for (const auto& e : g.edges) {
    boost::add_edge(index_of.at(e.u), index_of.at(e.v), edge_index++, bg);
  }

  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding_storage(nv);
  std::vector<EdgeDesc> kuratowski;

  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding_storage.begin(),
                                            boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  // Euler bound cross-check: a simple planar graph on >= 3 vertices cannot
  // exceed 3V - 6 edges.
  if (planar && nv >= 3 && g.edges.size() > 3 * nv - 6) {
    throw CodeInconsistencyError("planarity test accepted a graph above the edge bound");
  }

  PlanarityResult result;
  result.planar = planar;
  if (planar) {
    result.embedding.resize(nv);
    for (std::size_t i = 0; i < nv; ++i) {
      for (const EdgeDesc& e : embedding_storage[i]) {
        const std::size_t s = boost::source(e, bg), t = boost::target(e, bg);
        result.embedding[i].push_back(g.vertices[s == i ? t : s]);
      }
    }
  } else {
    for (const EdgeDesc& e : kuratowski) {
      result.kuratowski_edges.emplace_back(g.vertices[boost::source(e, bg)],
                                           g.vertices[boost::target(e, bg)]);
    }
  }
  return result;
}

BipartitionResult bipartition(const InteractionGraph& g) {
  const std::size_t nv = g.vertices.size();
  std::map<std::size_t, std::size_t> index_of;
  for (std::size_t i = 0; i < nv; ++i) index_of[g.vertices[i]] = i;
  std::vector<std::vector<std::size_t>> adj(nv);
  for (const auto& e : g.edges) {
    adj[index_of.at(e.u)].push_back(index_of.at(e.v));
    adj[index_of.at(e.v)].push_back(index_of.at(e.u));
  }

  std::vector<int> color(nv, -1);
  std::vector<std::size_t> parent(nv, SIZE_MAX);
  for (std::size_t root = 0; root < nv; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          // Same-color edge closes an odd cycle through the BFS tree: walk
          // both endpoints up to their lowest common ancestor.
          std::vector<std::size_t> pu{u}, pv{v};
          for (std::size_t a = u; a != root && parent[a] != SIZE_MAX; a = parent[a]) pu.push_back(parent[a]);
          for (std::size_t a = v; a != root && parent[a] != SIZE_MAX; a = parent[a]) pv.push_back(parent[a]);
          std::size_t iu = pu.size(), iv = pv.size();
          while (iu > 0 && iv > 0 && pu[iu - 1] == pv[iv - 1]) {
            --iu;
            --iv;
          }
          BipartitionResult res;
          res.bipartite = false;
          for (std::size_t i = 0; i <= iu && i < pu.size(); ++i) res.odd_cycle.push_back(g.vertices[pu[i]]);
          for (std::size_t i = iv; i-- > 0;) res.odd_cycle.push_back(g.vertices[pv[i]]);
          return res;
        }
      }
    }
  }

  BipartitionResult res;
  res.bipartite = true;
  for (std::size_t i = 0; i < nv; ++i) {
    (color[i] == 0 ? res.parts.side_a : res.parts.side_b).push_back(g.vertices[i]);
  }
  return res;
}

StabilizerCode hadamard_transform(const StabilizerCode& c, const Bipartition& b) {
  std::vector<char> seen(c.n, 0);
  auto mark = [&](const std::vector<std::size_t>& side) {
    for (std::size_t q : side) {
      if (q >= c.n || seen[q]) {
        throw ParameterError("bipartition does not partition the physical qubits");
      }
      seen[q] = 1;
    }
  };
  mark(b.side_a);
  mark(b.side_b);
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw ParameterError("bipartition does not cover all physical qubits");
  }

  BitVec mask(c.n);
  for (std::size_t q : b.side_b) mask.set(q);

  auto transform = [&](const PauliString& p) {
    BitVec keep_x = p.x_bits(), keep_z = p.z_bits();
    BitVec swap_x = keep_x, swap_z = keep_z;
    // H X H = Z and H Z H = X on the masked qubits; a masked XZ factor picks
    // up a sign (HXZH = ZX = -XZ).
    const int phase =
        p.phase() + 2 * static_cast<int>(BitVec::popcount_and(p.x_bits() & p.z_bits(), mask));
    swap_x &= mask;
    swap_z &= mask;
    for (std::size_t q : b.side_b) {
      keep_x.set(q, false);
      keep_z.set(q, false);
    }
    return PauliString::from_bits(keep_x | swap_z, keep_z | swap_x, phase);
  };

  StabilizerCode out;
  out.n = c.n;
  out.k = c.k;
  out.labels = c.labels;
  for (const PauliString& g : c.generators) out.generators.push_back(transform(g));
  for (const PauliString& l : c.logical_x) out.logical_x.push_back(transform(l));
  for (const PauliString& l : c.logical_z) out.logical_z.push_back(transform(l));

  auto pure = [](const PauliString& p) { return !p.x_bits().any() || !p.z_bits().any(); };
  out.css = std::all_of(out.generators.begin(), out.generators.end(), pure) &&
            std::all_of(out.logical_x.begin(), out.logical_x.end(), pure) &&
            std::all_of(out.logical_z.begin(), out.logical_z.end(), pure);
  return out;
}

}  // namespace aqcode
