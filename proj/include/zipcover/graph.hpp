// Copyright 2026 The zipcover Authors
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

#ifndef ZIPCOVER_GRAPH_HPP_
#define ZIPCOVER_GRAPH_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace zipcover {

// Simple undirected graph over string vertex ids.  Vertex ids are kept
// in sorted order and all iteration derives from that order, so every
// result built on top of a Graph is deterministic.
class Graph {
 public:
  Graph() = default;
  // Vertices are deduplicated and sorted.  Edges may be given in any
  // order; duplicates collapse.  Self-loops and references to unknown
  // vertices raise FormatError.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  int n() const { return static_cast<int>(ids_.size()); }
  int edge_count() const;

  const std::vector<std::string>& vertex_ids() const { return ids_; }
  const std::string& id_of(int v) const { return ids_[v]; }
  // -1 when the id is not a vertex.
  int index_of(const std::string& id) const;

  bool has_vertex(const std::string& id) const { return index_of(id) >= 0; }
  bool has_edge(int u, int v) const;
  bool has_edge(const std::string& u, const std::string& v) const;

  // Open neighborhood, sorted, v excluded.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  // Closed neighborhood N[v]: v is always a member of its own
  // neighborhood.
  std::vector<int> closed_neighborhood(int v) const;

  // Edges as index pairs with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

  // Connected components; each sorted, components ordered by their
  // least vertex.
  std::vector<std::vector<int>> connected_components() const;

  // Induced subgraph on the given (index) set; ids carry over.
  Graph induced(const std::vector<int>& vertices) const;

  bool is_complete() const;
  // Every component a complete graph.
  bool is_cluster_graph() const;

  // First triangle in canonical order, empty if triangle-free.
  std::vector<int> find_triangle() const;

 private:
  std::vector<std::string> ids_;
  std::map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
};

// JSON wire format: {"edges":[["a","b"],...],"vertices":["a",...]}.
Graph parse_graph_json(const std::string& text);
std::string graph_to_json(const Graph& g);

// DIMACS-like edge lists: "p edge <n> <m>" header then "e <u> <v>"
// lines, 1-based vertices; vertex ids become their decimal strings.
Graph parse_graph_dimacs(const std::string& text);

// Sniffs the format: leading '{' means JSON, anything else DIMACS.
Graph parse_graph(const std::string& text);

}  // namespace zipcover

#endif  // ZIPCOVER_GRAPH_HPP_
