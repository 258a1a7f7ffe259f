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

#ifndef ZIPCOVER_COVER_HPP_
#define ZIPCOVER_COVER_HPP_

#include <optional>
#include <string>
#include <vector>

#include "zipcover/graph.hpp"

namespace zipcover {

// A set of cliques whose union is the whole vertex set.  Cliques may
// overlap.  Canonical form: each clique sorted, cliques sorted
// lexicographically, exact duplicates removed.
struct CliqueCover {
  std::vector<std::vector<std::string>> cliques;

  std::size_t size() const { return cliques.size(); }
};

void canonicalize_cover(CliqueCover& cover);
// Every clique is a clique of g and every vertex is covered.
bool is_valid_cover(const Graph& g, const CliqueCover& cover);

// Wire format: {"cliques":[["a","b"],...]}.
CliqueCover parse_cover_json(const std::string& text);
std::string cover_to_json(const CliqueCover& cover);

// Perfect elimination ordering: each vertex's later neighbors form a
// clique.
struct EliminationOrdering {
  std::vector<std::string> order;
};

struct ChordalityResult {
  std::optional<EliminationOrdering> peo;
  // Chordless cycle of length >= 4 when not chordal, in cycle order.
  std::vector<std::string> hole;

  bool chordal() const { return peo.has_value(); }
};

// Lexicographic BFS plus verification; ties break on the smaller
// vertex id.  Non-chordal graphs get a hole witness.
ChordalityResult recognize_chordal(const Graph& g);

bool is_valid_peo(const Graph& g, const EliminationOrdering& peo);

// Gavril's sweep: walk the PEO, and every still-uncovered vertex
// contributes the clique of itself plus its later neighbors.  The
// result is a minimum clique cover.
CliqueCover chordal_min_cover(const Graph& g, const EliminationOrdering& peo);

// Maximum-cardinality matching via the blossom algorithm.  Pairs and
// the list are sorted.
std::vector<std::pair<std::string, std::string>> maximum_matching(
    const Graph& g);

// Matched pairs plus unmatched singletons; minimum for triangle-free
// graphs.  Raises DomainError naming a triangle otherwise.
CliqueCover triangle_free_cover(const Graph& g);

// Provably minimum cover by branch and bound.  Deterministic.  Raises
// DomainError when the graph exceeds max_vertices.
CliqueCover exact_min_cover(const Graph& g, int max_vertices = 20);

struct ComponentReport {
  std::vector<std::string> vertices;
  std::string method;  // "chordal" | "triangle-free" | "exact"
  std::size_t cliques = 0;
};

struct DispatchResult {
  CliqueCover cover;
  std::vector<ComponentReport> components;
};

// Splits into connected components and picks the cheapest applicable
// method per component: chordal sweep, else matching-based cover for
// triangle-free components, else the exact solver.  The union of the
// per-component optima is a minimum cover of the whole graph.
DispatchResult min_cover_dispatch(const Graph& g, int exact_bound = 20);

}  // namespace zipcover

#endif  // ZIPCOVER_COVER_HPP_
