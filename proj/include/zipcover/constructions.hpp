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

#ifndef ZIPCOVER_CONSTRUCTIONS_HPP_
#define ZIPCOVER_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zipcover/cover.hpp"
#include "zipcover/filter.hpp"
#include "zipcover/graph.hpp"
#include "zipcover/mzcc.hpp"
#include "zipcover/zipper.hpp"

namespace zipcover {

struct TriangulationResult {
  Graph chordal;
  // Fill edges added by the elimination game, in insertion order.
  std::vector<std::pair<std::string, std::string>> dashed;
};

// Minimum-degree elimination fill-in; ties break on the smaller vertex
// id.  Any triangulation works here -- fill minimality is not needed
// -- but the procedure must be deterministic.
TriangulationResult triangulate(const Graph& g);

struct NecklaceMeta {
  std::size_t m_s = 0;  // original edges
  std::size_t m_d = 0;  // dashed edges
  std::size_t ell = 0;  // pendants, = m_s + m_d + 1
  std::vector<std::string> pendant_uppers;
  std::vector<std::string> pendant_lowers;
  std::vector<std::string> beads;
  std::vector<std::pair<std::string, std::string>> string_edges;
  std::vector<std::pair<std::string, std::string>> dashed;
  std::vector<std::string> original_vertices;
};

struct ReductionInstance {
  Graph graph;  // triangulated input plus the necklace component
  std::vector<ZipperConstraint> zippers;
  NecklaceMeta meta;
};

// Builds the penalization gadget: ell two-vertex pendants strung in a
// line with a bead between each adjacent pair, beads tied to the upper
// pendant vertices.  Every dashed edge gets one constraint per string
// edge -- 2(ell-1) of them -- so covering a dashed edge forces each
// bead into two cliques and costs more than any cover of the original
// graph could save.
ReductionInstance build_necklace_instance(
    const Graph& g, const std::vector<ZipperConstraint>& zippers = {});

std::string reduction_to_json(const ReductionInstance& instance);

// Keeps only the cliques that live entirely on the original vertices.
// Raises DomainError if the rest of the cover fails to cover them (an
// optimal cover of the reduction never strands an original vertex).
CliqueCover restrict_cover(const CliqueCover& cover,
                           const std::vector<std::string>& original_vertices);

// The constructive realizability direction: one state per vertex,
// outputs numbering the connected components, a shared fresh
// observation steering every non-adjacent pair to states with
// different outputs, and a fresh initial state reaching every vertex
// by a unique observation.  The initial state takes a unique output so
// it forms its own compatibility component and the input graph comes
// back vertex-for-vertex.  Inputs with one component that is not
// complete are rejected: no filter realizes them.
Filter realize_filter(const Graph& g);

struct GenParams {
  int n = 6;           // states or vertices
  int obs = 2;         // alphabet size
  int outputs = 2;     // output labels
  double density = 0.3;
};

// All generators are deterministic for a fixed seed and verify the
// requested property before returning; rejection samplers raise
// DomainError when the retry budget runs out.
Filter gen_filter(const GenParams& params, std::uint64_t seed);
Filter gen_nme(const GenParams& params, std::uint64_t seed);
Filter gen_oao(const GenParams& params, std::uint64_t seed);
Filter gen_unary(const GenParams& params, std::uint64_t seed);
Filter gen_glc(const GenParams& params, std::uint64_t seed);
Graph gen_chordal_graph(const GenParams& params, std::uint64_t seed);
Graph gen_graph(const GenParams& params, std::uint64_t seed);
MzccInstance gen_cpzn_instance(const GenParams& params, std::uint64_t seed);

}  // namespace zipcover

#endif  // ZIPCOVER_CONSTRUCTIONS_HPP_
