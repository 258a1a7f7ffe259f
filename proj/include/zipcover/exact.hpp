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

#ifndef ZIPCOVER_EXACT_HPP_
#define ZIPCOVER_EXACT_HPP_

#include <string>
#include <utility>
#include <vector>

#include "zipcover/cover.hpp"
#include "zipcover/graph.hpp"
#include "zipcover/zipper.hpp"

namespace zipcover {

struct ExactOptions {
  // DomainError beyond this many vertices.
  int max_vertices = 30;
  // Pairs that must be co-covered unconditionally (each must be an
  // edge).  Used to force zipper-triggered configurations.
  std::vector<std::pair<std::string, std::string>> required_pairs;
};

// Minimum-cardinality clique cover subject to zipper constraints.
//
// Branch and bound over vertex-to-clique assignments: vertices are
// assigned in a fixed canonical order to an existing compatible clique
// or a fresh one; the bound is a greedy independent set over the
// unassigned vertices (non-adjacent vertices can never share a
// clique).  At each complete assignment, cliques are expanded --
// overlapping covers are reachable that way when a partition alone
// cannot satisfy criterion (2) -- by co-inserting obliged target pairs
// until every triggered constraint is met, backtracking over the
// choice of receiving clique.  The first optimum under this canonical
// exploration order is returned, so results are deterministic.
CliqueCover exact_zipped_cover(const Graph& g,
                               const std::vector<ZipperConstraint>& zippers,
                               const ExactOptions& opts = {});

}  // namespace zipcover

#endif  // ZIPCOVER_EXACT_HPP_
