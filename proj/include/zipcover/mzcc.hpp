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

#ifndef ZIPCOVER_MZCC_HPP_
#define ZIPCOVER_MZCC_HPP_

#include <map>
#include <string>
#include <vector>

#include "zipcover/cover.hpp"
#include "zipcover/filter.hpp"
#include "zipcover/graph.hpp"
#include "zipcover/zipper.hpp"

namespace zipcover {

struct MzccInstance {
  Graph graph;
  std::vector<ZipperConstraint> zippers;
};

// Wire format: {"graph":{...},"zippers":[...]}.  Zipper vertices must
// exist and both pairs must span edges.
MzccInstance parse_instance_json(const std::string& text);
std::string instance_to_json(const MzccInstance& instance);

// Every constraint whose u-pair sits inside some clique while its
// w-pair sits inside none.
std::vector<ZipperConstraint> check_zippers(
    const CliqueCover& cover, const std::vector<ZipperConstraint>& zippers);

// Constraint repair for graphs with comparable closed neighborhoods on
// every zipper target pair: each clique absorbs the partner of any
// target-pair member whose neighborhood is no larger than the
// partner's.  The result covers the same vertices, satisfies every
// constraint, and is never larger than the input cover.  Raises
// DomainError when the comparability precondition fails, naming the
// offending target pair.
CliqueCover repair(const CliqueCover& cover, const Graph& g,
                   const std::vector<ZipperConstraint>& zippers);

struct MzccSolution {
  CliqueCover cover;
  std::vector<ZipperConstraint> satisfied;
  std::vector<ZipperConstraint> violated;  // empty for exact solutions
  std::string method;
};

// Provably minimum zipped clique cover; see exact_zipped_cover for the
// search strategy.  Feasibility is never in question (all singletons
// satisfy every constraint), so the only error is the size bound.
MzccSolution exact_mzcc(const MzccInstance& instance, int max_vertices = 30);

struct MinimizeOptions {
  // Vertex bound for the exact routes (both the dispatch fallback and
  // the full zipped solver).
  int exact_bound = 30;
};

struct MinimizationResult {
  Filter minimized;
  CliqueCover cover;
  // "dispatch" | "dispatch+repair" | "exact" | "non-certified"
  std::string route;
  bool certified = true;
  std::vector<ComponentReport> components;  // present for dispatch routes
  std::map<std::string, std::string> state_map;  // original -> merged id
};

// The end-to-end pipeline: build the compatibility graph and zipper
// set; with no constraints any minimum cover works; with repairable
// constraints, cover then repair; otherwise fall back to the exact
// solver, or -- beyond its bound -- to a greedy cover that is patched
// until feasible and reported as non-certified.  The synthesized
// filter is verified against the input before being returned.
MinimizationResult minimize_filter(const Filter& f,
                                   const MinimizeOptions& options = {});

}  // namespace zipcover

#endif  // ZIPCOVER_MZCC_HPP_
