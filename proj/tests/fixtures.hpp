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

#ifndef ZIPCOVER_TESTS_FIXTURES_HPP_
#define ZIPCOVER_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "zipcover/filter.hpp"
#include "zipcover/graph.hpp"

namespace zipcover::testing {

// Cycle a-b-c-..., complete graph, edgeless graph; single-letter ids
// starting at 'a' (or the given stem for larger n).
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph edgeless_graph(int n);

// Mycielski construction over the pentagon: 11 vertices, 20 edges,
// triangle-free, chromatic number 4.
Graph groetzsch_graph();

// Disjoint union; ids must not clash.
Graph disjoint_union(const Graph& a, const Graph& b);

// Unary chain s0 -> s1 -> ... with the given outputs.
Filter unary_chain(const std::vector<std::string>& outputs);

// Ten states whose compatibility graph is a 4-hole {A,B,C,D}, a
// triangle {X,Y,Z}, and three isolated vertices; every zipper target
// pair lands inside the triangle, so the constraints are repairable
// while the graph is perfect but not chordal.
Filter nonchordal_perfect_filter();

// Branching OAO filter with a compatible pair of states that both
// carry outgoing edges (so it is NC but not GLC).
Filter oao_example_filter();

}  // namespace zipcover::testing

#endif  // ZIPCOVER_TESTS_FIXTURES_HPP_
