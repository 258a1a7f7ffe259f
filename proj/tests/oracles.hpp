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
//
// Independent reference implementations used only by tests.  None of
// them share code with the library paths they check.

#ifndef ZIPCOVER_TESTS_ORACLES_HPP_
#define ZIPCOVER_TESTS_ORACLES_HPP_

#include <optional>

#include "zipcover/filter.hpp"
#include "zipcover/graph.hpp"

namespace zipcover::testing {

// Exhaustive recursion over edge subsets.
int brute_force_matching_size(const Graph& g);

// Smallest clique partition by plain recursive assignment (covers and
// partitions share the same minimum without constraints).
int brute_force_min_cover_size(const Graph& g);

// Walks every observation string traceable from v up to max_len and
// checks each is traceable from w.  nullopt when the node budget runs
// out before the enumeration completes.
std::optional<bool> oracle_extensions_contained(const Filter& f, int v, int w,
                                                int max_len,
                                                long long budget = 1 << 22);

// Walks every common string of v and w up to max_len and compares
// outputs along the way (the empty string included).
std::optional<bool> oracle_compatible(const Filter& f, int v, int w,
                                      int max_len, long long budget = 1 << 22);

// Smallest k <= max_states for which some k-state deterministic filter
// output-simulates f, found by backtracking over on-demand transition
// and output assignments.  Knows nothing about covers.
int minimal_simulator_size(const Filter& f, int max_states);

}  // namespace zipcover::testing

#endif  // ZIPCOVER_TESTS_ORACLES_HPP_
