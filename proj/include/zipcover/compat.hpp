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

#ifndef ZIPCOVER_COMPAT_HPP_
#define ZIPCOVER_COMPAT_HPP_

#include <vector>

#include "zipcover/filter.hpp"
#include "zipcover/graph.hpp"
#include "zipcover/zipper.hpp"

namespace zipcover {

// The compatibility graph: one vertex per filter state, an edge between
// two states iff their outputs agree on every common extension
// (including the empty one).  Closed neighborhoods come from
// Graph::closed_neighborhood.
using CompatGraph = Graph;

// Greatest-fixpoint computation: a pair starts incompatible when the
// outputs differ, and incompatibility propagates backwards along
// common observations until nothing changes.  The complement is the
// edge set.
CompatGraph compatibility_graph(const Filter& f);

// Emits one constraint per compatible pair {u,u'} and observation y
// whose y-children exist on both sides and differ.  Results are
// deduplicated and canonically ordered.  Raises std::logic_error if a
// target pair is not an edge of g (the fixpoint guarantees it is).
std::vector<ZipperConstraint> zipper_constraints(const Filter& f,
                                                 const CompatGraph& g);

}  // namespace zipcover

#endif  // ZIPCOVER_COMPAT_HPP_
