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

#ifndef ZIPCOVER_CLASSES_HPP_
#define ZIPCOVER_CLASSES_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "zipcover/compat.hpp"
#include "zipcover/filter.hpp"
#include "zipcover/graph.hpp"
#include "zipcover/zipper.hpp"

namespace zipcover {

// Every failed predicate carries a concrete witness.

struct NmeCheck {
  bool holds = false;
  std::string state;                // misses...
  std::string missing_observation;  // ...this observation
};

struct OaoCheck {
  bool holds = false;
  std::string observation;  // appears at...
  std::string state_a, state_b;  // ...these two states
};

struct GlcCheck {
  bool holds = false;
  // compatible pair with incomparable extension languages
  std::string state_a, state_b;
};

struct NcCheck {
  bool holds = false;
  // overlapping pair with incomparable closed neighborhoods
  std::string vertex_a, vertex_b;
};

struct EquivalenceCheck {
  bool holds = false;
  // u ~ v and v ~ w but u !~ w
  std::array<std::string, 3> witness;
};

struct CpznCheck {
  bool holds = false;
  std::optional<ZipperConstraint> witness;
};

// Every state has an outgoing edge for every observation.
NmeCheck is_nme(const Filter& f);
// Each observation labels at most one transition.
OaoCheck is_oao(const Filter& f);
// Singleton alphabet.
bool is_unary(const Filter& f);
// Every compatible pair has nested extension languages.
GlcCheck is_glc(const Filter& f);
// Overlapping closed neighborhoods in the compatibility graph are
// nested; equivalent to compatibility being transitive.
NcCheck is_nc(const Filter& f);
EquivalenceCheck is_compat_equivalence(const Filter& f);
// Comparable closed neighborhoods for every zipper target pair.
CpznCheck is_cpzn(const Graph& g, const std::vector<ZipperConstraint>& z);

struct ClassReport {
  // Single-state filters and filters with no transitions sit outside
  // the interesting class structure; they are flagged instead of being
  // forced into it.
  bool degenerate = false;
  NmeCheck nme;
  OaoCheck oao;
  bool unary = false;
  GlcCheck glc;
  NcCheck nc;
  EquivalenceCheck compat_equivalence;
  CpznCheck cpzn;
  bool chordal_compat = false;
  std::vector<std::string> hole;  // when the compatibility graph is not chordal
  bool cluster_compat = false;
};

// Computes every flag and cross-checks the structural implications
// (NME => GLC and NC, unary => GLC, OAO => NC, GLC => chordal and
// CPZN, NC => cluster and CPZN, NC <=> transitive compatibility).  Any
// internal inconsistency raises std::logic_error.
ClassReport classify(const Filter& f);

std::string class_report_to_json(const ClassReport& report);

}  // namespace zipcover

#endif  // ZIPCOVER_CLASSES_HPP_
