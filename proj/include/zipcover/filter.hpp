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

#ifndef ZIPCOVER_FILTER_HPP_
#define ZIPCOVER_FILTER_HPP_

#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace zipcover {

// Unvalidated filter description, as read from a file or assembled by
// hand in tests and generators.  build_filter turns it into a Filter.
struct FilterSpec {
  std::vector<std::pair<std::string, std::string>> states;  // (id, output)
  std::string initial;
  std::vector<std::string> observations;
  // (from, on, to)
  std::vector<std::tuple<std::string, std::string, std::string>> transitions;
};

enum class UnreachablePolicy { kReject, kPrune };

// Deterministic transition system with one output per state.  States
// and observations are referenced by index internally; ids stay sorted
// so iteration order is canonical.  Immutable after construction.
class Filter {
 public:
  static constexpr int kNone = -1;

  int state_count() const { return static_cast<int>(state_ids_.size()); }
  int obs_count() const { return static_cast<int>(obs_ids_.size()); }
  int initial() const { return initial_; }

  const std::vector<std::string>& state_ids() const { return state_ids_; }
  const std::vector<std::string>& observation_ids() const { return obs_ids_; }
  const std::string& state_id(int s) const { return state_ids_[s]; }
  const std::string& observation_id(int y) const { return obs_ids_[y]; }
  // -1 when unknown.
  int state_index(const std::string& id) const;
  int obs_index(const std::string& id) const;

  const std::string& output(int s) const { return outputs_[s]; }
  // Target state index or kNone.
  int next(int s, int y) const { return next_[s][y]; }
  bool defined(int s, int y) const { return next_[s][y] != kNone; }
  int transition_count() const;

  friend Filter build_filter(const FilterSpec& spec, UnreachablePolicy policy);

 private:
  std::vector<std::string> state_ids_;  // sorted
  std::vector<std::string> obs_ids_;    // sorted
  std::vector<std::string> outputs_;    // per state
  std::vector<std::vector<int>> next_;  // [state][obs] -> state or kNone
  int initial_ = 0;
};

// Validates all Filter invariants: non-empty state set and alphabet,
// known references, determinism, reachability from the initial state.
// Unreachable states either reject (default) or get pruned.
Filter build_filter(const FilterSpec& spec,
                    UnreachablePolicy policy = UnreachablePolicy::kReject);

// Filter file format:
// {"initial":"s0","observations":["a"],
//  "states":[{"id":"s0","output":"c1"},...],
//  "transitions":[{"from":"s0","on":"a","to":"s1"},...]}
// Serialization is canonical (sorted arrays, sorted keys) and
// round-trips bit-exactly.
Filter parse_filter(const std::string& text,
                    UnreachablePolicy policy = UnreachablePolicy::kReject);
std::string filter_to_json(const Filter& f);

struct TraceResult {
  // One output per visited state, starting with the initial state.
  std::vector<std::string> outputs;
  // Position in the input of the first observation with no transition;
  // absent when the whole sequence traced.
  std::optional<std::size_t> crash_index;
};

// Runs seq from the initial state.  Symbols outside the alphabet raise
// DomainError.
TraceResult trace(const Filter& f, const std::vector<std::string>& seq);

// True iff every observation sequence traceable from v is traceable
// from w.  Decided by BFS over the pair graph, no string enumeration.
bool extensions_contained(const Filter& f, int v, int w);
bool extensions_contained(const Filter& f, const std::string& v,
                          const std::string& w);

struct SimulationResult {
  bool ok = false;
  // Shortest sequence witnessing the failure (traceable on f but not
  // on the candidate, or tracing to differing outputs).  Meaningful
  // only when !ok.
  std::vector<std::string> witness;
};

// Checks the minimization correctness relation: every sequence
// traceable on f is traceable on m and the outputs produced along the
// way (including both initial states' outputs) are identical.  m may
// use a superset of f's alphabet.
SimulationResult verify_output_simulation(const Filter& f, const Filter& m);

// Canonical isomorph: states renamed to their BFS discovery index from
// the initial state (observations scanned in sorted order).  Two
// filters are isomorphic iff their canonical forms serialize equally.
Filter canonical_form(const Filter& f);

}  // namespace zipcover

#endif  // ZIPCOVER_FILTER_HPP_
