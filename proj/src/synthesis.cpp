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

#include "zipcover/synthesis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "zipcover/compat.hpp"
#include "zipcover/errors.hpp"
#include "zipcover/mzcc.hpp"

namespace zipcover {

namespace {

std::string pad_index(std::size_t i, std::size_t count) {
  std::size_t width = 1;
  for (std::size_t x = count > 0 ? count - 1 : 0; x >= 10; x /= 10) ++width;
  std::string digits = std::to_string(i);
  return std::string(width - digits.size(), '0') + digits;
}

}  // namespace

SynthesisResult synthesize(const Filter& f, const CliqueCover& cover) {
  CompatGraph g = compatibility_graph(f);
  if (!is_valid_cover(g, cover))
    throw DomainError(
        "cover is not a clique cover of the compatibility graph");
  auto zippers = zipper_constraints(f, g);
  auto violated = check_zippers(cover, zippers);
  if (!violated.empty())
    throw DomainError("cover violates the zipper constraint ({" +
                      violated.front().u_pair[0] + ", " +
                      violated.front().u_pair[1] + "} -> {" +
                      violated.front().w_pair[0] + ", " +
                      violated.front().w_pair[1] + "})");

  auto canon = cover;
  canonicalize_cover(canon);
  const std::size_t k = canon.cliques.size();

  // cliques as state-index sets, plus the owner (least containing
  // clique) of every state
  std::vector<std::vector<int>> members(k);
  std::vector<int> owner(f.state_count(), -1);
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& id : canon.cliques[i]) {
      int s = f.state_index(id);
      members[i].push_back(s);
      if (owner[s] < 0) owner[s] = static_cast<int>(i);
    }

  std::vector<std::string> merged_ids;
  for (std::size_t i = 0; i < k; ++i)
    merged_ids.push_back("m" + pad_index(i, k));

  FilterSpec spec;
  spec.observations = f.observation_ids();
  spec.initial = merged_ids[owner[f.initial()]];
  for (std::size_t i = 0; i < k; ++i) {
    const std::string& out = f.output(members[i].front());
    for (int s : members[i])
      if (f.output(s) != out)
        throw std::logic_error("clique members disagree on output");
    spec.states.emplace_back(merged_ids[i], out);
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (int y = 0; y < f.obs_count(); ++y) {
      std::set<int> children;
      for (int s : members[i])
        if (f.defined(s, y)) children.insert(f.next(s, y));
      if (children.empty()) continue;
      int target = -1;
      for (std::size_t j = 0; j < k && target < 0; ++j)
        if (std::includes(members[j].begin(), members[j].end(),
                          children.begin(), children.end()))
          target = static_cast<int>(j);
      if (target < 0) {
        // pairwise co-coverage does not promise a joint clique for
        // child sets of size >= 3; fall back to the least member's
        // child and let verification arbitrate
        for (int s : members[i])
          if (f.defined(s, y)) {
            target = owner[f.next(s, y)];
            break;
          }
      }
      spec.transitions.emplace_back(merged_ids[i], f.observation_id(y),
                                    merged_ids[target]);
    }
  }

  SynthesisResult result;
  result.minimized = build_filter(spec, UnreachablePolicy::kPrune);
  for (int s = 0; s < f.state_count(); ++s)
    result.state_map[f.state_id(s)] = merged_ids[owner[s]];

  auto verdict = verify_output_simulation(f, result.minimized);
  if (!verdict.ok) {
    std::string sequence;
    for (const auto& y : verdict.witness)
      sequence += (sequence.empty() ? "" : " ") + y;
    throw DomainError(
        "synthesized filter failed output-simulation verification; "
        "witness sequence: [" +
        sequence + "]");
  }
  return result;
}

}  // namespace zipcover
