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

#include "zipcover/mzcc.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "zipcover/classes.hpp"
#include "zipcover/compat.hpp"
#include "zipcover/errors.hpp"
#include "zipcover/exact.hpp"
#include "zipcover/synthesis.hpp"

namespace zipcover {

namespace {

void validate_instance(const MzccInstance& instance) {
  for (const auto& z : instance.zippers) {
    for (const auto& id : {z.u_pair[0], z.u_pair[1], z.w_pair[0], z.w_pair[1]})
      if (!instance.graph.has_vertex(id))
        throw FormatError("zipper references unknown vertex '" + id + "'");
    if (!instance.graph.has_edge(z.u_pair[0], z.u_pair[1]))
      throw FormatError("zipper source pair {" + z.u_pair[0] + ", " +
                        z.u_pair[1] + "} is not an edge");
    if (!instance.graph.has_edge(z.w_pair[0], z.w_pair[1]))
      throw FormatError("zipper target pair {" + z.w_pair[0] + ", " +
                        z.w_pair[1] + "} is not an edge");
  }
}

bool clique_contains_pair(const std::vector<std::string>& clique,
                          const std::array<std::string, 2>& pair) {
  return std::binary_search(clique.begin(), clique.end(), pair[0]) &&
         std::binary_search(clique.begin(), clique.end(), pair[1]);
}

}  // namespace

MzccInstance parse_instance_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("instance JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("graph") || !doc.contains("zippers"))
    throw FormatError("instance JSON must contain 'graph' and 'zippers'");
  MzccInstance instance;
  instance.graph = parse_graph_json(doc["graph"].dump());
  instance.zippers = parse_zippers_json(doc["zippers"].dump());
  validate_instance(instance);
  return instance;
}

std::string instance_to_json(const MzccInstance& instance) {
  nlohmann::json doc;
  doc["graph"] = nlohmann::json::parse(graph_to_json(instance.graph));
  doc["zippers"] = nlohmann::json::parse(zippers_to_json(instance.zippers));
  return doc.dump() + "\n";
}

std::vector<ZipperConstraint> check_zippers(
    const CliqueCover& cover, const std::vector<ZipperConstraint>& zippers) {
  auto canon = cover;
  canonicalize_cover(canon);
  std::vector<ZipperConstraint> violated;
  for (const auto& z : zippers) {
    bool triggered = false;
    bool satisfied = false;
    for (const auto& clique : canon.cliques) {
      if (!triggered && clique_contains_pair(clique, z.u_pair))
        triggered = true;
      if (!satisfied && clique_contains_pair(clique, z.w_pair))
        satisfied = true;
      if (triggered && satisfied) break;
    }
    if (triggered && !satisfied) violated.push_back(z);
  }
  canonicalize_zippers(violated);
  return violated;
}

CliqueCover repair(const CliqueCover& cover, const Graph& g,
                   const std::vector<ZipperConstraint>& zippers) {
  if (!is_valid_cover(g, cover))
    throw DomainError("repair input is not a clique cover of the graph");
  auto cpzn = is_cpzn(g, zippers);
  if (!cpzn.holds)
    throw DomainError("graph lacks comparable neighborhoods for zipper "
                      "target pair {" +
                      cpzn.witness->w_pair[0] + ", " +
                      cpzn.witness->w_pair[1] + "}");

  std::vector<std::vector<int>> closed(g.n());
  for (int v = 0; v < g.n(); ++v) closed[v] = g.closed_neighborhood(v);
  auto nbhd_subset = [&](int a, int b) {
    return std::includes(closed[b].begin(), closed[b].end(),
                         closed[a].begin(), closed[a].end());
  };

  auto canon = cover;
  canonicalize_cover(canon);
  CliqueCover repaired;
  for (const auto& clique : canon.cliques) {
    std::set<std::string> grown(clique.begin(), clique.end());
    for (const auto& z : zippers)
      for (int n = 0; n < 2; ++n) {
        const auto& member = z.w_pair[n];
        const auto& partner = z.w_pair[1 - n];
        if (!std::binary_search(clique.begin(), clique.end(), member))
          continue;
        if (nbhd_subset(g.index_of(member), g.index_of(partner)))
          grown.insert(partner);
      }
    repaired.cliques.emplace_back(grown.begin(), grown.end());
  }
  canonicalize_cover(repaired);
  return repaired;
}

MzccSolution exact_mzcc(const MzccInstance& instance, int max_vertices) {
  validate_instance(instance);
  ExactOptions opts;
  opts.max_vertices = max_vertices;
  MzccSolution solution;
  solution.cover = exact_zipped_cover(instance.graph, instance.zippers, opts);
  solution.violated = check_zippers(solution.cover, instance.zippers);
  if (!solution.violated.empty())
    throw std::logic_error("exact cover violates a zipper constraint");
  solution.satisfied = instance.zippers;
  canonicalize_zippers(solution.satisfied);
  solution.method = "exact";
  return solution;
}

namespace {

// Deterministic first-fit clique cover, for instances beyond the exact
// bound.
CliqueCover greedy_cover(const Graph& g) {
  CliqueCover cover;
  std::vector<bool> covered(g.n(), false);
  for (int v = 0; v < g.n(); ++v) {
    if (covered[v]) continue;
    std::vector<int> clique{v};
    covered[v] = true;
    for (int w : g.neighbors(v)) {
      if (covered[w]) continue;
      bool fits = true;
      for (int m : clique)
        if (!g.has_edge(m, w)) {
          fits = false;
          break;
        }
      if (fits) {
        clique.push_back(w);
        covered[w] = true;
      }
    }
    std::vector<std::string> ids;
    for (int m : clique) ids.push_back(g.id_of(m));
    cover.cliques.push_back(std::move(ids));
  }
  canonicalize_cover(cover);
  return cover;
}

// Patches a cover into zipper feasibility without any optimality
// claim: a violated target pair is co-inserted into a clique whose
// members all neighbor both targets; failing that, the triggering
// clique is split.  Falls back to all singletons if the loop stalls.
CliqueCover patch_feasible(const Graph& g, CliqueCover cover,
                           const std::vector<ZipperConstraint>& zippers) {
  const std::size_t budget =
      (zippers.size() + g.n() + 2) * (zippers.size() + g.n() + 2);
  for (std::size_t round = 0; round < budget; ++round) {
    auto violated = check_zippers(cover, zippers);
    if (violated.empty()) return cover;
    const auto& z = violated.front();
    int w0 = g.index_of(z.w_pair[0]);
    int w1 = g.index_of(z.w_pair[1]);
    bool placed = false;
    for (auto& clique : cover.cliques) {
      bool fits = true;
      for (const auto& id : clique) {
        int m = g.index_of(id);
        if ((m != w0 && !g.has_edge(m, w0)) || (m != w1 && !g.has_edge(m, w1))) {
          fits = false;
          break;
        }
      }
      if (fits) {
        clique.push_back(z.w_pair[0]);
        clique.push_back(z.w_pair[1]);
        placed = true;
        break;
      }
    }
    if (!placed) {
      // break every clique that triggers this constraint
      CliqueCover next;
      bool split = false;
      for (auto& clique : cover.cliques) {
        std::sort(clique.begin(), clique.end());
        if (clique_contains_pair(clique, z.u_pair)) {
          std::vector<std::string> rest;
          for (const auto& id : clique)
            if (id != z.u_pair[1]) rest.push_back(id);
          next.cliques.push_back(std::move(rest));
          next.cliques.push_back({z.u_pair[1]});
          split = true;
        } else {
          next.cliques.push_back(clique);
        }
      }
      if (!split) break;
      cover = std::move(next);
    }
    canonicalize_cover(cover);
  }
  // the all-singletons cover satisfies everything
  CliqueCover singletons;
  for (const auto& id : g.vertex_ids()) singletons.cliques.push_back({id});
  canonicalize_cover(singletons);
  return singletons;
}

}  // namespace

MinimizationResult minimize_filter(const Filter& f,
                                   const MinimizeOptions& options) {
  CompatGraph g = compatibility_graph(f);
  auto zippers = zipper_constraints(f, g);

  MinimizationResult result;
  if (zippers.empty()) {
    auto dispatch = min_cover_dispatch(g, options.exact_bound);
    result.cover = std::move(dispatch.cover);
    result.components = std::move(dispatch.components);
    result.route = "dispatch";
  } else if (is_cpzn(g, zippers).holds) {
    auto dispatch = min_cover_dispatch(g, options.exact_bound);
    result.cover = repair(dispatch.cover, g, zippers);
    result.components = std::move(dispatch.components);
    result.route = "dispatch+repair";
  } else if (g.n() <= options.exact_bound) {
    MzccInstance instance{g, zippers};
    result.cover = exact_mzcc(instance, options.exact_bound).cover;
    result.route = "exact";
  } else {
    result.cover = patch_feasible(g, greedy_cover(g), zippers);
    result.route = "non-certified";
    result.certified = false;
  }

  auto synth = synthesize(f, result.cover);
  result.minimized = std::move(synth.minimized);
  result.state_map = std::move(synth.state_map);
  return result;
}

}  // namespace zipcover
