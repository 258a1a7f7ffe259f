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

#include "zipcover/cover.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "json.hpp"
#include "zipcover/errors.hpp"
#include "zipcover/exact.hpp"

namespace zipcover {

void canonicalize_cover(CliqueCover& cover) {
  for (auto& clique : cover.cliques) {
    std::sort(clique.begin(), clique.end());
    clique.erase(std::unique(clique.begin(), clique.end()), clique.end());
  }
  std::sort(cover.cliques.begin(), cover.cliques.end());
  cover.cliques.erase(std::unique(cover.cliques.begin(), cover.cliques.end()),
                      cover.cliques.end());
}

bool is_valid_cover(const Graph& g, const CliqueCover& cover) {
  std::set<std::string> covered;
  for (const auto& clique : cover.cliques) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      if (!g.has_vertex(clique[i])) return false;
      covered.insert(clique[i]);
      for (std::size_t j = i + 1; j < clique.size(); ++j)
        if (!g.has_edge(clique[i], clique[j])) return false;
    }
  }
  return covered.size() == static_cast<std::size_t>(g.n());
}

CliqueCover parse_cover_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("cover JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("cliques") ||
      !doc["cliques"].is_array())
    throw FormatError("cover JSON must contain a 'cliques' array");
  CliqueCover cover;
  for (const auto& cl : doc["cliques"]) {
    std::vector<std::string> clique;
    for (const auto& v : cl) {
      if (!v.is_string()) throw FormatError("clique members must be strings");
      clique.push_back(v.get<std::string>());
    }
    cover.cliques.push_back(std::move(clique));
  }
  canonicalize_cover(cover);
  return cover;
}

std::string cover_to_json(const CliqueCover& cover) {
  auto sorted = cover;
  canonicalize_cover(sorted);
  nlohmann::json doc;
  doc["cliques"] = sorted.cliques;
  return doc.dump() + "\n";
}

namespace {

// O(n^2) lexicographic BFS.  Labels are the visit ranks of already
// visited neighbors; a label beats another if its first differing rank
// is earlier, with a proper extension beating its prefix.
std::vector<int> lex_bfs_order(const Graph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<int> order;
  auto better = [](const std::vector<int>& a, const std::vector<int>& b) {
    // true when a is strictly more attractive than b
    std::size_t k = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return a.size() > b.size();
  };
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (pick < 0 || better(label[v], label[pick])) pick = v;
    }
    visited[pick] = true;
    order.push_back(pick);
    for (int w : g.neighbors(pick))
      if (!visited[w]) label[w].push_back(step);
  }
  return order;
}

// BFS shortest path from s to t inside the allowed vertex set; empty
// when unreachable.
std::vector<int> shortest_path(const Graph& g, int s, int t,
                               const std::vector<bool>& allowed) {
  std::vector<int> prev(g.n(), -1);
  std::deque<int> queue{s};
  prev[s] = s;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    if (v == t) break;
    for (int w : g.neighbors(v)) {
      if (!allowed[w] || prev[w] != -1) continue;
      prev[w] = v;
      queue.push_back(w);
    }
  }
  if (prev[t] == -1) return {};
  std::vector<int> path;
  for (int v = t; v != s; v = prev[v]) path.push_back(v);
  path.push_back(s);
  std::reverse(path.begin(), path.end());
  return path;
}

// Any non-chordal graph has a vertex v with two non-adjacent neighbors
// p, w joined by a path that avoids the rest of N[v]; the shortest
// such path closes a chordless cycle through v.
std::vector<std::string> find_hole(const Graph& g) {
  for (int v = 0; v < g.n(); ++v) {
    const auto& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        int p = nb[i], w = nb[j];
        if (g.has_edge(p, w)) continue;
        std::vector<bool> allowed(g.n(), true);
        allowed[v] = false;
        for (int x : nb) allowed[x] = false;
        allowed[p] = allowed[w] = true;
        auto path = shortest_path(g, p, w, allowed);
        if (path.empty()) continue;
        std::vector<std::string> hole{g.id_of(v)};
        for (int x : path) hole.push_back(g.id_of(x));
        return hole;
      }
  }
  return {};
}

}  // namespace

bool is_valid_peo(const Graph& g, const EliminationOrdering& peo) {
  const int n = g.n();
  if (static_cast<int>(peo.order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = g.index_of(peo.order[i]);
    if (v < 0 || pos[v] != -1) return false;
    pos[v] = i;
  }
  for (int i = 0; i < n; ++i) {
    int v = g.index_of(peo.order[i]);
    std::vector<int> later;
    for (int w : g.neighbors(v))
      if (pos[w] > i) later.push_back(w);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.has_edge(later[a], later[b])) return false;
  }
  return true;
}

ChordalityResult recognize_chordal(const Graph& g) {
  auto visit = lex_bfs_order(g);
  EliminationOrdering peo;
  for (auto it = visit.rbegin(); it != visit.rend(); ++it)
    peo.order.push_back(g.id_of(*it));

  ChordalityResult result;
  if (is_valid_peo(g, peo)) {
    result.peo = std::move(peo);
  } else {
    result.hole = find_hole(g);
    if (result.hole.empty())
      throw std::logic_error("PEO verification failed but no hole found");
  }
  return result;
}

CliqueCover chordal_min_cover(const Graph& g, const EliminationOrdering& peo) {
  if (!is_valid_peo(g, peo))
    throw DomainError("invalid perfect elimination ordering");
  const int n = g.n();
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) pos[g.index_of(peo.order[i])] = i;
  std::vector<bool> covered(n, false);
  CliqueCover cover;
  for (int i = 0; i < n; ++i) {
    int v = g.index_of(peo.order[i]);
    if (covered[v]) continue;
    std::vector<std::string> clique{g.id_of(v)};
    covered[v] = true;
    for (int w : g.neighbors(v))
      if (pos[w] > i) {
        clique.push_back(g.id_of(w));
        covered[w] = true;
      }
    cover.cliques.push_back(std::move(clique));
  }
  canonicalize_cover(cover);
  return cover;
}

CliqueCover triangle_free_cover(const Graph& g) {
  auto triangle = g.find_triangle();
  if (!triangle.empty())
    throw DomainError("graph is not triangle-free: {" +
                      g.id_of(triangle[0]) + ", " + g.id_of(triangle[1]) +
                      ", " + g.id_of(triangle[2]) + "}");
  auto matching = maximum_matching(g);
  std::set<std::string> matched;
  CliqueCover cover;
  for (const auto& [u, v] : matching) {
    matched.insert(u);
    matched.insert(v);
    cover.cliques.push_back({u, v});
  }
  for (const auto& id : g.vertex_ids())
    if (!matched.count(id)) cover.cliques.push_back({id});
  canonicalize_cover(cover);
  return cover;
}

CliqueCover exact_min_cover(const Graph& g, int max_vertices) {
  ExactOptions opts;
  opts.max_vertices = max_vertices;
  return exact_zipped_cover(g, {}, opts);
}

DispatchResult min_cover_dispatch(const Graph& g, int exact_bound) {
  DispatchResult result;
  for (const auto& comp : g.connected_components()) {
    Graph sub = g.induced(comp);
    ComponentReport report;
    report.vertices = sub.vertex_ids();
    CliqueCover cover;
    if (sub.is_complete()) {
      // single clique; complete graphs are chordal
      cover.cliques.push_back(sub.vertex_ids());
      report.method = "chordal";
    } else {
      auto chordality = recognize_chordal(sub);
      if (chordality.chordal()) {
        cover = chordal_min_cover(sub, *chordality.peo);
        report.method = "chordal";
      } else if (sub.find_triangle().empty()) {
        cover = triangle_free_cover(sub);
        report.method = "triangle-free";
      } else {
        cover = exact_min_cover(sub, exact_bound);
        report.method = "exact";
      }
    }
    report.cliques = cover.size();
    result.components.push_back(std::move(report));
    for (auto& clique : cover.cliques)
      result.cover.cliques.push_back(std::move(clique));
  }
  canonicalize_cover(result.cover);
  return result;
}

}  // namespace zipcover
