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

#include "zipcover/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "json.hpp"
#include "zipcover/errors.hpp"

namespace zipcover {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  ids_ = std::move(vertices);
  for (int i = 0; i < static_cast<int>(ids_.size()); ++i) index_[ids_[i]] = i;
  adj_.assign(ids_.size(), {});

  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    int u = index_of(a);
    int v = index_of(b);
    if (u < 0) throw FormatError("edge references unknown vertex '" + a + "'");
    if (v < 0) throw FormatError("edge references unknown vertex '" + b + "'");
    if (u == v) throw FormatError("self-loop on vertex '" + a + "'");
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::edge_count() const {
  int total = 0;
  for (const auto& nb : adj_) total += static_cast<int>(nb.size());
  return total / 2;
}

int Graph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  return it == index_.end() ? -1 : it->second;
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::has_edge(const std::string& u, const std::string& v) const {
  int a = index_of(u);
  int b = index_of(v);
  if (a < 0 || b < 0) return false;
  return has_edge(a, b);
}

std::vector<int> Graph::closed_neighborhood(int v) const {
  std::vector<int> out = adj_[v];
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::vector<int>> Graph::connected_components() const {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(n(), false);
  for (int s = 0; s < n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (int w : adj_[v])
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<std::string> ids;
  ids.reserve(vertices.size());
  for (int v : vertices) ids.push_back(ids_[v]);
  std::set<int> keep(vertices.begin(), vertices.end());
  std::vector<std::pair<std::string, std::string>> es;
  for (int u : vertices)
    for (int v : adj_[u])
      if (u < v && keep.count(v)) es.emplace_back(ids_[u], ids_[v]);
  return Graph(std::move(ids), es);
}

bool Graph::is_complete() const {
  const long long m = edge_count();
  return m == static_cast<long long>(n()) * (n() - 1) / 2;
}

bool Graph::is_cluster_graph() const {
  for (const auto& comp : connected_components())
    if (!induced(comp).is_complete()) return false;
  return true;
}

std::vector<int> Graph::find_triangle() const {
  for (int u = 0; u < n(); ++u) {
    for (int v : adj_[u]) {
      if (v <= u) continue;
      // common neighbor of u and v beyond v
      const auto& a = adj_[u];
      const auto& b = adj_[v];
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) {
          if (a[i] > v) return {u, v, a[i]};
          ++i;
          ++j;
        } else if (a[i] < b[j]) {
          ++i;
        } else {
          ++j;
        }
      }
    }
  }
  return {};
}

Graph parse_graph_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("graph JSON parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw FormatError("graph JSON must contain 'vertices' and 'edges'");
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw FormatError("graph vertex ids must be strings");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() ||
        !e[1].is_string())
      throw FormatError("graph edges must be two-element string arrays");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return Graph(std::move(vertices), edges);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json doc;
  doc["vertices"] = g.vertex_ids();
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges())
    edges.push_back({g.id_of(u), g.id_of(v)});
  doc["edges"] = std::move(edges);
  return doc.dump() + "\n";
}

Graph parse_graph_dimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long long n = -1;
  std::vector<std::pair<std::string, std::string>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long long m;
      if (!(ls >> kind >> n >> m) || n < 0)
        throw FormatError("malformed DIMACS problem line: " + line);
    } else if (tag == "e") {
      long long u, v;
      if (!(ls >> u >> v)) throw FormatError("malformed DIMACS edge: " + line);
      if (n < 0) throw FormatError("DIMACS edge before problem line");
      if (u < 1 || u > n || v < 1 || v > n)
        throw FormatError("DIMACS edge endpoint out of range: " + line);
      edges.emplace_back(std::to_string(u), std::to_string(v));
    } else {
      throw FormatError("unrecognized DIMACS line: " + line);
    }
  }
  if (n < 0) throw FormatError("DIMACS input has no problem line");
  std::vector<std::string> vertices;
  for (long long i = 1; i <= n; ++i) vertices.push_back(std::to_string(i));
  return Graph(std::move(vertices), edges);
}

Graph parse_graph(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_dimacs(text);
  }
  throw FormatError("empty graph input");
}

}  // namespace zipcover
