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

#include "zipcover/constructions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "json.hpp"
#include "zipcover/classes.hpp"
#include "zipcover/compat.hpp"
#include "zipcover/errors.hpp"

namespace zipcover {

TriangulationResult triangulate(const Graph& g) {
  const int n = g.n();
  std::vector<std::set<int>> adj(n);
  for (int v = 0; v < n; ++v)
    adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<bool> processed(n, false);

  std::vector<std::pair<std::string, std::string>> dashed;
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    int best_degree = n + 1;
    for (int v = 0; v < n; ++v) {
      if (processed[v]) continue;
      int degree = 0;
      for (int w : adj[v])
        if (!processed[w]) ++degree;
      if (degree < best_degree) {
        best_degree = degree;
        pick = v;
      }
    }
    processed[pick] = true;
    std::vector<int> live;
    for (int w : adj[pick])
      if (!processed[w]) live.push_back(w);
    for (std::size_t i = 0; i < live.size(); ++i)
      for (std::size_t j = i + 1; j < live.size(); ++j)
        if (!adj[live[i]].count(live[j])) {
          adj[live[i]].insert(live[j]);
          adj[live[j]].insert(live[i]);
          dashed.emplace_back(g.id_of(std::min(live[i], live[j])),
                              g.id_of(std::max(live[i], live[j])));
        }
  }

  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(g.id_of(u), g.id_of(v));
  edges.insert(edges.end(), dashed.begin(), dashed.end());
  return {Graph(g.vertex_ids(), edges), std::move(dashed)};
}

namespace {

std::string pad_index(std::size_t i, std::size_t count) {
  std::size_t width = 1;
  for (std::size_t x = count > 0 ? count - 1 : 0; x >= 10; x /= 10) ++width;
  std::string digits = std::to_string(i);
  return std::string(width - digits.size(), '0') + digits;
}

std::string fresh_prefix(const Graph& g, const std::string& base) {
  std::string prefix = base;
  while (true) {
    bool clash = false;
    for (const auto& id : g.vertex_ids())
      if (id.rfind(prefix, 0) == 0) {
        clash = true;
        break;
      }
    if (!clash) return prefix;
    prefix.insert(prefix.begin(), '_');
  }
}

}  // namespace

ReductionInstance build_necklace_instance(
    const Graph& g, const std::vector<ZipperConstraint>& zippers) {
  if (g.n() == 0) throw DomainError("cannot build a reduction of an empty graph");

  auto tri = triangulate(g);
  ReductionInstance instance;
  instance.meta.m_s = static_cast<std::size_t>(g.edge_count());
  instance.meta.m_d = tri.dashed.size();
  instance.meta.ell = instance.meta.m_s + instance.meta.m_d + 1;
  instance.meta.dashed = tri.dashed;
  instance.meta.original_vertices = g.vertex_ids();
  const std::size_t ell = instance.meta.ell;

  const std::string prefix = fresh_prefix(g, "nk_");
  std::vector<std::string> vertices = tri.chordal.vertex_ids();
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : tri.chordal.edges())
    edges.emplace_back(tri.chordal.id_of(u), tri.chordal.id_of(v));

  for (std::size_t i = 0; i < ell; ++i) {
    std::string upper = prefix + "u" + pad_index(i, ell);
    std::string lower = prefix + "l" + pad_index(i, ell);
    instance.meta.pendant_uppers.push_back(upper);
    instance.meta.pendant_lowers.push_back(lower);
    vertices.push_back(upper);
    vertices.push_back(lower);
    edges.emplace_back(upper, lower);
  }
  for (std::size_t i = 0; i + 1 < ell; ++i) {
    std::string bead = prefix + "b" + pad_index(i, ell - 1);
    instance.meta.beads.push_back(bead);
    vertices.push_back(bead);
    instance.meta.string_edges.emplace_back(instance.meta.pendant_uppers[i],
                                            bead);
    instance.meta.string_edges.emplace_back(bead,
                                            instance.meta.pendant_uppers[i + 1]);
  }
  edges.insert(edges.end(), instance.meta.string_edges.begin(),
               instance.meta.string_edges.end());
  instance.graph = Graph(std::move(vertices), edges);

  instance.zippers = zippers;
  for (const auto& [d0, d1] : instance.meta.dashed)
    for (const auto& [s0, s1] : instance.meta.string_edges)
      instance.zippers.emplace_back(d0, d1, s0, s1);
  canonicalize_zippers(instance.zippers);
  return instance;
}

std::string reduction_to_json(const ReductionInstance& instance) {
  nlohmann::json doc;
  doc["graph"] = nlohmann::json::parse(graph_to_json(instance.graph));
  doc["zippers"] = nlohmann::json::parse(zippers_to_json(instance.zippers));
  nlohmann::json meta;
  meta["m_s"] = instance.meta.m_s;
  meta["m_d"] = instance.meta.m_d;
  meta["ell"] = instance.meta.ell;
  meta["pendant_uppers"] = instance.meta.pendant_uppers;
  meta["pendant_lowers"] = instance.meta.pendant_lowers;
  meta["beads"] = instance.meta.beads;
  auto pairs_json = [](const std::vector<std::pair<std::string, std::string>>&
                           pairs) {
    auto arr = nlohmann::json::array();
    for (const auto& [a, b] : pairs) arr.push_back({a, b});
    return arr;
  };
  meta["string_edges"] = pairs_json(instance.meta.string_edges);
  meta["dashed_edges"] = pairs_json(instance.meta.dashed);
  meta["original_vertices"] = instance.meta.original_vertices;
  doc["meta"] = std::move(meta);
  return doc.dump() + "\n";
}

CliqueCover restrict_cover(const CliqueCover& cover,
                           const std::vector<std::string>& original_vertices) {
  std::set<std::string> keep(original_vertices.begin(),
                             original_vertices.end());
  CliqueCover restricted;
  std::set<std::string> covered;
  for (const auto& clique : cover.cliques) {
    bool pure = true;
    for (const auto& id : clique)
      if (!keep.count(id)) {
        pure = false;
        break;
      }
    if (!pure) continue;
    restricted.cliques.push_back(clique);
    covered.insert(clique.begin(), clique.end());
  }
  for (const auto& id : original_vertices)
    if (!covered.count(id))
      throw DomainError("restriction does not cover vertex '" + id +
                        "': some clique mixes gadget and original vertices");
  canonicalize_cover(restricted);
  return restricted;
}

Filter realize_filter(const Graph& g) {
  if (g.n() == 0) throw DomainError("cannot realize an empty graph");
  auto components = g.connected_components();
  if (components.size() == 1 && !g.is_complete())
    throw DomainError(
        "a connected non-complete graph is never a compatibility graph");

  std::vector<int> component_of(g.n());
  for (std::size_t c = 0; c < components.size(); ++c)
    for (int v : components[c]) component_of[v] = static_cast<int>(c);

  FilterSpec spec;
  for (int v = 0; v < g.n(); ++v)
    spec.states.emplace_back(g.id_of(v),
                             "c" + std::to_string(component_of[v]));
  std::string init = "init";
  while (g.has_vertex(init)) init.insert(init.begin(), '_');
  spec.states.emplace_back(init, "c_init");
  spec.initial = init;

  std::size_t obs_counter = 0;
  auto fresh_obs = [&](char tag) {
    return std::string(1, tag) + pad_index(obs_counter++,
                                           static_cast<std::size_t>(g.n()) *
                                                   g.n() +
                                               g.n() + 1);
  };
  for (int v = 0; v < g.n(); ++v) {
    auto y = fresh_obs('e');
    spec.observations.push_back(y);
    spec.transitions.emplace_back(init, y, g.id_of(v));
  }
  if (components.size() >= 2) {
    const std::string& target_a = g.id_of(components[0][0]);
    const std::string& target_b = g.id_of(components[1][0]);
    for (int v = 0; v < g.n(); ++v)
      for (int w = v + 1; w < g.n(); ++w) {
        if (g.has_edge(v, w)) continue;
        auto y = fresh_obs('p');
        spec.observations.push_back(y);
        spec.transitions.emplace_back(g.id_of(v), y, target_a);
        spec.transitions.emplace_back(g.id_of(w), y, target_b);
      }
  }
  return build_filter(spec);
}

namespace {

// Thin deterministic layer over mt19937_64.  The standard pins the
// engine's output sequence but not the distributions', so we draw raw
// words only.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t word() { return engine_(); }
  int below(int n) { return static_cast<int>(word() % static_cast<unsigned>(n)); }
  double unit() { return static_cast<double>(word() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t attempt) {
  // splitmix64 step
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (attempt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::vector<std::string> numbered_ids(const std::string& stem, int count) {
  std::vector<std::string> ids;
  for (int i = 0; i < count; ++i)
    ids.push_back(stem + pad_index(static_cast<std::size_t>(i),
                                   static_cast<std::size_t>(count)));
  return ids;
}

// Random reachable partial filter: a random spanning tree from the
// initial state, then extra transitions per the density knob.
FilterSpec random_filter_spec(const GenParams& params, Rng& rng) {
  if (params.n < 1 || params.obs < 1 || params.outputs < 1)
    throw DomainError("generator parameters out of range");
  auto states = numbered_ids("s", params.n);
  auto observations = numbered_ids("y", params.obs);
  auto outputs = numbered_ids("o", params.outputs);

  FilterSpec spec;
  for (const auto& s : states)
    spec.states.emplace_back(s, outputs[rng.below(params.outputs)]);
  spec.initial = states[0];
  spec.observations = observations;

  std::vector<std::vector<bool>> used(
      params.n, std::vector<bool>(params.obs, false));
  for (int i = 1; i < params.n; ++i) {
    int start = rng.below(i);
    int parent = -1, slot = -1;
    for (int probe = 0; probe < i && parent < 0; ++probe) {
      int candidate = (start + probe) % i;
      for (int y = 0; y < params.obs; ++y)
        if (!used[candidate][y]) {
          parent = candidate;
          slot = (rng.below(params.obs) + y) % params.obs;
          while (used[parent][slot]) slot = (slot + 1) % params.obs;
          break;
        }
    }
    used[parent][slot] = true;
    spec.transitions.emplace_back(states[parent], observations[slot],
                                  states[i]);
  }
  for (int s = 0; s < params.n; ++s)
    for (int y = 0; y < params.obs; ++y)
      if (!used[s][y] && rng.unit() < params.density) {
        used[s][y] = true;
        spec.transitions.emplace_back(states[s], observations[y],
                                      states[rng.below(params.n)]);
      }
  return spec;
}

}  // namespace

Filter gen_filter(const GenParams& params, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 0));
  return build_filter(random_filter_spec(params, rng));
}

Filter gen_nme(const GenParams& params, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 1));
  GenParams full = params;
  full.density = 2.0;  // fill every slot
  auto spec = random_filter_spec(full, rng);
  Filter f = build_filter(spec);
  if (!is_nme(f).holds) throw std::logic_error("generated filter not NME");
  return f;
}

Filter gen_unary(const GenParams& params, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 2));
  GenParams unary = params;
  unary.obs = 1;
  auto spec = random_filter_spec(unary, rng);
  Filter f = build_filter(spec);
  if (!is_unary(f)) throw std::logic_error("generated filter not unary");
  return f;
}

Filter gen_oao(const GenParams& params, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 3));
  if (params.n < 1 || params.outputs < 1)
    throw DomainError("generator parameters out of range");
  auto states = numbered_ids("s", params.n);
  auto outputs = numbered_ids("o", params.outputs);

  // one fresh observation per edge keeps every observation unique
  std::vector<std::tuple<int, int>> arcs;
  for (int i = 1; i < params.n; ++i) arcs.emplace_back(rng.below(i), i);
  int extra = static_cast<int>(params.density * params.n);
  for (int k = 0; k < extra; ++k)
    arcs.emplace_back(rng.below(params.n), rng.below(params.n));

  FilterSpec spec;
  spec.initial = states[0];
  std::vector<int> out_index(params.n);
  for (int s = 0; s < params.n; ++s) out_index[s] = rng.below(params.outputs);
  std::vector<bool> has_edge(params.n, false);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    auto [from, to] = arcs[k];
    std::string y = "y" + pad_index(k, arcs.size());
    spec.observations.push_back(y);
    spec.transitions.emplace_back(states[from], y, states[to]);
    has_edge[from] = true;
  }
  // force a compatible pair of branching states so non-trivial
  // instances exercise the incomparable-extensions case
  int first = -1;
  for (int s = 0; s < params.n; ++s)
    if (has_edge[s]) {
      if (first < 0) {
        first = s;
      } else {
        out_index[s] = out_index[first];
        break;
      }
    }
  for (int s = 0; s < params.n; ++s)
    spec.states.emplace_back(states[s], outputs[out_index[s]]);

  Filter f = build_filter(spec);
  if (!is_oao(f).holds) throw std::logic_error("generated filter not OAO");
  return f;
}

Filter gen_glc(const GenParams& params, std::uint64_t seed) {
  constexpr int kBudget = 500;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    Rng rng(mix_seed(seed, 100 + attempt));
    Filter f = build_filter(random_filter_spec(params, rng));
    if (is_glc(f).holds) return f;
  }
  throw DomainError("GLC generation retry budget exhausted (seed=" +
                    std::to_string(seed) + ")");
}

Graph gen_chordal_graph(const GenParams& params, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 4));
  auto ids = numbered_ids("v", params.n);
  std::vector<std::vector<int>> adj(params.n);
  std::vector<std::pair<std::string, std::string>> edges;
  // each new vertex attaches to a clique inside an earlier vertex's
  // neighborhood, so the reverse insertion order is a PEO
  for (int i = 1; i < params.n; ++i) {
    if (rng.unit() < 0.15) continue;  // leave some isolated vertices
    int anchor = rng.below(i);
    std::vector<int> clique{anchor};
    for (int w : adj[anchor]) {
      if (w >= i || rng.unit() > params.density) continue;
      bool fits = true;
      for (int m : clique)
        if (m != w && std::find(adj[w].begin(), adj[w].end(), m) == adj[w].end())
          fits = false;
      if (fits) clique.push_back(w);
    }
    for (int m : clique) {
      adj[i].push_back(m);
      adj[m].push_back(i);
      edges.emplace_back(ids[m], ids[i]);
    }
  }
  Graph g(ids, edges);
  if (!recognize_chordal(g).chordal())
    throw std::logic_error("generated graph not chordal");
  return g;
}

Graph gen_graph(const GenParams& params, std::uint64_t seed) {
  Rng rng(mix_seed(seed, 5));
  auto ids = numbered_ids("v", params.n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 0; v < params.n; ++v)
    for (int w = v + 1; w < params.n; ++w)
      if (rng.unit() < params.density) edges.emplace_back(ids[v], ids[w]);
  return Graph(ids, edges);
}

MzccInstance gen_cpzn_instance(const GenParams& params, std::uint64_t seed) {
  constexpr int kBudget = 500;
  for (int attempt = 0; attempt < kBudget; ++attempt) {
    // alternate free-form and NME-shaped filters for variety; NME
    // instances carry rich constraint sets
    Filter f = [&] {
      if (attempt % 2 == 0) {
        Rng rng(mix_seed(seed, 200 + attempt));
        return build_filter(random_filter_spec(params, rng));
      }
      return gen_nme(params, mix_seed(seed, 300 + attempt));
    }();
    CompatGraph g = compatibility_graph(f);
    auto zippers = zipper_constraints(f, g);
    if (zippers.empty()) continue;
    if (is_cpzn(g, zippers).holds) return {std::move(g), std::move(zippers)};
  }
  throw DomainError("CPZN generation retry budget exhausted (seed=" +
                    std::to_string(seed) + ")");
}

}  // namespace zipcover
