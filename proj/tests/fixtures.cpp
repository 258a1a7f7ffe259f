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

#include "fixtures.hpp"

#include <stdexcept>

namespace zipcover::testing {

namespace {

std::vector<std::string> letter_ids(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) {
    if (n <= 26) {
      ids.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
      ids.push_back("v" + std::string(i < 10 ? "0" : "") + std::to_string(i));
    }
  }
  return ids;
}

}  // namespace

Graph cycle_graph(int n) {
  auto ids = letter_ids(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(ids[i], ids[(i + 1) % n]);
  return Graph(ids, edges);
}

Graph complete_graph(int n) {
  auto ids = letter_ids(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(ids[i], ids[j]);
  return Graph(ids, edges);
}

Graph edgeless_graph(int n) { return Graph(letter_ids(n), {}); }

Graph groetzsch_graph() {
  // outer pentagon o0..o4, mirrors m0..m4 joined to the neighbors of
  // their outer twin, apex joined to every mirror
  std::vector<std::string> ids;
  for (int i = 0; i < 5; ++i) ids.push_back("o" + std::to_string(i));
  for (int i = 0; i < 5; ++i) ids.push_back("m" + std::to_string(i));
  ids.push_back("apex");
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back("o" + std::to_string(i),
                       "o" + std::to_string((i + 1) % 5));
    edges.emplace_back("m" + std::to_string(i),
                       "o" + std::to_string((i + 1) % 5));
    edges.emplace_back("m" + std::to_string(i),
                       "o" + std::to_string((i + 4) % 5));
    edges.emplace_back("apex", "m" + std::to_string(i));
  }
  return Graph(ids, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::string> ids = a.vertex_ids();
  for (const auto& id : b.vertex_ids()) {
    if (a.has_vertex(id))
      throw std::invalid_argument("disjoint_union: id clash on '" + id + "'");
    ids.push_back(id);
  }
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, v] : a.edges()) edges.emplace_back(a.id_of(u), a.id_of(v));
  for (const auto& [u, v] : b.edges()) edges.emplace_back(b.id_of(u), b.id_of(v));
  return Graph(ids, edges);
}

Filter unary_chain(const std::vector<std::string>& outputs) {
  FilterSpec spec;
  spec.observations = {"a"};
  for (std::size_t i = 0; i < outputs.size(); ++i)
    spec.states.emplace_back("u" + std::to_string(i), outputs[i]);
  spec.initial = "u0";
  for (std::size_t i = 0; i + 1 < outputs.size(); ++i)
    spec.transitions.emplace_back("u" + std::to_string(i), "a",
                                  "u" + std::to_string(i + 1));
  return build_filter(spec);
}

Filter nonchordal_perfect_filter() {
  FilterSpec spec;
  spec.observations = {"g1", "g2", "g3", "g4", "g5", "g6",
                       "u",  "w",  "s",  "t",  "e",  "f"};
  spec.states = {{"q0", "cq"}, {"A", "m"}, {"B", "m"}, {"C", "m"},
                 {"D", "m"},   {"E", "p"}, {"F", "q"}, {"X", "r"},
                 {"Y", "r"},   {"Z", "r"}};
  spec.initial = "q0";
  spec.transitions = {
      {"q0", "g1", "A"}, {"q0", "g2", "B"}, {"q0", "g3", "C"},
      {"q0", "g4", "D"}, {"q0", "g5", "E"}, {"q0", "g6", "F"},
      // the square: each adjacent pair shares one observation whose
      // children land inside the compatible triple
      {"A", "u", "X"},   {"B", "u", "Y"},
      {"B", "w", "Y"},   {"C", "w", "Z"},
      {"C", "s", "Z"},   {"D", "s", "X"},
      {"D", "t", "X"},   {"A", "t", "Y"},
      // the diagonals disagree through the odd pair E/F
      {"A", "e", "E"},   {"C", "e", "F"},
      {"B", "f", "E"},   {"D", "f", "F"},
  };
  return build_filter(spec);
}

Filter oao_example_filter() {
  FilterSpec spec;
  spec.observations = {"a", "b", "c", "d"};
  spec.states = {{"r0", "o1"}, {"r1", "o2"}, {"r2", "o2"},
                 {"r3", "o1"}, {"r4", "o1"}};
  spec.initial = "r0";
  spec.transitions = {
      {"r0", "a", "r1"},
      {"r0", "b", "r2"},
      {"r1", "c", "r3"},
      {"r2", "d", "r4"},
  };
  return build_filter(spec);
}

}  // namespace zipcover::testing
