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

#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "zipcover/constructions.hpp"
#include "zipcover/cover.hpp"
#include "zipcover/errors.hpp"

using namespace zipcover;
using namespace zipcover::testing;

TEST_CASE("complete graphs admit any elimination ordering") {
  Graph k4 = complete_graph(4);
  auto result = recognize_chordal(k4);
  REQUIRE(result.chordal());
  EliminationOrdering reversed;
  reversed.order = {"d", "c", "b", "a"};
  CHECK(is_valid_peo(k4, reversed));
}

TEST_CASE("the pentagon yields a hole witness of length five") {
  auto result = recognize_chordal(cycle_graph(5));
  REQUIRE_FALSE(result.chordal());
  CHECK(result.hole.size() == 5);
  // consecutive witnesses are edges, no chords exist
  Graph g = cycle_graph(5);
  const auto& hole = result.hole;
  for (std::size_t i = 0; i < hole.size(); ++i)
    CHECK(g.has_edge(hole[i], hole[(i + 1) % hole.size()]));
  for (std::size_t i = 0; i < hole.size(); ++i)
    for (std::size_t j = i + 2; j < hole.size(); ++j)
      if (!(i == 0 && j == hole.size() - 1))
        CHECK_FALSE(g.has_edge(hole[i], hole[j]));
}

TEST_CASE("triangulated pentagons become chordal") {
  auto tri = triangulate(cycle_graph(5));
  auto result = recognize_chordal(tri.chordal);
  REQUIRE(result.chordal());
  CHECK(is_valid_peo(tri.chordal, *result.peo));
}

TEST_CASE("gavril covers edgeless and cluster graphs") {
  Graph edgeless = edgeless_graph(5);
  auto peo = recognize_chordal(edgeless);
  REQUIRE(peo.chordal());
  CHECK(chordal_min_cover(edgeless, *peo.peo).size() == 5);

  Graph clusters = disjoint_union(complete_graph(3),
                                  Graph({"x1", "x2"}, {{"x1", "x2"}}));
  auto peo2 = recognize_chordal(clusters);
  REQUIRE(peo2.chordal());
  auto cover = chordal_min_cover(clusters, *peo2.peo);
  CHECK(cover.size() == 2);
  CHECK(is_valid_cover(clusters, cover));
}

TEST_CASE("gavril is optimal on random chordal graphs") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    GenParams params;
    params.n = 9;
    params.density = 0.5;
    Graph g = gen_chordal_graph(params, seed);
    auto peo = recognize_chordal(g);
    REQUIRE(peo.chordal());
    auto cover = chordal_min_cover(g, *peo.peo);
    CHECK(is_valid_cover(g, cover));
    CHECK(static_cast<int>(cover.size()) == brute_force_min_cover_size(g));
  }
}

TEST_CASE("chordal_min_cover rejects a bogus ordering") {
  Graph p3 = Graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  EliminationOrdering bad;
  bad.order = {"b", "a", "c"};  // b's later neighbors a, c are not adjacent
  CHECK_THROWS_AS(chordal_min_cover(p3, bad), DomainError);
}

TEST_CASE("triangle-free cover sizes follow the matching") {
  CHECK(triangle_free_cover(edgeless_graph(4)).size() == 4);

  auto c5_cover = triangle_free_cover(cycle_graph(5));
  CHECK(c5_cover.size() == 3);
  CHECK(is_valid_cover(cycle_graph(5), c5_cover));

  auto groetzsch_cover = triangle_free_cover(groetzsch_graph());
  CHECK(groetzsch_cover.size() == 6);
  CHECK(is_valid_cover(groetzsch_graph(), groetzsch_cover));
}

TEST_CASE("triangle_free_cover names a triangle when one exists") {
  CHECK_THROWS_WITH_AS(triangle_free_cover(complete_graph(3)),
                       doctest::Contains("not triangle-free"), DomainError);
}

TEST_CASE("exact cover matches enumeration on small graphs") {
  CHECK(exact_min_cover(complete_graph(5)).size() == 1);
  CHECK(exact_min_cover(complete_graph(1)).size() == 1);
  CHECK(exact_min_cover(cycle_graph(4)).size() == 2);
  CHECK(exact_min_cover(cycle_graph(5)).size() == 3);
  CHECK(brute_force_min_cover_size(cycle_graph(5)) == 3);
  CHECK(brute_force_min_cover_size(cycle_graph(4)) == 2);
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    GenParams params;
    params.n = 8;
    params.density = 0.45;
    Graph g = gen_graph(params, seed);
    auto cover = exact_min_cover(g);
    CHECK(is_valid_cover(g, cover));
    CHECK(static_cast<int>(cover.size()) == brute_force_min_cover_size(g));
  }
}

TEST_CASE("exact cover enforces its vertex bound") {
  CHECK_THROWS_AS(exact_min_cover(edgeless_graph(25), 20), DomainError);
  CHECK(exact_min_cover(edgeless_graph(25), 30).size() == 25);
}

TEST_CASE("exact cover is deterministic") {
  GenParams params;
  params.n = 9;
  params.density = 0.5;
  Graph g = gen_graph(params, 3);
  CHECK(cover_to_json(exact_min_cover(g)) == cover_to_json(exact_min_cover(g)));
}

TEST_CASE("dispatch unions per-component methods") {
  Graph g = disjoint_union(complete_graph(3), [] {
    // pentagon with shifted ids
    std::vector<std::string> ids{"p0", "p1", "p2", "p3", "p4"};
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < 5; ++i)
      edges.emplace_back(ids[i], ids[(i + 1) % 5]);
    return Graph(ids, edges);
  }());
  auto result = min_cover_dispatch(g);
  CHECK(result.cover.size() == 4);
  CHECK(is_valid_cover(g, result.cover));
  REQUIRE(result.components.size() == 2);
  std::set<std::string> methods;
  for (const auto& comp : result.components) methods.insert(comp.method);
  CHECK(methods == std::set<std::string>{"chordal", "triangle-free"});
}

TEST_CASE("dispatch falls back to exact for non-chordal triangled components") {
  // a 5-hole and a triangle sharing one vertex: neither chordal nor
  // triangle-free
  std::vector<std::string> ids{"a", "b", "c", "d", "e", "t1", "t2"};
  std::vector<std::pair<std::string, std::string>> edges{
      {"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"},
      {"a", "t1"}, {"a", "t2"}, {"t1", "t2"}};
  Graph g(ids, edges);
  auto result = min_cover_dispatch(g);
  REQUIRE(result.components.size() == 1);
  CHECK(result.components[0].method == "exact");
  CHECK(static_cast<int>(result.cover.size()) == brute_force_min_cover_size(g));
}

TEST_CASE("DIMACS edge lists parse into graphs") {
  Graph g = parse_graph_dimacs("c pentagon\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\n"
                               "e 4 5\ne 5 1\n");
  CHECK(g.n() == 5);
  CHECK(g.edge_count() == 5);
  CHECK_FALSE(recognize_chordal(g).chordal());
  CHECK_THROWS_AS(parse_graph_dimacs("e 1 2\n"), FormatError);
  CHECK_THROWS_AS(parse_graph_dimacs("p edge 2 1\ne 1 5\n"), FormatError);
}

TEST_CASE("cover JSON round-trips") {
  CliqueCover cover;
  cover.cliques = {{"b", "a"}, {"c"}};
  auto text = cover_to_json(cover);
  CHECK(text == R"({"cliques":[["a","b"],["c"]]})"
                "\n");
  auto parsed = parse_cover_json(text);
  CHECK(cover_to_json(parsed) == text);
}
