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

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "zipcover/compat.hpp"
#include "zipcover/constructions.hpp"
#include "zipcover/errors.hpp"
#include "zipcover/mzcc.hpp"
#include "zipcover/synthesis.hpp"

using namespace zipcover;
using namespace zipcover::testing;

TEST_CASE("the all-singletons cover synthesizes an isomorphic filter") {
  Filter f = oao_example_filter();
  CliqueCover cover;
  for (const auto& id : f.state_ids()) cover.cliques.push_back({id});
  auto result = synthesize(f, cover);
  CHECK(result.minimized.state_count() == f.state_count());
  CHECK(filter_to_json(canonical_form(result.minimized)) ==
        filter_to_json(canonical_form(f)));
}

TEST_CASE("NME covers by compatibility class match the classical quotient") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    GenParams params;
    params.n = 7;
    params.obs = 2;
    params.outputs = 2;
    Filter f = gen_nme(params, seed);
    CompatGraph g = compatibility_graph(f);
    CliqueCover classes;
    for (const auto& comp : g.connected_components()) {
      std::vector<std::string> clique;
      for (int v : comp) clique.push_back(g.id_of(v));
      classes.cliques.push_back(std::move(clique));
    }
    auto result = synthesize(f, classes);
    CHECK(result.minimized.state_count() ==
          static_cast<int>(classes.size()));
    CHECK(verify_output_simulation(f, result.minimized).ok);
    // every state maps into its own class
    for (const auto& [orig, merged] : result.state_map) {
      int merged_index = result.minimized.state_index(merged);
      REQUIRE(merged_index >= 0);
      CHECK(result.minimized.output(merged_index) ==
            f.output(f.state_index(orig)));
    }
  }
}

TEST_CASE("the perfect-square fixture synthesizes its optimal cover") {
  Filter f = nonchordal_perfect_filter();
  auto result = minimize_filter(f);
  CHECK(result.minimized.state_count() == 6);
  CHECK(result.minimized.state_count() < f.state_count());
  CHECK(static_cast<std::size_t>(result.minimized.state_count()) ==
        result.cover.size());
  CHECK(verify_output_simulation(f, result.minimized).ok);
}

TEST_CASE("invalid covers are rejected") {
  Filter f = oao_example_filter();
  SUBCASE("non-clique") {
    CliqueCover bad;
    bad.cliques = {{"r0", "r1"}, {"r2"}, {"r3"}, {"r4"}};  // r0 !~ r1
    CHECK_THROWS_AS(synthesize(f, bad), DomainError);
  }
  SUBCASE("missing coverage") {
    CliqueCover bad;
    bad.cliques = {{"r0"}, {"r1"}};
    CHECK_THROWS_AS(synthesize(f, bad), DomainError);
  }
}

TEST_CASE("zipper-violating covers are rejected with the constraint") {
  Filter f = nonchordal_perfect_filter();
  // {A,B} triggers ({A,B},{X,Y}) but X and Y stay in singletons
  CliqueCover bad;
  bad.cliques = {{"A", "B"}, {"C", "D"}, {"X"}, {"Y"}, {"Z"},
                 {"E"},      {"F"},      {"q0"}};
  CHECK_THROWS_WITH_AS(synthesize(f, bad), doctest::Contains("zipper"),
                       DomainError);
}

TEST_CASE("synthesized state counts equal the cover size") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    GenParams params;
    params.n = 7;
    params.obs = 2;
    params.outputs = 2;
    params.density = 0.5;
    Filter f = gen_filter(params, seed);
    auto result = minimize_filter(f);
    CHECK(static_cast<std::size_t>(result.minimized.state_count()) ==
          result.cover.size());
  }
}

TEST_CASE("pipeline results match the exhaustive small-filter search") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    GenParams params;
    params.n = 4;
    params.obs = 2;
    params.outputs = 2;
    params.density = 0.5;
    Filter f = gen_filter(params, seed);
    auto result = minimize_filter(f);
    REQUIRE(result.certified);
    CHECK(result.minimized.state_count() ==
          minimal_simulator_size(f, f.state_count()));
  }
}
