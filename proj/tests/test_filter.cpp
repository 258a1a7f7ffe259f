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

#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "zipcover/classes.hpp"
#include "zipcover/constructions.hpp"
#include "zipcover/errors.hpp"
#include "zipcover/filter.hpp"

using namespace zipcover;
using namespace zipcover::testing;

TEST_CASE("parse accepts a minimal single-state filter") {
  Filter f = parse_filter(
      R"({"states":[{"id":"s0","output":"c"}],"initial":"s0",)"
      R"("observations":["a"],"transitions":[]})");
  CHECK(f.state_count() == 1);
  CHECK(f.obs_count() == 1);
  CHECK(f.state_id(f.initial()) == "s0");
}

TEST_CASE("parse rejects nondeterministic transitions") {
  const std::string text =
      R"({"states":[{"id":"s0","output":"c"},{"id":"s1","output":"c"},)"
      R"({"id":"s2","output":"c"}],"initial":"s0","observations":["a"],)"
      R"("transitions":[{"from":"s0","on":"a","to":"s1"},)"
      R"({"from":"s0","on":"a","to":"s2"}]})";
  CHECK_THROWS_AS(parse_filter(text), FormatError);
}

TEST_CASE("parse rejects unknown references and empty alphabets") {
  CHECK_THROWS_AS(
      parse_filter(R"({"states":[{"id":"s0","output":"c"}],"initial":"s0",)"
                   R"("observations":["a"],)"
                   R"("transitions":[{"from":"s0","on":"a","to":"zz"}]})"),
      FormatError);
  CHECK_THROWS_AS(
      parse_filter(R"({"states":[{"id":"s0","output":"c"}],"initial":"s0",)"
                   R"("observations":[],"transitions":[]})"),
      FormatError);
  CHECK_THROWS_AS(
      parse_filter(R"({"states":[],"initial":"s0","observations":["a"],)"
                   R"("transitions":[]})"),
      FormatError);
}

TEST_CASE("unreachable states reject by default and prune on request") {
  const std::string text =
      R"({"states":[{"id":"s0","output":"c"},{"id":"s1","output":"d"}],)"
      R"("initial":"s0","observations":["a"],"transitions":[]})";
  CHECK_THROWS_AS(parse_filter(text), FormatError);
  Filter pruned = parse_filter(text, UnreachablePolicy::kPrune);
  CHECK(pruned.state_count() == 1);
  CHECK(pruned.state_id(pruned.initial()) == "s0");
}

TEST_CASE("serialization round-trips bit-exactly") {
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    GenParams params;
    params.n = 7;
    params.obs = 3;
    params.outputs = 3;
    params.density = 0.5;
    Filter f = gen_filter(params, seed);
    std::string once = filter_to_json(f);
    std::string twice = filter_to_json(parse_filter(once));
    CHECK(once == twice);
  }
}

TEST_CASE("trace handles the empty sequence") {
  Filter f = unary_chain({"R", "G"});
  auto result = trace(f, {});
  CHECK(result.outputs == std::vector<std::string>{"R"});
  CHECK_FALSE(result.crash_index.has_value());
}

TEST_CASE("trace stops at the first missing transition") {
  Filter f = unary_chain({"R", "G"});
  auto result = trace(f, {"a", "a"});
  CHECK(result.outputs == std::vector<std::string>{"R", "G"});
  REQUIRE(result.crash_index.has_value());
  CHECK(*result.crash_index == 1);
}

TEST_CASE("trace rejects symbols outside the alphabet") {
  Filter f = unary_chain({"R", "G"});
  CHECK_THROWS_AS(trace(f, {"b"}), DomainError);
}

TEST_CASE("no sequence crashes on an NME filter") {
  GenParams params;
  params.n = 6;
  params.obs = 2;
  Filter f = gen_nme(params, 11);
  // a fixed pseudo-random 20-symbol sequence
  std::vector<std::string> seq;
  for (int i = 0; i < 20; ++i)
    seq.push_back(f.observation_id((i * 7 + 3) % f.obs_count()));
  auto result = trace(f, seq);
  CHECK_FALSE(result.crash_index.has_value());
  CHECK(result.outputs.size() == 21);
}

TEST_CASE("extensions_contained is reflexive") {
  GenParams params;
  params.n = 6;
  Filter f = gen_filter(params, 21);
  for (int v = 0; v < f.state_count(); ++v)
    CHECK(extensions_contained(f, v, v));
}

TEST_CASE("on a unary chain later states have contained extensions") {
  Filter f = unary_chain({"R", "R", "R", "R"});
  int early = f.state_index("u0");
  int late = f.state_index("u2");
  CHECK(extensions_contained(f, late, early));
  CHECK_FALSE(extensions_contained(f, early, late));
}

TEST_CASE("extensions_contained matches full bounded-string enumeration") {
  // Alphabet and size picked so that enumeration up to the pair-graph
  // bound |V|^2 is exhaustive, making the oracle exact.
  SUBCASE("eight-state unary filters") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GenParams params;
      params.n = 8;
      params.obs = 1;
      params.outputs = 2;
      params.density = 0.4;
      Filter f = gen_unary(params, seed);
      int bound = f.state_count() * f.state_count();
      for (int v = 0; v < f.state_count(); ++v)
        for (int w = 0; w < f.state_count(); ++w) {
          auto expected = oracle_extensions_contained(f, v, w, bound);
          REQUIRE(expected.has_value());
          CHECK(extensions_contained(f, v, w) == *expected);
        }
    }
  }
  SUBCASE("four-state binary filters") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      GenParams params;
      params.n = 4;
      params.obs = 2;
      params.outputs = 2;
      params.density = 0.5;
      Filter f = gen_filter(params, seed);
      int bound = f.state_count() * f.state_count();
      for (int v = 0; v < f.state_count(); ++v)
        for (int w = 0; w < f.state_count(); ++w) {
          auto expected = oracle_extensions_contained(f, v, w, bound);
          REQUIRE(expected.has_value());
          CHECK(extensions_contained(f, v, w) == *expected);
        }
    }
  }
}

TEST_CASE("extensions_contained is transitive") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenParams params;
    params.n = 6;
    params.obs = 2;
    params.density = 0.4;
    Filter f = gen_filter(params, seed);
    const int n = f.state_count();
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w) rel[v][w] = extensions_contained(f, v, w);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (rel[a][b] && rel[b][c]) CHECK(rel[a][c]);
  }
}

TEST_CASE("NME filters have universally contained extensions") {
  GenParams params;
  params.n = 5;
  params.obs = 2;
  Filter f = gen_nme(params, 31);
  for (int v = 0; v < f.state_count(); ++v)
    for (int w = 0; w < f.state_count(); ++w)
      CHECK(extensions_contained(f, v, w));
}

TEST_CASE("a filter output-simulates itself") {
  Filter f = nonchordal_perfect_filter();
  CHECK(verify_output_simulation(f, f).ok);
}

TEST_CASE("verification fails with a shortest witness") {
  FilterSpec big;
  big.observations = {"a"};
  big.states = {{"s0", "x"}, {"s1", "y"}};
  big.initial = "s0";
  big.transitions = {{"s0", "a", "s1"}};
  Filter f = build_filter(big);

  SUBCASE("single state with the matching root output lacks the edge") {
    FilterSpec small;
    small.observations = {"a"};
    small.states = {{"t", "x"}};
    small.initial = "t";
    Filter m = build_filter(small);
    auto verdict = verify_output_simulation(f, m);
    REQUIRE_FALSE(verdict.ok);
    CHECK(verdict.witness == std::vector<std::string>{"a"});
  }
  SUBCASE("single state with the wrong root output fails on epsilon") {
    FilterSpec small;
    small.observations = {"a"};
    small.states = {{"t", "y"}};
    small.initial = "t";
    Filter m = build_filter(small);
    auto verdict = verify_output_simulation(f, m);
    REQUIRE_FALSE(verdict.ok);
    CHECK(verdict.witness.empty());
  }
  SUBCASE("self-loop with diverging outputs fails after one step") {
    FilterSpec loop;
    loop.observations = {"a"};
    loop.states = {{"t", "x"}};
    loop.initial = "t";
    loop.transitions = {{"t", "a", "t"}};
    Filter m = build_filter(loop);
    auto verdict = verify_output_simulation(f, m);
    CHECK_FALSE(verdict.ok);  // outputs diverge after one step
    CHECK(verdict.witness == std::vector<std::string>{"a"});
  }
}

TEST_CASE("canonical form identifies isomorphic filters") {
  Filter f = oao_example_filter();
  // same structure, shuffled state names
  FilterSpec renamed;
  renamed.observations = {"a", "b", "c", "d"};
  renamed.states = {{"zz", "o1"}, {"k1", "o2"}, {"k2", "o2"},
                    {"k3", "o1"}, {"k4", "o1"}};
  renamed.initial = "zz";
  renamed.transitions = {
      {"zz", "a", "k1"},
      {"zz", "b", "k2"},
      {"k1", "c", "k3"},
      {"k2", "d", "k4"},
  };
  Filter g = build_filter(renamed);
  CHECK(filter_to_json(canonical_form(f)) == filter_to_json(canonical_form(g)));
  CHECK(filter_to_json(f) != filter_to_json(g));
}
