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

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "zipcover/classes.hpp"
#include "zipcover/compat.hpp"
#include "zipcover/constructions.hpp"
#include "zipcover/cover.hpp"
#include "zipcover/errors.hpp"
#include "zipcover/filter.hpp"
#include "zipcover/graph.hpp"
#include "zipcover/mzcc.hpp"
#include "zipcover/synthesis.hpp"
#include "zipcover/zipper.hpp"

namespace {

using namespace zipcover;

struct Ctx {
  bool json = false;
  bool prune_unreachable = false;
  int exact_bound = 30;
  std::uint64_t seed = 0;
  GenParams params;
  std::string out;
  std::string map_out;
  std::string graph_out;
  std::string zippers_out;
  std::vector<std::string> inputs;
  std::string kind;

  std::vector<std::string> artifacts;
  nlohmann::json summary = nlohmann::json::object();
  std::vector<std::string> lines;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// No partial artifacts: write next to the target, then rename.
void atomic_write(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out) throw FormatError("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

std::string derived_path(const std::string& input, const std::string& suffix) {
  std::filesystem::path p(input);
  auto stem = p.stem().string();
  return (p.parent_path() / (stem + suffix)).string();
}

void emit_artifact(Ctx& ctx, const std::string& path,
                   const std::string& content, const std::string& label) {
  atomic_write(path, content);
  ctx.artifacts.push_back(path);
  ctx.lines.push_back("wrote " + label + ": " + path);
}

UnreachablePolicy policy(const Ctx& ctx) {
  return ctx.prune_unreachable ? UnreachablePolicy::kPrune
                               : UnreachablePolicy::kReject;
}

void cmd_minimize(Ctx& ctx) {
  Filter f = parse_filter(slurp(ctx.inputs[0]), policy(ctx));
  MinimizeOptions options;
  options.exact_bound = ctx.exact_bound;
  auto result = minimize_filter(f, options);

  std::string out = ctx.out.empty() ? derived_path(ctx.inputs[0], ".min.json")
                                    : ctx.out;
  std::string map_out =
      ctx.map_out.empty() ? derived_path(ctx.inputs[0], ".min.map.json")
                          : ctx.map_out;
  ctx.lines.push_back(std::to_string(f.state_count()) + " -> " +
                      std::to_string(result.minimized.state_count()) +
                      " states, route=" + result.route);
  emit_artifact(ctx, out, filter_to_json(result.minimized),
                "minimized filter");
  nlohmann::json map = nlohmann::json::object();
  for (const auto& [orig, merged] : result.state_map) map[orig] = merged;
  emit_artifact(ctx, map_out, map.dump() + "\n", "state map");

  ctx.summary["states_before"] = f.state_count();
  ctx.summary["states_after"] = result.minimized.state_count();
  ctx.summary["cover_size"] = result.cover.size();
  ctx.summary["route"] = result.route;
  ctx.summary["certified"] = result.certified;
}

void cmd_analyze(Ctx& ctx) {
  Filter f = parse_filter(slurp(ctx.inputs[0]), policy(ctx));
  auto report = classify(f);
  ctx.summary = nlohmann::json::parse(class_report_to_json(report));
  auto flag = [](bool b) { return b ? "yes" : "no"; };
  ctx.lines.push_back(std::string("degenerate: ") + flag(report.degenerate));
  ctx.lines.push_back(std::string("nme: ") + flag(report.nme.holds));
  ctx.lines.push_back(std::string("oao: ") + flag(report.oao.holds));
  ctx.lines.push_back(std::string("unary: ") + flag(report.unary));
  ctx.lines.push_back(std::string("glc: ") + flag(report.glc.holds));
  ctx.lines.push_back(std::string("nc: ") + flag(report.nc.holds));
  ctx.lines.push_back(std::string("compat_equivalence: ") +
                      flag(report.compat_equivalence.holds));
  ctx.lines.push_back(std::string("cpzn: ") + flag(report.cpzn.holds));
  ctx.lines.push_back(std::string("chordal_compat: ") +
                      flag(report.chordal_compat));
  ctx.lines.push_back(std::string("cluster_compat: ") +
                      flag(report.cluster_compat));
}

void cmd_compat(Ctx& ctx) {
  Filter f = parse_filter(slurp(ctx.inputs[0]), policy(ctx));
  CompatGraph g = compatibility_graph(f);
  auto zippers = zipper_constraints(f, g);
  std::string graph_out = ctx.graph_out.empty()
                              ? derived_path(ctx.inputs[0], ".compat.json")
                              : ctx.graph_out;
  std::string zippers_out =
      ctx.zippers_out.empty() ? derived_path(ctx.inputs[0], ".zippers.json")
                              : ctx.zippers_out;
  ctx.lines.push_back("compatibility graph: " + std::to_string(g.n()) +
                      " vertices, " + std::to_string(g.edge_count()) +
                      " edges; " + std::to_string(zippers.size()) +
                      " zipper constraints");
  emit_artifact(ctx, graph_out, graph_to_json(g), "compatibility graph");
  emit_artifact(ctx, zippers_out, zippers_to_json(zippers),
                "zipper constraints");
  ctx.summary["vertices"] = g.n();
  ctx.summary["edges"] = g.edge_count();
  ctx.summary["zippers"] = zippers.size();
}

void cmd_cover(Ctx& ctx) {
  Graph g = parse_graph(slurp(ctx.inputs[0]));
  auto result = min_cover_dispatch(g, ctx.exact_bound);
  std::string out = ctx.out.empty() ? derived_path(ctx.inputs[0], ".cover.json")
                                    : ctx.out;
  std::string methods;
  auto comps = nlohmann::json::array();
  for (const auto& comp : result.components) {
    methods += (methods.empty() ? "" : ", ") + comp.method;
    comps.push_back({{"vertices", comp.vertices},
                     {"method", comp.method},
                     {"cliques", comp.cliques}});
  }
  ctx.lines.push_back("minimum cover size " +
                      std::to_string(result.cover.size()) + " (methods: " +
                      methods + ")");
  emit_artifact(ctx, out, cover_to_json(result.cover), "clique cover");
  ctx.summary["cover_size"] = result.cover.size();
  ctx.summary["components"] = std::move(comps);
}

void cmd_solve(Ctx& ctx) {
  MzccInstance instance = parse_instance_json(slurp(ctx.inputs[0]));
  auto solution = exact_mzcc(instance, ctx.exact_bound);
  std::string out = ctx.out.empty()
                        ? derived_path(ctx.inputs[0], ".solution.json")
                        : ctx.out;
  ctx.lines.push_back("optimum cover size " +
                      std::to_string(solution.cover.size()) + "; " +
                      std::to_string(solution.satisfied.size()) +
                      " zipper constraints satisfied");
  emit_artifact(ctx, out, cover_to_json(solution.cover), "optimal cover");
  ctx.summary["cover_size"] = solution.cover.size();
  ctx.summary["satisfied"] = solution.satisfied.size();
  ctx.summary["violated"] = solution.violated.size();
}

void cmd_repair(Ctx& ctx) {
  MzccInstance instance = parse_instance_json(slurp(ctx.inputs[0]));
  CliqueCover cover = parse_cover_json(slurp(ctx.inputs[1]));
  auto before = check_zippers(cover, instance.zippers);
  auto repaired = repair(cover, instance.graph, instance.zippers);
  auto after = check_zippers(repaired, instance.zippers);
  std::string out = ctx.out.empty()
                        ? derived_path(ctx.inputs[1], ".repaired.json")
                        : ctx.out;
  ctx.lines.push_back("repaired cover: " + std::to_string(cover.size()) +
                      " -> " + std::to_string(repaired.size()) +
                      " cliques, violations " +
                      std::to_string(before.size()) + " -> " +
                      std::to_string(after.size()));
  emit_artifact(ctx, out, cover_to_json(repaired), "repaired cover");
  ctx.summary["size_before"] = cover.size();
  ctx.summary["size_after"] = repaired.size();
  ctx.summary["violations_before"] = before.size();
  ctx.summary["violations_after"] = after.size();
}

void cmd_gen(Ctx& ctx) {
  std::string content, label;
  if (ctx.kind == "filter")
    content = filter_to_json(gen_filter(ctx.params, ctx.seed));
  else if (ctx.kind == "nme")
    content = filter_to_json(gen_nme(ctx.params, ctx.seed));
  else if (ctx.kind == "oao")
    content = filter_to_json(gen_oao(ctx.params, ctx.seed));
  else if (ctx.kind == "unary")
    content = filter_to_json(gen_unary(ctx.params, ctx.seed));
  else if (ctx.kind == "glc")
    content = filter_to_json(gen_glc(ctx.params, ctx.seed));
  else if (ctx.kind == "chordal-graph")
    content = graph_to_json(gen_chordal_graph(ctx.params, ctx.seed));
  else if (ctx.kind == "graph")
    content = graph_to_json(gen_graph(ctx.params, ctx.seed));
  else if (ctx.kind == "cpzn-instance")
    content = instance_to_json(gen_cpzn_instance(ctx.params, ctx.seed));
  else
    throw CLI::ValidationError("gen", "unknown kind '" + ctx.kind + "'");
  label = ctx.kind;
  if (ctx.out.empty()) {
    std::cout << content;
  } else {
    emit_artifact(ctx, ctx.out, content, label);
  }
  ctx.summary["kind"] = ctx.kind;
  ctx.summary["seed"] = ctx.seed;
}

void cmd_necklace(Ctx& ctx) {
  Graph g = parse_graph(slurp(ctx.inputs[0]));
  auto instance = build_necklace_instance(g);
  std::string out = ctx.out.empty()
                        ? derived_path(ctx.inputs[0], ".necklace.json")
                        : ctx.out;
  ctx.lines.push_back(
      "reduction: m_s=" + std::to_string(instance.meta.m_s) +
      ", m_d=" + std::to_string(instance.meta.m_d) +
      ", ell=" + std::to_string(instance.meta.ell) + ", " +
      std::to_string(instance.graph.n()) + " vertices, " +
      std::to_string(instance.zippers.size()) + " zipper constraints");
  emit_artifact(ctx, out, reduction_to_json(instance), "reduction instance");
  ctx.summary["m_s"] = instance.meta.m_s;
  ctx.summary["m_d"] = instance.meta.m_d;
  ctx.summary["ell"] = instance.meta.ell;
  ctx.summary["vertices"] = instance.graph.n();
  ctx.summary["zippers"] = instance.zippers.size();
}

void cmd_realize(Ctx& ctx) {
  Graph g = parse_graph(slurp(ctx.inputs[0]));
  Filter f = realize_filter(g);
  std::string out = ctx.out.empty()
                        ? derived_path(ctx.inputs[0], ".filter.json")
                        : ctx.out;
  ctx.lines.push_back("realized filter with " +
                      std::to_string(f.state_count()) + " states over " +
                      std::to_string(f.obs_count()) + " observations");
  emit_artifact(ctx, out, filter_to_json(f), "realized filter");
  ctx.summary["states"] = f.state_count();
  ctx.summary["observations"] = f.obs_count();
}

void cmd_verify(Ctx& ctx) {
  Filter f = parse_filter(slurp(ctx.inputs[0]), policy(ctx));
  Filter m = parse_filter(slurp(ctx.inputs[1]), policy(ctx));
  auto verdict = verify_output_simulation(f, m);
  ctx.summary["ok"] = verdict.ok;
  if (verdict.ok) {
    ctx.lines.push_back("output simulation holds");
  } else {
    std::string sequence;
    for (const auto& y : verdict.witness)
      sequence += (sequence.empty() ? "" : " ") + y;
    ctx.lines.push_back("output simulation FAILS; witness: [" + sequence +
                        "]");
    ctx.summary["witness"] = verdict.witness;
    throw DomainError(ctx.lines.back());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zipped clique cover toolkit for filter minimization"};
  app.require_subcommand(1);
  Ctx ctx;

  auto add_common = [&](CLI::App* sub, bool filters = false) {
    sub->add_flag("--json", ctx.json, "machine-readable summary");
    if (filters)
      sub->add_flag("--prune-unreachable", ctx.prune_unreachable,
                    "prune unreachable states instead of rejecting");
  };

  auto* minimize = app.add_subcommand("minimize", "minimize a filter");
  minimize->add_option("filter", ctx.inputs, "filter JSON file")
      ->required()
      ->expected(1);
  minimize->add_option("--exact-bound", ctx.exact_bound,
                       "vertex bound for the exact solver");
  minimize->add_option("-o,--out", ctx.out, "minimized filter path");
  minimize->add_option("--map", ctx.map_out, "state map path");
  add_common(minimize, true);

  auto* analyze = app.add_subcommand("analyze", "report class membership");
  analyze->add_option("filter", ctx.inputs, "filter JSON file")
      ->required()
      ->expected(1);
  add_common(analyze, true);

  auto* compat = app.add_subcommand(
      "compat", "emit compatibility graph and zipper constraints");
  compat->add_option("filter", ctx.inputs, "filter JSON file")
      ->required()
      ->expected(1);
  compat->add_option("--graph-out", ctx.graph_out, "graph output path");
  compat->add_option("--zippers-out", ctx.zippers_out, "zipper output path");
  add_common(compat, true);

  auto* cover = app.add_subcommand("cover", "minimum clique cover of a graph");
  cover->add_option("graph", ctx.inputs, "graph JSON or DIMACS file")
      ->required()
      ->expected(1);
  cover->add_option("--exact-bound", ctx.exact_bound,
                    "vertex bound for the exact fallback");
  cover->add_option("-o,--out", ctx.out, "cover output path");
  add_common(cover);

  auto* solve = app.add_subcommand("solve", "exact zipped clique cover");
  solve->add_option("instance", ctx.inputs, "instance JSON file")
      ->required()
      ->expected(1);
  solve->add_option("--exact-bound", ctx.exact_bound, "vertex bound");
  solve->add_option("-o,--out", ctx.out, "solution output path");
  add_common(solve);

  auto* repair_cmd = app.add_subcommand("repair", "repair a violating cover");
  repair_cmd->add_option("files", ctx.inputs, "instance JSON, cover JSON")
      ->required()
      ->expected(2);
  repair_cmd->add_option("-o,--out", ctx.out, "repaired cover path");
  add_common(repair_cmd);

  auto* gen = app.add_subcommand("gen", "generate a seeded instance");
  gen->add_option("kind", ctx.kind,
                  "filter|nme|oao|unary|glc|chordal-graph|graph|cpzn-instance")
      ->required();
  gen->add_option("--n", ctx.params.n, "states or vertices");
  gen->add_option("--obs", ctx.params.obs, "alphabet size");
  gen->add_option("--outputs", ctx.params.outputs, "output label count");
  gen->add_option("--density", ctx.params.density, "edge/transition density");
  gen->add_option("--seed", ctx.seed, "random seed");
  gen->add_option("-o,--out", ctx.out, "output path (default stdout)");
  add_common(gen);

  auto* necklace = app.add_subcommand("necklace",
                                      "chordalize a graph with the necklace "
                                      "penalty gadget");
  necklace->add_option("graph", ctx.inputs, "graph JSON or DIMACS file")
      ->required()
      ->expected(1);
  necklace->add_option("-o,--out", ctx.out, "reduction output path");
  add_common(necklace);

  auto* realize = app.add_subcommand(
      "realize", "build a filter whose compatibility graph is the input");
  realize->add_option("graph", ctx.inputs, "graph JSON or DIMACS file")
      ->required()
      ->expected(1);
  realize->add_option("-o,--out", ctx.out, "filter output path");
  add_common(realize);

  auto* verify = app.add_subcommand("verify",
                                    "check output simulation of a candidate");
  verify->add_option("files", ctx.inputs, "filter JSON, candidate JSON")
      ->required()
      ->expected(2);
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (minimize->parsed()) cmd_minimize(ctx);
    else if (analyze->parsed()) cmd_analyze(ctx);
    else if (compat->parsed()) cmd_compat(ctx);
    else if (cover->parsed()) cmd_cover(ctx);
    else if (solve->parsed()) cmd_solve(ctx);
    else if (repair_cmd->parsed()) cmd_repair(ctx);
    else if (gen->parsed()) cmd_gen(ctx);
    else if (necklace->parsed()) cmd_necklace(ctx);
    else if (realize->parsed()) cmd_realize(ctx);
    else if (verify->parsed()) cmd_verify(ctx);
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = 1;
  }

  if (code == 0) {
    if (ctx.json) {
      ctx.summary["artifacts"] = ctx.artifacts;
      ctx.summary["exit"] = code;
      std::cout << ctx.summary.dump() << "\n";
    } else {
      for (const auto& line : ctx.lines) std::cout << line << "\n";
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::cerr << "time: " << elapsed << " ms\n";
  return code;
}
