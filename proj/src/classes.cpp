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

#include "zipcover/classes.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "zipcover/cover.hpp"
#include "zipcover/errors.hpp"

namespace zipcover {

NmeCheck is_nme(const Filter& f) {
  for (int s = 0; s < f.state_count(); ++s)
    for (int y = 0; y < f.obs_count(); ++y)
      if (!f.defined(s, y))
        return {false, f.state_id(s), f.observation_id(y)};
  return {true, {}, {}};
}

OaoCheck is_oao(const Filter& f) {
  for (int y = 0; y < f.obs_count(); ++y) {
    int first = Filter::kNone;
    for (int s = 0; s < f.state_count(); ++s) {
      if (!f.defined(s, y)) continue;
      if (first == Filter::kNone) {
        first = s;
      } else {
        return {false, f.observation_id(y), f.state_id(first), f.state_id(s)};
      }
    }
  }
  return {true, {}, {}, {}};
}

bool is_unary(const Filter& f) { return f.obs_count() == 1; }

namespace {

GlcCheck glc_against(const Filter& f, const CompatGraph& g) {
  for (const auto& [u, v] : g.edges()) {
    int a = f.state_index(g.id_of(u));
    int b = f.state_index(g.id_of(v));
    if (!extensions_contained(f, a, b) && !extensions_contained(f, b, a))
      return {false, f.state_id(std::min(a, b)), f.state_id(std::max(a, b))};
  }
  return {true, {}, {}};
}

NcCheck nc_against(const Graph& g) {
  std::vector<std::vector<int>> closed(g.n());
  for (int v = 0; v < g.n(); ++v) closed[v] = g.closed_neighborhood(v);
  auto subset = [&](int a, int b) {
    return std::includes(closed[b].begin(), closed[b].end(),
                         closed[a].begin(), closed[a].end());
  };
  for (int v = 0; v < g.n(); ++v)
    for (int w = v + 1; w < g.n(); ++w) {
      bool overlap = false;
      std::size_t i = 0, j = 0;
      while (i < closed[v].size() && j < closed[w].size()) {
        if (closed[v][i] == closed[w][j]) {
          overlap = true;
          break;
        }
        closed[v][i] < closed[w][j] ? ++i : ++j;
      }
      if (!overlap) continue;
      if (!subset(v, w) && !subset(w, v)) return {false, g.id_of(v), g.id_of(w)};
    }
  return {true, {}, {}};
}

EquivalenceCheck equivalence_against(const Graph& g) {
  for (int u = 0; u < g.n(); ++u)
    for (int w = u + 1; w < g.n(); ++w) {
      if (g.has_edge(u, w)) continue;
      for (int v : g.neighbors(u))
        if (g.has_edge(v, w))
          return {false, {g.id_of(u), g.id_of(v), g.id_of(w)}};
    }
  return {true, {}};
}

}  // namespace

GlcCheck is_glc(const Filter& f) {
  return glc_against(f, compatibility_graph(f));
}

NcCheck is_nc(const Filter& f) { return nc_against(compatibility_graph(f)); }

EquivalenceCheck is_compat_equivalence(const Filter& f) {
  return equivalence_against(compatibility_graph(f));
}

CpznCheck is_cpzn(const Graph& g, const std::vector<ZipperConstraint>& z) {
  std::vector<std::vector<int>> closed(g.n());
  for (int v = 0; v < g.n(); ++v) closed[v] = g.closed_neighborhood(v);
  auto subset = [&](int a, int b) {
    return std::includes(closed[b].begin(), closed[b].end(),
                         closed[a].begin(), closed[a].end());
  };
  auto sorted = z;
  canonicalize_zippers(sorted);
  for (const auto& constraint : sorted) {
    int w0 = g.index_of(constraint.w_pair[0]);
    int w1 = g.index_of(constraint.w_pair[1]);
    if (w0 < 0 || w1 < 0)
      throw DomainError("zipper target outside the graph: '" +
                        constraint.w_pair[w0 < 0 ? 0 : 1] + "'");
    if (!subset(w0, w1) && !subset(w1, w0)) {
      CpznCheck check;
      check.holds = false;
      check.witness = constraint;
      return check;
    }
  }
  CpznCheck check;
  check.holds = true;
  return check;
}

ClassReport classify(const Filter& f) {
  CompatGraph g = compatibility_graph(f);
  auto zippers = zipper_constraints(f, g);

  ClassReport report;
  report.degenerate = f.state_count() == 1 || f.transition_count() == 0;
  report.nme = is_nme(f);
  report.oao = is_oao(f);
  report.unary = is_unary(f);
  report.glc = glc_against(f, g);
  report.nc = nc_against(g);
  report.compat_equivalence = equivalence_against(g);
  report.cpzn = is_cpzn(g, zippers);
  auto chordality = recognize_chordal(g);
  report.chordal_compat = chordality.chordal();
  report.hole = chordality.hole;
  report.cluster_compat = g.is_cluster_graph();

  auto defect = [](const char* what) {
    throw std::logic_error(std::string("class implication violated: ") + what);
  };
  if (report.nc.holds != report.compat_equivalence.holds)
    defect("NC must coincide with transitive compatibility");
  if (report.nme.holds && !(report.glc.holds && report.nc.holds))
    defect("NME filters are GLC and NC");
  if (report.unary && !report.glc.holds) defect("unary filters are GLC");
  if (report.oao.holds && !report.nc.holds) defect("OAO filters are NC");
  if (report.glc.holds && !(report.chordal_compat && report.cpzn.holds))
    defect("GLC filters have chordal graphs and repairable constraints");
  if (report.nc.holds && !(report.cluster_compat && report.cpzn.holds))
    defect("NC filters have cluster graphs and repairable constraints");
  return report;
}

std::string class_report_to_json(const ClassReport& report) {
  nlohmann::json doc;
  doc["degenerate"] = report.degenerate;
  doc["nme"]["holds"] = report.nme.holds;
  if (!report.nme.holds)
    doc["nme"]["witness"] = {{"state", report.nme.state},
                             {"missing_observation",
                              report.nme.missing_observation}};
  doc["oao"]["holds"] = report.oao.holds;
  if (!report.oao.holds)
    doc["oao"]["witness"] = {{"observation", report.oao.observation},
                             {"states", {report.oao.state_a,
                                         report.oao.state_b}}};
  doc["unary"] = report.unary;
  doc["glc"]["holds"] = report.glc.holds;
  if (!report.glc.holds)
    doc["glc"]["witness"] = {report.glc.state_a, report.glc.state_b};
  doc["nc"]["holds"] = report.nc.holds;
  if (!report.nc.holds)
    doc["nc"]["witness"] = {report.nc.vertex_a, report.nc.vertex_b};
  doc["compat_equivalence"]["holds"] = report.compat_equivalence.holds;
  if (!report.compat_equivalence.holds)
    doc["compat_equivalence"]["witness"] = report.compat_equivalence.witness;
  doc["cpzn"]["holds"] = report.cpzn.holds;
  if (!report.cpzn.holds && report.cpzn.witness)
    doc["cpzn"]["witness"] = {
        {"u", {report.cpzn.witness->u_pair[0], report.cpzn.witness->u_pair[1]}},
        {"w", {report.cpzn.witness->w_pair[0], report.cpzn.witness->w_pair[1]}}};
  doc["chordal_compat"]["holds"] = report.chordal_compat;
  if (!report.chordal_compat) doc["chordal_compat"]["hole"] = report.hole;
  doc["cluster_compat"] = report.cluster_compat;
  return doc.dump() + "\n";
}

}  // namespace zipcover
