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

#include "zipcover/compat.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "zipcover/errors.hpp"

namespace zipcover {

ZipperConstraint::ZipperConstraint(std::string u0, std::string u1,
                                   std::string w0, std::string w1,
                                   std::string obs)
    : u_pair{std::move(u0), std::move(u1)},
      w_pair{std::move(w0), std::move(w1)},
      observation(std::move(obs)) {
  if (u_pair[0] > u_pair[1]) std::swap(u_pair[0], u_pair[1]);
  if (w_pair[0] > w_pair[1]) std::swap(w_pair[0], w_pair[1]);
}

std::vector<ZipperConstraint> parse_zippers_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("zipper JSON parse error: ") + e.what());
  }
  if (!doc.is_array()) throw FormatError("zipper JSON must be an array");
  std::vector<ZipperConstraint> out;
  for (const auto& z : doc) {
    if (!z.is_object() || !z.contains("u") || !z.contains("w") ||
        !z["u"].is_array() || z["u"].size() != 2 || !z["w"].is_array() ||
        z["w"].size() != 2)
      throw FormatError("zipper entries need two-element 'u' and 'w' arrays");
    out.emplace_back(z["u"][0].get<std::string>(),
                     z["u"][1].get<std::string>(),
                     z["w"][0].get<std::string>(),
                     z["w"][1].get<std::string>(),
                     z.value("y", std::string{}));
  }
  canonicalize_zippers(out);
  return out;
}

std::string zippers_to_json(const std::vector<ZipperConstraint>& zippers) {
  auto sorted = zippers;
  canonicalize_zippers(sorted);
  auto doc = nlohmann::json::array();
  for (const auto& z : sorted)
    doc.push_back({{"u", {z.u_pair[0], z.u_pair[1]}},
                   {"w", {z.w_pair[0], z.w_pair[1]}}});
  return doc.dump() + "\n";
}

void canonicalize_zippers(std::vector<ZipperConstraint>& zippers) {
  std::sort(zippers.begin(), zippers.end());
  zippers.erase(std::unique(zippers.begin(), zippers.end()), zippers.end());
}

CompatGraph compatibility_graph(const Filter& f) {
  const int n = f.state_count();
  std::vector<std::vector<bool>> incompat(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (f.output(v) != f.output(w)) incompat[v][w] = incompat[w][v] = true;

  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < n; ++v)
      for (int w = v + 1; w < n; ++w) {
        if (incompat[v][w]) continue;
        for (int y = 0; y < f.obs_count(); ++y) {
          int a = f.next(v, y);
          int b = f.next(w, y);
          if (a != Filter::kNone && b != Filter::kNone && incompat[a][b]) {
            incompat[v][w] = incompat[w][v] = true;
            changed = true;
            break;
          }
        }
      }
  }

  std::vector<std::pair<std::string, std::string>> edges;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w)
      if (!incompat[v][w]) edges.emplace_back(f.state_id(v), f.state_id(w));
  return Graph(f.state_ids(), edges);
}

std::vector<ZipperConstraint> zipper_constraints(const Filter& f,
                                                 const CompatGraph& g) {
  std::vector<ZipperConstraint> out;
  for (const auto& [gu, gv] : g.edges()) {
    int u = f.state_index(g.id_of(gu));
    int v = f.state_index(g.id_of(gv));
    for (int y = 0; y < f.obs_count(); ++y) {
      int cu = f.next(u, y);
      int cv = f.next(v, y);
      if (cu == Filter::kNone || cv == Filter::kNone || cu == cv) continue;
      if (!g.has_edge(f.state_id(cu), f.state_id(cv)))
        throw std::logic_error(
            "zipper target pair is not compatible: children of a "
            "compatible pair must be compatible");
      out.emplace_back(f.state_id(u), f.state_id(v), f.state_id(cu),
                       f.state_id(cv), f.observation_id(y));
    }
  }
  canonicalize_zippers(out);
  return out;
}

}  // namespace zipcover
