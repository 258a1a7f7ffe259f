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

#include "zipcover/filter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "json.hpp"
#include "zipcover/errors.hpp"

namespace zipcover {

int Filter::state_index(const std::string& id) const {
  auto it = std::lower_bound(state_ids_.begin(), state_ids_.end(), id);
  if (it == state_ids_.end() || *it != id) return kNone;
  return static_cast<int>(it - state_ids_.begin());
}

int Filter::obs_index(const std::string& id) const {
  auto it = std::lower_bound(obs_ids_.begin(), obs_ids_.end(), id);
  if (it == obs_ids_.end() || *it != id) return kNone;
  return static_cast<int>(it - obs_ids_.begin());
}

int Filter::transition_count() const {
  int total = 0;
  for (const auto& row : next_)
    for (int t : row)
      if (t != kNone) ++total;
  return total;
}

namespace {

std::vector<bool> reachable_states(const std::vector<std::vector<int>>& next,
                                   int initial) {
  std::vector<bool> seen(next.size(), false);
  std::deque<int> queue{initial};
  seen[initial] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int t : next[s])
      if (t != Filter::kNone && !seen[t]) {
        seen[t] = true;
        queue.push_back(t);
      }
  }
  return seen;
}

}  // namespace

Filter build_filter(const FilterSpec& spec, UnreachablePolicy policy) {
  if (spec.states.empty()) throw FormatError("filter has no states");
  if (spec.observations.empty())
    throw FormatError("filter has an empty observation alphabet");

  Filter f;
  std::map<std::string, std::string> outputs;
  for (const auto& [id, out] : spec.states) {
    if (!outputs.emplace(id, out).second)
      throw FormatError("duplicate state id '" + id + "'");
    f.state_ids_.push_back(id);
  }
  std::sort(f.state_ids_.begin(), f.state_ids_.end());
  for (const auto& id : f.state_ids_) f.outputs_.push_back(outputs[id]);

  f.obs_ids_ = spec.observations;
  std::sort(f.obs_ids_.begin(), f.obs_ids_.end());
  f.obs_ids_.erase(std::unique(f.obs_ids_.begin(), f.obs_ids_.end()),
                   f.obs_ids_.end());

  f.initial_ = f.state_index(spec.initial);
  if (f.initial_ == Filter::kNone)
    throw FormatError("initial state '" + spec.initial + "' is not a state");

  f.next_.assign(f.state_count(), std::vector<int>(f.obs_count(), Filter::kNone));
  for (const auto& [from, on, to] : spec.transitions) {
    int s = f.state_index(from);
    int y = f.obs_index(on);
    int t = f.state_index(to);
    if (s == Filter::kNone)
      throw FormatError("transition from unknown state '" + from + "'");
    if (t == Filter::kNone)
      throw FormatError("transition to unknown state '" + to + "'");
    if (y == Filter::kNone)
      throw FormatError("transition on unknown observation '" + on + "'");
    if (f.next_[s][y] != Filter::kNone)
      throw FormatError("determinism violation: two transitions from '" +
                        from + "' on '" + on + "'");
    f.next_[s][y] = t;
  }

  auto seen = reachable_states(f.next_, f.initial_);
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    if (policy == UnreachablePolicy::kReject) {
      std::string names;
      for (int s = 0; s < f.state_count(); ++s)
        if (!seen[s]) names += (names.empty() ? "" : ", ") + f.state_ids_[s];
      throw FormatError("unreachable states: " + names);
    }
    FilterSpec pruned;
    pruned.initial = spec.initial;
    pruned.observations = f.obs_ids_;
    for (int s = 0; s < f.state_count(); ++s)
      if (seen[s]) pruned.states.emplace_back(f.state_ids_[s], f.outputs_[s]);
    for (int s = 0; s < f.state_count(); ++s) {
      if (!seen[s]) continue;
      for (int y = 0; y < f.obs_count(); ++y)
        if (f.next_[s][y] != Filter::kNone)
          pruned.transitions.emplace_back(f.state_ids_[s], f.obs_ids_[y],
                                          f.state_ids_[f.next_[s][y]]);
    }
    return build_filter(pruned, UnreachablePolicy::kReject);
  }
  return f;
}

Filter parse_filter(const std::string& text, UnreachablePolicy policy) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string("filter JSON parse error: ") + e.what());
  }
  for (const char* key : {"states", "initial", "observations", "transitions"})
    if (!doc.is_object() || !doc.contains(key))
      throw FormatError(std::string("filter JSON missing '") + key + "'");

  FilterSpec spec;
  for (const auto& st : doc["states"]) {
    if (!st.is_object() || !st.contains("id") || !st.contains("output") ||
        !st["id"].is_string() || !st["output"].is_string())
      throw FormatError("filter state entries need string 'id' and 'output'");
    spec.states.emplace_back(st["id"].get<std::string>(),
                             st["output"].get<std::string>());
  }
  if (!doc["initial"].is_string())
    throw FormatError("filter 'initial' must be a string");
  spec.initial = doc["initial"].get<std::string>();
  for (const auto& y : doc["observations"]) {
    if (!y.is_string()) throw FormatError("observations must be strings");
    spec.observations.push_back(y.get<std::string>());
  }
  for (const auto& tr : doc["transitions"]) {
    if (!tr.is_object() || !tr.contains("from") || !tr.contains("on") ||
        !tr.contains("to"))
      throw FormatError("filter transitions need 'from', 'on' and 'to'");
    spec.transitions.emplace_back(tr["from"].get<std::string>(),
                                  tr["on"].get<std::string>(),
                                  tr["to"].get<std::string>());
  }
  return build_filter(spec, policy);
}

std::string filter_to_json(const Filter& f) {
  nlohmann::json doc;
  auto states = nlohmann::json::array();
  for (int s = 0; s < f.state_count(); ++s)
    states.push_back({{"id", f.state_id(s)}, {"output", f.output(s)}});
  doc["states"] = std::move(states);
  doc["initial"] = f.state_id(f.initial());
  doc["observations"] = f.observation_ids();
  auto transitions = nlohmann::json::array();
  for (int s = 0; s < f.state_count(); ++s)
    for (int y = 0; y < f.obs_count(); ++y)
      if (f.defined(s, y))
        transitions.push_back({{"from", f.state_id(s)},
                               {"on", f.observation_id(y)},
                               {"to", f.state_id(f.next(s, y))}});
  doc["transitions"] = std::move(transitions);
  return doc.dump() + "\n";
}

TraceResult trace(const Filter& f, const std::vector<std::string>& seq) {
  TraceResult result;
  int state = f.initial();
  result.outputs.push_back(f.output(state));
  for (std::size_t i = 0; i < seq.size(); ++i) {
    int y = f.obs_index(seq[i]);
    if (y == Filter::kNone)
      throw DomainError("observation '" + seq[i] + "' is not in the alphabet");
    int t = f.next(state, y);
    if (t == Filter::kNone) {
      result.crash_index = i;
      return result;
    }
    state = t;
    result.outputs.push_back(f.output(state));
  }
  return result;
}

bool extensions_contained(const Filter& f, int v, int w) {
  const int n = f.state_count();
  std::vector<bool> seen(static_cast<std::size_t>(n) * n, false);
  std::deque<std::pair<int, int>> queue{{v, w}};
  seen[static_cast<std::size_t>(v) * n + w] = true;
  while (!queue.empty()) {
    auto [a, b] = queue.front();
    queue.pop_front();
    for (int y = 0; y < f.obs_count(); ++y) {
      int a2 = f.next(a, y);
      if (a2 == Filter::kNone) continue;
      int b2 = f.next(b, y);
      if (b2 == Filter::kNone) return false;
      std::size_t key = static_cast<std::size_t>(a2) * n + b2;
      if (!seen[key]) {
        seen[key] = true;
        queue.emplace_back(a2, b2);
      }
    }
  }
  return true;
}

bool extensions_contained(const Filter& f, const std::string& v,
                          const std::string& w) {
  int a = f.state_index(v);
  int b = f.state_index(w);
  if (a == Filter::kNone || b == Filter::kNone)
    throw DomainError("extensions_contained: unknown state id");
  return extensions_contained(f, a, b);
}

SimulationResult verify_output_simulation(const Filter& f, const Filter& m) {
  const int nm = m.state_count();
  // Pair -> BFS predecessor (pair key, observation), for witness
  // reconstruction.
  std::map<long long, std::pair<long long, int>> parent;
  auto key = [nm](int a, int b) {
    return static_cast<long long>(a) * nm + b;
  };
  auto witness_to = [&](long long k, int extra_obs) {
    std::vector<int> rev;
    if (extra_obs >= 0) rev.push_back(extra_obs);
    while (parent.at(k).second >= 0) {
      rev.push_back(parent.at(k).second);
      k = parent.at(k).first;
    }
    SimulationResult r;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it)
      r.witness.push_back(f.observation_id(*it));
    return r;
  };

  std::deque<long long> queue;
  long long root = key(f.initial(), m.initial());
  parent[root] = {root, -1};
  queue.push_back(root);
  while (!queue.empty()) {
    long long k = queue.front();
    queue.pop_front();
    int a = static_cast<int>(k / nm);
    int b = static_cast<int>(k % nm);
    if (f.output(a) != m.output(b)) return witness_to(k, -1);
    for (int y = 0; y < f.obs_count(); ++y) {
      int a2 = f.next(a, y);
      if (a2 == Filter::kNone) continue;
      int ym = m.obs_index(f.observation_id(y));
      int b2 = ym == Filter::kNone ? Filter::kNone : m.next(b, ym);
      if (b2 == Filter::kNone) return witness_to(k, y);
      long long k2 = key(a2, b2);
      if (!parent.count(k2)) {
        parent[k2] = {k, y};
        queue.push_back(k2);
      }
    }
  }
  SimulationResult r;
  r.ok = true;
  return r;
}

Filter canonical_form(const Filter& f) {
  std::vector<int> rank(f.state_count(), -1);
  std::vector<int> order;
  std::deque<int> queue{f.initial()};
  rank[f.initial()] = 0;
  order.push_back(f.initial());
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int y = 0; y < f.obs_count(); ++y) {
      int t = f.next(s, y);
      if (t != Filter::kNone && rank[t] < 0) {
        rank[t] = static_cast<int>(order.size());
        order.push_back(t);
        queue.push_back(t);
      }
    }
  }
  FilterSpec spec;
  spec.observations = f.observation_ids();
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    spec.states.emplace_back(std::to_string(i), f.output(order[i]));
  spec.initial = "0";
  for (int i = 0; i < static_cast<int>(order.size()); ++i)
    for (int y = 0; y < f.obs_count(); ++y) {
      int t = f.next(order[i], y);
      if (t != Filter::kNone)
        spec.transitions.emplace_back(std::to_string(i), f.observation_id(y),
                                      std::to_string(rank[t]));
    }
  return build_filter(spec);
}

}  // namespace zipcover
