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

#include <algorithm>
#include <deque>
#include <numeric>
#include <vector>

#include "zipcover/cover.hpp"

namespace zipcover {

namespace {

// Edmonds' blossom algorithm, O(V^3).  Odd cycles found during the
// alternating-forest search are contracted by redirecting every member
// to a common base vertex.  Vertices are scanned in sorted-id order,
// so the matching is deterministic.
class Blossom {
 public:
  explicit Blossom(const Graph& g) : g_(g), n_(g.n()), match_(n_, -1) {}

  std::vector<int> run() {
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      // cheap greedy step before the full search
      for (int w : g_.neighbors(v))
        if (match_[w] == -1) {
          match_[v] = w;
          match_[w] = v;
          break;
        }
    }
    for (int v = 0; v < n_; ++v) {
      if (match_[v] != -1) continue;
      int leaf = find_augmenting_path(v);
      while (leaf != -1) {
        int prev = parent_[leaf];
        int next = match_[prev];
        match_[leaf] = prev;
        match_[prev] = leaf;
        leaf = next;
      }
    }
    return match_;
  }

 private:
  int lowest_common_base(int a, int b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int stop, int child, std::vector<bool>& in_blossom) {
    while (base_[v] != stop) {
      in_blossom[base_[v]] = true;
      in_blossom[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  // BFS from an exposed root; returns the far end of an augmenting
  // path (walk parents to augment) or -1.
  int find_augmenting_path(int root) {
    parent_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    std::vector<bool> used(n_, false);
    used[root] = true;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          // two even vertices meet: contract the blossom
          int stop = lowest_common_base(v, to);
          std::vector<bool> in_blossom(n_, false);
          mark_path(v, stop, to, in_blossom);
          mark_path(to, stop, v, in_blossom);
          for (int i = 0; i < n_; ++i)
            if (in_blossom[base_[i]]) {
              base_[i] = stop;
              if (!used[i]) {
                used[i] = true;
                queue.push_back(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) return to;
          used[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
};

}  // namespace

std::vector<std::pair<std::string, std::string>> maximum_matching(
    const Graph& g) {
  auto match = Blossom(g).run();
  std::vector<std::pair<std::string, std::string>> out;
  for (int v = 0; v < g.n(); ++v)
    if (match[v] > v) out.emplace_back(g.id_of(v), g.id_of(match[v]));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zipcover
