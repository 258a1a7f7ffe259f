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

#include "zipcover/exact.hpp"

#include <algorithm>
#include <cstdint>

#include "zipcover/errors.hpp"

namespace zipcover {

namespace {

struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void and_with(const Bits& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] &= o.w[k];
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] & ~o.w[k]) return false;
    return true;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w.size(); ++k)
      if (w[k] & o.w[k]) return true;
    return false;
  }
  friend bool operator==(const Bits& a, const Bits& b) { return a.w == b.w; }
  friend bool operator<(const Bits& a, const Bits& b) { return a.w < b.w; }
};

class CoverEngine {
 public:
  CoverEngine(const Graph& g, const std::vector<ZipperConstraint>& zippers,
              const ExactOptions& opts)
      : g_(g), n_(g.n()), assigned_(g.n()) {
    closed_.assign(n_, Bits(n_));
    open_.assign(n_, Bits(n_));
    for (int v = 0; v < n_; ++v) {
      closed_[v].set(v);
      for (int u : g.neighbors(v)) {
        closed_[v].set(u);
        open_[v].set(u);
      }
    }

    for (const auto& z : zippers) {
      Zip zip;
      zip.u0 = require_vertex(z.u_pair[0]);
      zip.u1 = require_vertex(z.u_pair[1]);
      zip.w0 = require_vertex(z.w_pair[0]);
      zip.w1 = require_vertex(z.w_pair[1]);
      if (!g.has_edge(zip.u0, zip.u1) || !g.has_edge(zip.w0, zip.w1))
        throw DomainError("zipper constraint pair does not span an edge");
      zips_.push_back(zip);
    }
    for (const auto& [a, b] : opts.required_pairs) {
      int u = require_vertex(a);
      int v = require_vertex(b);
      if (!g.has_edge(u, v))
        throw DomainError("required pair {" + a + ", " + b +
                          "} is not an edge");
      required_.emplace_back(u, v);
    }

    // Assignment order: by component, inside a component by descending
    // degree; ties on the smaller index.  The greedy independent set
    // scans ascending degree so low-degree fringes are counted first.
    for (const auto& comp : g.connected_components())
      for (int v : sorted_by_degree(comp, /*descending=*/true))
        order_.push_back(v);
    std::vector<int> everything(n_);
    for (int v = 0; v < n_; ++v) everything[v] = v;
    is_order_ = sorted_by_degree(everything, /*descending=*/false);
  }

  CliqueCover solve() {
    // All singletons plus one clique per required pair is always
    // feasible: no clique ever holds a full u-pair.
    best_.clear();
    for (int v = 0; v < n_; ++v) {
      Bits b(n_);
      b.set(v);
      best_.push_back(b);
    }
    for (auto [u, v] : required_) {
      Bits b(n_);
      b.set(u);
      b.set(v);
      best_.push_back(b);
    }
    dedup(best_);
    best_size_ = static_cast<int>(best_.size());

    parts_.clear();
    cands_.clear();
    if (n_ > 0) dfs(0);

    CliqueCover cover;
    for (const auto& part : best_) {
      std::vector<std::string> clique;
      for (int v = 0; v < n_; ++v)
        if (part.test(v)) clique.push_back(g_.id_of(v));
      cover.cliques.push_back(std::move(clique));
    }
    canonicalize_cover(cover);
    return cover;
  }

 private:
  struct Zip {
    int u0, u1, w0, w1;
  };

  int require_vertex(const std::string& id) const {
    int v = g_.index_of(id);
    if (v < 0)
      throw DomainError("zipper references unknown vertex '" + id + "'");
    return v;
  }

  std::vector<int> sorted_by_degree(std::vector<int> vs, bool descending) {
    std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) {
      int da = g_.degree(a), db = g_.degree(b);
      if (da != db) return descending ? da > db : da < db;
      return a < b;
    });
    return vs;
  }

  static void dedup(std::vector<Bits>& parts) {
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  }

  // Greedy independent set over the unassigned vertices.  Non-adjacent
  // vertices can never share a clique, so the final part count is at
  // least the set's size, and members that fit no current part each
  // force a fresh one.
  int lower_bound(std::size_t pos) const {
    Bits picked(n_);
    Bits blocked(n_);
    int total = 0;
    int unjoinable = 0;
    for (int v : is_order_) {
      if (assigned_.test(v) || blocked.test(v)) continue;
      picked.set(v);
      blocked.set(v);
      for (std::size_t k = 0; k < blocked.w.size(); ++k)
        blocked.w[k] |= open_[v].w[k];
      ++total;
      bool joinable = false;
      for (const auto& cand : cands_)
        if (cand.test(v)) {
          joinable = true;
          break;
        }
      if (!joinable) ++unjoinable;
    }
    (void)pos;
    int parts = static_cast<int>(parts_.size());
    return std::max(parts + unjoinable, total);
  }

  void dfs(std::size_t pos) {
    if (lower_bound(pos) >= best_size_) return;
    if (pos == order_.size()) {
      try_leaf();
      return;
    }
    int v = order_[pos];
    assigned_.set(v);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (!cands_[i].test(v)) continue;
      Bits saved_cand = cands_[i];
      parts_[i].set(v);
      cands_[i].and_with(closed_[v]);
      dfs(pos + 1);
      cands_[i] = saved_cand;
      // parts_[i] restore: clear the bit
      parts_[i].w[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
    if (static_cast<int>(parts_.size()) + 1 < best_size_) {
      Bits member(n_);
      member.set(v);
      parts_.push_back(member);
      cands_.push_back(closed_[v]);
      dfs(pos + 1);
      parts_.pop_back();
      cands_.pop_back();
    }
    assigned_.w[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  void try_leaf() {
    std::vector<Bits> expanded = parts_;
    expand_budget_ = 1 << 20;
    if (!expand(expanded)) return;
    dedup(expanded);
    if (static_cast<int>(expanded.size()) < best_size_) {
      best_size_ = static_cast<int>(expanded.size());
      best_ = std::move(expanded);
    }
  }

  bool pair_covered(const std::vector<Bits>& cover, int a, int b) const {
    for (const auto& part : cover)
      if (part.test(a) && part.test(b)) return true;
    return false;
  }

  // Insert obliged target pairs into cliques until every triggered
  // constraint is met.  Inserting may trigger further constraints;
  // backtracks over the receiving clique.
  bool expand(std::vector<Bits>& exp) {
    if (--expand_budget_ < 0)
      throw DomainError("zipper completion search exceeded its budget");
    int need0 = -1, need1 = -1;
    for (auto [u, v] : required_)
      if (!pair_covered(exp, u, v)) {
        need0 = u;
        need1 = v;
        break;
      }
    if (need0 < 0)
      for (const auto& z : zips_) {
        if (!pair_covered(exp, z.u0, z.u1)) continue;
        if (pair_covered(exp, z.w0, z.w1)) continue;
        need0 = z.w0;
        need1 = z.w1;
        break;
      }
    if (need0 < 0) return true;

    for (std::size_t j = 0; j < exp.size(); ++j) {
      if (!exp[j].subset_of(closed_[need0]) ||
          !exp[j].subset_of(closed_[need1]))
        continue;
      Bits saved = exp[j];
      exp[j].set(need0);
      exp[j].set(need1);
      if (expand(exp)) return true;
      exp[j] = saved;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<Bits> closed_;
  std::vector<Bits> open_;
  std::vector<Zip> zips_;
  std::vector<std::pair<int, int>> required_;
  std::vector<int> order_;
  std::vector<int> is_order_;

  std::vector<Bits> parts_;
  std::vector<Bits> cands_;
  Bits assigned_;
  std::vector<Bits> best_;
  int best_size_ = 0;
  long long expand_budget_ = 0;
};

}  // namespace

CliqueCover exact_zipped_cover(const Graph& g,
                               const std::vector<ZipperConstraint>& zippers,
                               const ExactOptions& opts) {
  if (g.n() > opts.max_vertices)
    throw DomainError("exact cover bound exceeded: " +
                      std::to_string(g.n()) + " > " +
                      std::to_string(opts.max_vertices) + " vertices");
  CoverEngine engine(g, zippers, opts);
  return engine.solve();
}

}  // namespace zipcover
