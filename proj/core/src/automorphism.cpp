// Copyright 2026 The tnps Authors
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

#include "tnps/automorphism.hpp"

#include <algorithm>
#include <string>

#include "tnps/error.hpp"

namespace tnps {

namespace {

// Sorted degrees of a vertex's neighbours; a cheap invariant for pruning.
std::vector<std::size_t> neighbour_degrees(const TemplateGraph& g, int v) {
  std::vector<std::size_t> out;
  for (int w : g.neighbors(v)) out.push_back(g.degree(w));
  std::sort(out.begin(), out.end());
  return out;
}

// Backtracking search for bijections m with m . from == to.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const TemplateGraph& from, const TemplateGraph& to)
      : from_(from), to_(to), n_(from.num_vertices()) {
    // Visit vertices in BFS order so adjacency constraints bite early.
    std::vector<bool> seen(n_, false);
    order_.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < order_.size(); ++head)
      for (int w : from_.neighbors(order_[head]))
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          order_.push_back(w);
        }
    for (std::size_t v = 0; v < n_; ++v) {
      from_sig_.push_back(neighbour_degrees(from_, static_cast<int>(v)));
      to_sig_.push_back(neighbour_degrees(to_, static_cast<int>(v)));
    }
    map_.assign(n_, -1);
    used_.assign(n_, false);
  }

  // Calls visit(map) for each isomorphism; stops early if visit returns false.
  template <typename Visit>
  void run(Visit&& visit) {
    if (!compatible_sizes()) return;
    stop_ = false;
    recurse(0, visit);
  }

 private:
  bool compatible_sizes() const {
    return from_.num_vertices() == to_.num_vertices() &&
           from_.num_edges() == to_.num_edges() &&
           from_.num_external() == to_.num_external();
  }

  bool candidate_ok(int v, int w) const {
    if (used_[static_cast<std::size_t>(w)]) return false;
    if (from_.degree(v) != to_.degree(w)) return false;
    if (from_.is_external(v) != to_.is_external(w)) return false;
    if (from_sig_[static_cast<std::size_t>(v)] != to_sig_[static_cast<std::size_t>(w)])
      return false;
    // Adjacency with every already-mapped vertex must be preserved both ways.
    for (std::size_t u = 0; u < n_; ++u) {
      const int mu = map_[u];
      if (mu < 0) continue;
      if (from_.has_edge(v, static_cast<int>(u)) != to_.has_edge(w, mu)) return false;
    }
    return true;
  }

  template <typename Visit>
  void recurse(std::size_t depth, Visit& visit) {
    if (stop_) return;
    if (depth == n_) {
      if (!visit(map_)) stop_ = true;
      return;
    }
    const int v = order_[depth];
    for (std::size_t w = 0; w < n_; ++w) {
      if (!candidate_ok(v, static_cast<int>(w))) continue;
      map_[static_cast<std::size_t>(v)] = static_cast<int>(w);
      used_[w] = true;
      recurse(depth + 1, visit);
      used_[w] = false;
      map_[static_cast<std::size_t>(v)] = -1;
      if (stop_) return;
    }
  }

  const TemplateGraph& from_;
  const TemplateGraph& to_;
  std::size_t n_;
  std::vector<int> order_;
  std::vector<std::vector<std::size_t>> from_sig_;
  std::vector<std::vector<std::size_t>> to_sig_;
  std::vector<int> map_;
  std::vector<bool> used_;
  bool stop_ = false;
};

}  // namespace

AutGroup enumerate_automorphisms(const TemplateGraph& graph, std::size_t limit) {
  if (graph.num_vertices() > limit)
    throw LimitExceeded("enumerate_automorphisms: " + std::to_string(graph.num_vertices()) +
                        " vertices exceeds the limit of " + std::to_string(limit));
  AutGroup group;
  IsomorphismSearch search(graph, graph);
  search.run([&](const std::vector<int>& m) {
    group.elements.emplace_back(m);
    return true;
  });
  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

std::optional<Permutation> find_isomorphism(const TemplateGraph& from,
                                            const TemplateGraph& to) {
  std::optional<Permutation> found;
  IsomorphismSearch search(from, to);
  search.run([&](const std::vector<int>& m) {
    found.emplace(m);
    return false;
  });
  return found;
}

}  // namespace tnps
