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

#ifndef TNPS_GRAPH_HPP_
#define TNPS_GRAPH_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tnps/permutation.hpp"

namespace tnps {

// Undirected edge, always stored with u < v (0-based).
struct Edge {
  int u = 0;
  int v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(int a, int b);

// A simple connected graph on vertices {0, ..., n-1}. Edges are kept sorted,
// so graphs compare as labelled edge sets.
//
// Each vertex is either external (carries one open tensor mode) or internal
// (a pure contraction core, as in hierarchical Tucker or MERA). All vertices
// are external unless stated otherwise.
class TemplateGraph {
 public:
  TemplateGraph() = default;
  // Throws InvalidArgument for self-loops, duplicate edges, out-of-range
  // endpoints or a disconnected graph.
  TemplateGraph(std::size_t n, std::vector<Edge> edges, std::string name = "");
  TemplateGraph(std::size_t n, std::vector<Edge> edges, std::vector<bool> external,
                std::string name = "");

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& name() const { return name_; }

  bool is_external(int v) const { return external_[static_cast<std::size_t>(v)]; }
  const std::vector<bool>& external_flags() const { return external_; }
  std::size_t num_external() const;
  bool all_external() const { return num_external() == n_; }
  // External vertices in increasing order.
  std::vector<int> external_vertices() const;

  std::size_t degree(int v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }
  std::size_t min_degree() const;
  std::size_t max_degree() const;
  const std::vector<int>& neighbors(int v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  bool has_edge(int a, int b) const;
  // Position of edge {a, b} in edges(), or -1.
  int edge_index(int a, int b) const;
  // Indices into edges() of the edges touching v, in edges() order.
  const std::vector<int>& incident_edges(int v) const {
    return incident_[static_cast<std::size_t>(v)];
  }

  friend bool operator==(const TemplateGraph& a, const TemplateGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.external_ == b.external_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<bool> external_;
  std::string name_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> incident_;
  std::vector<int> edge_lookup_;  // n*n table, -1 when absent
};

// g . G: the graph with edge set {(g(i), g(j)) : (i, j) in E}. External flags
// are carried along with their vertices.
TemplateGraph apply_to_graph(const Permutation& g, const TemplateGraph& graph);

// ".graph" text format: first line n, then one "i j" per edge (1-based,
// i < j). Blank lines and '#' comments are ignored. An optional line
// "external v1 v2 ..." marks the external vertices (default: all).
TemplateGraph read_graph(std::istream& is);
void write_graph(std::ostream& os, const TemplateGraph& graph);
TemplateGraph load_graph(const std::filesystem::path& path);

}  // namespace tnps

#endif  // TNPS_GRAPH_HPP_
