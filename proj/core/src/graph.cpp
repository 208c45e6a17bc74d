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

#include "tnps/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tnps/error.hpp"

namespace tnps {

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

TemplateGraph::TemplateGraph(std::size_t n, std::vector<Edge> edges, std::string name)
    : TemplateGraph(n, std::move(edges), std::vector<bool>(n, true), std::move(name)) {}

TemplateGraph::TemplateGraph(std::size_t n, std::vector<Edge> edges,
                             std::vector<bool> external, std::string name)
    : n_(n), edges_(std::move(edges)), external_(std::move(external)), name_(std::move(name)) {
  if (n_ == 0) throw InvalidArgument("graph must have at least one vertex");
  if (external_.size() != n_) throw InvalidArgument("external flag count != vertex count");
  for (auto& e : edges_) {
    if (e.u == e.v) throw InvalidArgument("self-loop on vertex " + std::to_string(e.u + 1));
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(std::max(e.u, e.v)) >= n_)
      throw InvalidArgument("edge endpoint out of range");
    e = make_edge(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidArgument("duplicate edge in graph");

  adjacency_.assign(n_, {});
  incident_.assign(n_, {});
  edge_lookup_.assign(n_ * n_, -1);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const auto [u, v] = edges_[k];
    adjacency_[static_cast<std::size_t>(u)].push_back(v);
    adjacency_[static_cast<std::size_t>(v)].push_back(u);
    incident_[static_cast<std::size_t>(u)].push_back(static_cast<int>(k));
    incident_[static_cast<std::size_t>(v)].push_back(static_cast<int>(k));
    edge_lookup_[static_cast<std::size_t>(u) * n_ + static_cast<std::size_t>(v)] =
        static_cast<int>(k);
    edge_lookup_[static_cast<std::size_t>(v) * n_ + static_cast<std::size_t>(u)] =
        static_cast<int>(k);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  // Connectivity by DFS from vertex 0.
  std::vector<bool> seen(n_, false);
  std::vector<int> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : adjacency_[static_cast<std::size_t>(u)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n_) throw InvalidArgument("template graph is not connected");
}

std::size_t TemplateGraph::num_external() const {
  return static_cast<std::size_t>(std::count(external_.begin(), external_.end(), true));
}

std::vector<int> TemplateGraph::external_vertices() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < n_; ++v)
    if (external_[v]) out.push_back(static_cast<int>(v));
  return out;
}

std::size_t TemplateGraph::min_degree() const {
  std::size_t d = n_;
  for (const auto& adj : adjacency_) d = std::min(d, adj.size());
  return d;
}

std::size_t TemplateGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& adj : adjacency_) d = std::max(d, adj.size());
  return d;
}

bool TemplateGraph::has_edge(int a, int b) const { return edge_index(a, b) >= 0; }

int TemplateGraph::edge_index(int a, int b) const {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n_ || static_cast<std::size_t>(b) >= n_)
    return -1;
  return edge_lookup_[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
}

TemplateGraph apply_to_graph(const Permutation& g, const TemplateGraph& graph) {
  if (g.size() != graph.num_vertices())
    throw InvalidArgument("apply_to_graph: permutation size " + std::to_string(g.size()) +
                          " != vertex count " + std::to_string(graph.num_vertices()));
  std::vector<Edge> edges;
  edges.reserve(graph.num_edges());
  for (const auto& e : graph.edges()) edges.push_back(make_edge(g(e.u), g(e.v)));
  std::vector<bool> external(graph.num_vertices());
  for (std::size_t v = 0; v < graph.num_vertices(); ++v)
    external[static_cast<std::size_t>(g(static_cast<int>(v)))] = graph.is_external(static_cast<int>(v));
  return TemplateGraph(graph.num_vertices(), std::move(edges), std::move(external), graph.name());
}

TemplateGraph read_graph(std::istream& is) {
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Edge> edges;
  std::vector<bool> external;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto bad = [&](const std::string& why) {
      return IoError("graph line " + std::to_string(lineno) + ": " + why);
    };
    if (!have_n) {
      try {
        n = std::stoul(first);
      } catch (...) {
        throw bad("expected vertex count");
      }
      if (n == 0) throw bad("vertex count must be positive");
      have_n = true;
      external.assign(n, true);
      continue;
    }
    if (first == "external") {
      external.assign(n, false);
      int v = 0;
      while (ls >> v) {
        if (v < 1 || static_cast<std::size_t>(v) > n) throw bad("external vertex out of range");
        external[static_cast<std::size_t>(v - 1)] = true;
      }
      continue;
    }
    int i = 0, j = 0;
    try {
      i = std::stoi(first);
    } catch (...) {
      throw bad("expected 'i j'");
    }
    if (!(ls >> j)) throw bad("expected 'i j'");
    if (i < 1 || j < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(j) > n)
      throw bad("vertex out of range");
    if (i >= j) throw bad("edges must be written with i < j");
    edges.push_back(Edge{i - 1, j - 1});
  }
  if (!have_n) throw IoError("graph: empty input");
  try {
    return TemplateGraph(n, std::move(edges), std::move(external), "file");
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(std::string("graph: ") + e.what());
  }
}

void write_graph(std::ostream& os, const TemplateGraph& graph) {
  os << graph.num_vertices() << '\n';
  if (!graph.all_external()) {
    os << "external";
    for (int v : graph.external_vertices()) os << ' ' << v + 1;
    os << '\n';
  }
  for (const auto& e : graph.edges()) os << e.u + 1 << ' ' << e.v + 1 << '\n';
}

TemplateGraph load_graph(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path.string());
  return read_graph(is);
}

}  // namespace tnps
