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

#include "tnps/templates.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <functional>

#include "tnps/error.hpp"

namespace tnps::templates {

namespace {

std::string with_size(const char* base, std::size_t n) {
  return std::string(base) + ":" + std::to_string(n);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

std::size_t parse_count(std::string_view s, std::string_view spec) {
  std::size_t n = 0;
  if (s.empty()) throw InvalidArgument("bad template spec '" + std::string(spec) + "'");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InvalidArgument("bad template spec '" + std::string(spec) + "'");
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  return n;
}

}  // namespace

TemplateGraph path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    edges.push_back({static_cast<int>(i), static_cast<int>(i + 1)});
  return TemplateGraph(n, std::move(edges), with_size("path", n));
}

TemplateGraph cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back(make_edge(static_cast<int>(i), static_cast<int>((i + 1) % n)));
  return TemplateGraph(n, std::move(edges), with_size("cycle", n));
}

TemplateGraph star(std::size_t n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) edges.push_back({0, static_cast<int>(i)});
  return TemplateGraph(n, std::move(edges), with_size("star", n));
}

TemplateGraph complete(std::size_t n) {
  require(n >= 1, "complete needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.push_back({static_cast<int>(i), static_cast<int>(j)});
  return TemplateGraph(n, std::move(edges), with_size("complete", n));
}

TemplateGraph lattice(std::size_t rows, std::size_t cols) {
  require(rows >= 1 && cols >= 1, "lattice needs rows, cols >= 1");
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<int>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  return TemplateGraph(rows * cols, std::move(edges),
                       "lattice:" + std::to_string(rows) + "x" + std::to_string(cols));
}

TemplateGraph binary_tree(std::size_t n) {
  require(n >= 1, "tree needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v)
    edges.push_back(make_edge(static_cast<int>((v - 1) / 2), static_cast<int>(v)));
  return TemplateGraph(n, std::move(edges), with_size("tree", n));
}

TemplateGraph hierarchical_tucker(std::size_t leaves) {
  require(leaves >= 2, "ht needs at least 2 leaves");
  std::vector<Edge> edges;
  int next_internal = static_cast<int>(leaves);
  // Returns the vertex representing leaves [lo, hi).
  std::function<int(int, int)> build = [&](int lo, int hi) -> int {
    if (hi - lo == 1) return lo;
    const int node = next_internal++;
    const int mid = lo + (hi - lo + 1) / 2;
    edges.push_back(make_edge(node, build(lo, mid)));
    edges.push_back(make_edge(node, build(mid, hi)));
    return node;
  };
  build(0, static_cast<int>(leaves));
  const auto n = static_cast<std::size_t>(next_internal);
  std::vector<bool> external(n, false);
  std::fill(external.begin(), external.begin() + static_cast<std::ptrdiff_t>(leaves), true);
  return TemplateGraph(n, std::move(edges), std::move(external), with_size("ht", leaves));
}

TemplateGraph mera(std::size_t n) {
  require(n >= 4 && n % 4 == 0, "mera needs a multiple of 4 external vertices");
  std::vector<Edge> edges;
  const int ext = static_cast<int>(n);
  const int isometries = ext / 2;
  const int tops = isometries / 2;
  for (int k = 0; k < isometries; ++k) {
    edges.push_back(make_edge(2 * k + 1, (2 * k + 2) % ext));  // disentangling bond
    const int w = ext + k;
    edges.push_back(make_edge(w, 2 * k));
    edges.push_back(make_edge(w, 2 * k + 1));
  }
  for (int t = 0; t < tops; ++t) {
    const int top = ext + isometries + t;
    edges.push_back(make_edge(top, ext + 2 * t));
    edges.push_back(make_edge(top, ext + 2 * t + 1));
  }
  for (int t = 0; t + 1 < tops; ++t)
    edges.push_back(make_edge(ext + isometries + t, ext + isometries + t + 1));
  const auto total = static_cast<std::size_t>(ext + isometries + tops);
  std::vector<bool> external(total, false);
  std::fill(external.begin(), external.begin() + ext, true);
  return TemplateGraph(total, std::move(edges), std::move(external), with_size("mera", n));
}

TemplateGraph from_spec(std::string_view spec, std::optional<std::size_t> order) {
  std::string name(spec);
  std::string arg;
  if (auto pos = name.find_first_of(": "); pos != std::string::npos) {
    arg = name.substr(pos + 1);
    name.erase(pos);
  }
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

  auto count = [&](std::size_t fallback) -> std::size_t {
    if (!arg.empty()) return parse_count(arg, spec);
    if (order) return *order;
    if (fallback) return fallback;
    throw InvalidArgument("template '" + std::string(spec) + "' needs a size (e.g. " +
                          name + ":4)");
  };

  if (name == "path" || name == "tt") return path(count(0));
  if (name == "cycle" || name == "tr" || name == "ring") return cycle(count(0));
  if (name == "star") return star(count(0));
  if (name == "complete") return complete(count(0));
  if (name == "tree" || name == "ttree") return binary_tree(count(0));
  if (name == "ht") return hierarchical_tucker(count(6));
  if (name == "mera") return mera(count(8));
  if (name == "lattice" || name == "peps") {
    if (const auto x = arg.find_first_of("xX"); x != std::string::npos) {
      return lattice(parse_count(std::string_view(arg).substr(0, x), spec),
                     parse_count(std::string_view(arg).substr(x + 1), spec));
    }
    const std::size_t n = count(6);
    if (n % 2 != 0) throw InvalidArgument("peps without RxC needs an even order");
    return lattice(2, n / 2);
  }

  const std::filesystem::path file(spec);
  if (!std::filesystem::exists(file))
    throw InvalidArgument("unknown template '" + std::string(spec) + "'");
  TemplateGraph g = load_graph(file);
  return TemplateGraph(g.num_vertices(), g.edges(), g.external_flags(), std::string(spec));
}

std::string spec_of(const TemplateGraph& graph) { return graph.name(); }

}  // namespace tnps::templates
