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

#ifndef TNPS_TEMPLATES_HPP_
#define TNPS_TEMPLATES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "tnps/graph.hpp"

namespace tnps::templates {

// Tensor-train format.
TemplateGraph path(std::size_t n);
// Tensor-ring format; n >= 3.
TemplateGraph cycle(std::size_t n);
// Vertex 0 is the hub.
TemplateGraph star(std::size_t n);
TemplateGraph complete(std::size_t n);
// rows x cols grid (PEPS); vertex (r, c) has index r * cols + c.
TemplateGraph lattice(std::size_t rows, std::size_t cols);
// Heap-ordered binary tree: parent of vertex v > 0 is (v - 1) / 2.
TemplateGraph binary_tree(std::size_t n);

// Hierarchical Tucker over `leaves` external vertices (indices 0..leaves-1)
// joined by a balanced binary tree of leaves - 1 internal vertices.
TemplateGraph hierarchical_tucker(std::size_t leaves);

// A two-layer MERA-like network on n external vertices (n divisible by 4):
// neighbouring externals 2k+1 and 2k+2 (mod n) share a disentangling bond,
// pairs (2k, 2k+1) feed an internal isometry, and isometries are coarse
// grained pairwise into a top layer that is closed by a single edge.
TemplateGraph mera(std::size_t n);

// Resolves a template by name. Accepted forms:
//   path|tt, cycle|tr|ring, star, complete, tree|ttree, lattice RxC|peps,
//   ht, mera, each optionally suffixed with ":N" (or ":RxC" for lattice);
//   otherwise the string is taken as a path to a ".graph" file.
// `order` supplies N when the name does not, counting external vertices.
TemplateGraph from_spec(std::string_view spec, std::optional<std::size_t> order = {});

// Canonical spec string for a built-in template (e.g. "cycle:4"); for graphs
// read from files this is the name they were given.
std::string spec_of(const TemplateGraph& graph);

}  // namespace tnps::templates

#endif  // TNPS_TEMPLATES_HPP_
