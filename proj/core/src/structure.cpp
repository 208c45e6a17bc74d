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

#include "tnps/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "tnps/error.hpp"

namespace tnps {

namespace {

// slot_of[v] = index of v among external vertices, or -1.
std::vector<int> external_slots(const TemplateGraph& g) {
  std::vector<int> slot(g.num_vertices(), -1);
  int k = 0;
  for (std::size_t v = 0; v < g.num_vertices(); ++v)
    if (g.is_external(static_cast<int>(v))) slot[v] = k++;
  return slot;
}

}  // namespace

void TnStructure::validate(int rank_max) const {
  if (!graph) throw InvalidArgument("structure has no template graph");
  if (perm.size() != graph->num_external())
    throw InvalidArgument("structure permutation size " + std::to_string(perm.size()) +
                          " != external vertex count " +
                          std::to_string(graph->num_external()));
  if (ranks.size() != graph->num_edges())
    throw InvalidArgument("structure has " + std::to_string(ranks.size()) + " ranks for " +
                          std::to_string(graph->num_edges()) + " edges");
  for (int r : ranks) {
    if (r < 1) throw InvalidArgument("ranks must be >= 1");
    if (rank_max > 0 && r > rank_max)
      throw InvalidArgument("rank " + std::to_string(r) + " exceeds the cap " +
                            std::to_string(rank_max));
  }
}

int TnStructure::mode_of_vertex(int v) const {
  if (!graph->is_external(v)) return -1;
  int slot = 0;
  for (int u = 0; u < v; ++u)
    if (graph->is_external(u)) ++slot;
  return perm(slot);
}

std::string TnStructure::key() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < perm.size(); ++k) os << (k ? "," : "") << perm(static_cast<int>(k)) + 1;
  os << '|';
  for (std::size_t e = 0; e < ranks.size(); ++e) os << (e ? "," : "") << ranks[e];
  return os.str();
}

TnStructure transport(const TnStructure& s, const Permutation& a) {
  const TemplateGraph& g = *s.graph;
  if (a.size() != g.num_vertices())
    throw InvalidArgument("transport: automorphism size mismatch");
  const auto slot = external_slots(g);
  const auto ext = g.external_vertices();

  std::vector<int> perm(ext.size());
  for (std::size_t k = 0; k < ext.size(); ++k) {
    const int image = a(ext[k]);
    const int image_slot = slot[static_cast<std::size_t>(image)];
    if (image_slot < 0) throw InvalidArgument("transport: map sends an external vertex inside");
    perm[k] = s.perm(image_slot);
  }
  std::vector<int> ranks(s.ranks.size());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edges()[e];
    const int image = g.edge_index(a(edge.u), a(edge.v));
    if (image < 0) throw InvalidArgument("transport: map is not an automorphism");
    ranks[e] = s.ranks[static_cast<std::size_t>(image)];
  }
  return TnStructure{s.graph, Permutation(std::move(perm)), std::move(ranks)};
}

TnStructure canonicalize(const TnStructure& s, const AutGroup& aut) {
  TnStructure best = s;
  for (const auto& a : aut.elements) {
    if (a.is_identity()) continue;
    TnStructure t = transport(s, a);
    if (std::tie(t.perm, t.ranks) < std::tie(best.perm, best.ranks)) best = std::move(t);
  }
  return best;
}

TnStructure random_structure(GraphPtr graph, int rank_max, Rng& rng) {
  if (rank_max < 1) throw InvalidArgument("random_structure: rank_max must be >= 1");
  std::vector<int> images(graph->num_external());
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  std::uniform_int_distribution<int> rank(1, rank_max);
  std::vector<int> ranks(graph->num_edges());
  for (int& r : ranks) r = rank(rng);
  return TnStructure{std::move(graph), Permutation(std::move(images)), std::move(ranks)};
}

TnStructure make_structure(GraphPtr graph, std::vector<int> ranks) {
  TnStructure s{graph, Permutation::identity(graph->num_external()), std::move(ranks)};
  s.validate();
  return s;
}

}  // namespace tnps
