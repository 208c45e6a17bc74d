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

#ifndef TNPS_STRUCTURE_HPP_
#define TNPS_STRUCTURE_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tnps/automorphism.hpp"
#include "tnps/graph.hpp"
#include "tnps/permutation.hpp"
#include "tnps/random.hpp"

namespace tnps {

using GraphPtr = std::shared_ptr<const TemplateGraph>;

// One point of the search space: a mode-vertex mapping plus a rank per
// template edge.
//
// `perm` acts on external-vertex slots: the k-th external vertex of the
// template (in increasing vertex order) carries tensor mode perm(k). For
// all-external templates this is the relabeling g with G = g . G0 over modes.
// `ranks[e]` is the bond dimension of template edge e (edges() order).
struct TnStructure {
  GraphPtr graph;
  Permutation perm;
  std::vector<int> ranks;

  // Throws InvalidArgument when sizes disagree or a rank is < 1 (or > R when
  // rank_max is non-zero).
  void validate(int rank_max = 0) const;

  std::size_t order() const { return perm.size(); }
  // Tensor mode carried by vertex v, or -1 for internal vertices.
  int mode_of_vertex(int v) const;

  // Deterministic text form "perm|ranks" (1-based perm).
  std::string key() const;

  friend bool operator==(const TnStructure& a, const TnStructure& b) {
    return a.perm == b.perm && a.ranks == b.ranks &&
           (a.graph == b.graph || (a.graph && b.graph && *a.graph == *b.graph));
  }
};

// The structure obtained by relabeling through template automorphism `a`:
// vertex v takes the role of a(v). Describes the same tensor network.
TnStructure transport(const TnStructure& s, const Permutation& a);

// Lexicographically smallest (perm, ranks) among all transports of `s`
// through `aut`. Equivalent structures share one canonical form.
TnStructure canonicalize(const TnStructure& s, const AutGroup& aut);

// Uniform permutation and i.i.d. uniform ranks in [1, R].
TnStructure random_structure(GraphPtr graph, int rank_max, Rng& rng);

// Identity mode mapping with the given ranks.
TnStructure make_structure(GraphPtr graph, std::vector<int> ranks);

}  // namespace tnps

#endif  // TNPS_STRUCTURE_HPP_
