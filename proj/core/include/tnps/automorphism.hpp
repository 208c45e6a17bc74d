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

#ifndef TNPS_AUTOMORPHISM_HPP_
#define TNPS_AUTOMORPHISM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "tnps/graph.hpp"
#include "tnps/permutation.hpp"

namespace tnps {

inline constexpr std::size_t kDefaultAutomorphismLimit = 10;

// The automorphism group of a template, listed exhaustively. Elements are
// sorted lexicographically; the identity is always first.
struct AutGroup {
  std::vector<Permutation> elements;

  std::size_t size() const { return elements.size(); }
};

// Every permutation a with a . G == G (external flags included). Backtracks
// over degree-compatible assignments; throws LimitExceeded when the graph has
// more than `limit` vertices.
AutGroup enumerate_automorphisms(const TemplateGraph& graph,
                                 std::size_t limit = kDefaultAutomorphismLimit);

// Some g with g . from == to, or nullopt when the graphs are not isomorphic
// as labelled graphs with external flags.
std::optional<Permutation> find_isomorphism(const TemplateGraph& from,
                                            const TemplateGraph& to);

}  // namespace tnps

#endif  // TNPS_AUTOMORPHISM_HPP_
