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

#ifndef TNPS_NEIGHBORHOOD_HPP_
#define TNPS_NEIGHBORHOOD_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tnps/automorphism.hpp"
#include "tnps/graph.hpp"
#include "tnps/random.hpp"

namespace tnps {

inline constexpr std::size_t kBallVertexLimit = 8;
inline constexpr std::size_t kBallRadiusLimit = 2;

// Semi-metric between two relabelings of `g0`: the minimum word metric over
// all representatives p1 in g1 Aut(G0) and p2 in g2 Aut(G0). Throws
// InvalidArgument if either graph is not a relabeling of g0.
std::int64_t semi_metric(const TemplateGraph& g1, const TemplateGraph& g2,
                         const TemplateGraph& g0);

// Same, with the automorphism group already enumerated.
std::int64_t semi_metric(const Permutation& g1, const Permutation& g2, const AutGroup& aut);

// The shell {q t_1 ... t_d . G0 : q in g Aut(G0), t_i adjacent transpositions}
// around G = g . G0, as a sorted list of distinct labelled graphs.
std::vector<TemplateGraph> enumerate_shell(const TemplateGraph& g, const TemplateGraph& g0,
                                           std::size_t d);

// The ball: union of the shells of radius 0..radius.
std::vector<TemplateGraph> enumerate_ball(const TemplateGraph& g, const TemplateGraph& g0,
                                          std::size_t radius);

// d rounds of "pick two distinct vertices uniformly and swap their labels".
// With d >= 2 the output may leave the radius-d shell; every member of the
// shell is reachable with positive probability.
TemplateGraph sample_local(const TemplateGraph& g, std::size_t d, Rng& rng);

// The same walk acting on a representative: returns tau_d ... tau_1 * g.
Permutation sample_local(const Permutation& g, std::size_t d, Rng& rng);

}  // namespace tnps

#endif  // TNPS_NEIGHBORHOOD_HPP_
