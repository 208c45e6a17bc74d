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

#include "tnps/neighborhood.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "tnps/error.hpp"

namespace tnps {

namespace {

Permutation representative(const TemplateGraph& g0, const TemplateGraph& g, const char* which) {
  auto rep = find_isomorphism(g0, g);
  if (!rep)
    throw InvalidArgument(std::string("semi_metric: ") + which +
                          " is not a relabeling of the template");
  return *rep;
}

using GraphKey = std::pair<std::vector<Edge>, std::vector<bool>>;

GraphKey key_of(const TemplateGraph& g) { return {g.edges(), g.external_flags()}; }

void check_limits(const TemplateGraph& g0, std::size_t d) {
  if (g0.num_vertices() > kBallVertexLimit || d > kBallRadiusLimit)
    throw LimitExceeded("neighborhood enumeration limited to n <= " +
                        std::to_string(kBallVertexLimit) + ", d <= " +
                        std::to_string(kBallRadiusLimit));
}

// Adds every q t_1 ... t_d . G0 to `out`.
void collect_shell(const std::vector<Permutation>& coset, const TemplateGraph& g0,
                   std::size_t d, std::map<GraphKey, TemplateGraph>& out) {
  const std::size_t n = g0.num_vertices();
  std::vector<Permutation> words = {Permutation::identity(n)};
  for (std::size_t step = 0; step < d; ++step) {
    std::vector<Permutation> next;
    for (const auto& w : words)
      for (std::size_t i = 0; i + 1 < n; ++i)
        next.push_back(w * Permutation::transposition(n, static_cast<int>(i),
                                                      static_cast<int>(i + 1)));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    words = std::move(next);
  }
  for (const auto& q : coset)
    for (const auto& w : words) {
      TemplateGraph h = apply_to_graph(q * w, g0);
      out.emplace(key_of(h), std::move(h));
    }
}

std::vector<Permutation> left_coset(const TemplateGraph& g, const TemplateGraph& g0) {
  const Permutation rep = representative(g0, g, "center");
  const AutGroup aut = enumerate_automorphisms(g0);
  std::vector<Permutation> coset;
  for (const auto& a : aut.elements) coset.push_back(rep * a);
  return coset;
}

std::vector<TemplateGraph> values_of(std::map<GraphKey, TemplateGraph>& m) {
  std::vector<TemplateGraph> out;
  out.reserve(m.size());
  for (auto& [k, v] : m) out.push_back(std::move(v));
  return out;
}

}  // namespace

std::int64_t semi_metric(const Permutation& g1, const Permutation& g2, const AutGroup& aut) {
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (const auto& a : aut.elements) {
    const Permutation p1 = g1 * a;
    for (const auto& b : aut.elements) {
      best = std::min(best, word_metric(p1, g2 * b));
      if (best == 0) return 0;
    }
  }
  return best;
}

std::int64_t semi_metric(const TemplateGraph& g1, const TemplateGraph& g2,
                         const TemplateGraph& g0) {
  const Permutation r1 = representative(g0, g1, "first graph");
  const Permutation r2 = representative(g0, g2, "second graph");
  return semi_metric(r1, r2, enumerate_automorphisms(g0));
}

std::vector<TemplateGraph> enumerate_shell(const TemplateGraph& g, const TemplateGraph& g0,
                                           std::size_t d) {
  check_limits(g0, d);
  std::map<GraphKey, TemplateGraph> out;
  collect_shell(left_coset(g, g0), g0, d, out);
  return values_of(out);
}

std::vector<TemplateGraph> enumerate_ball(const TemplateGraph& g, const TemplateGraph& g0,
                                          std::size_t radius) {
  check_limits(g0, radius);
  const auto coset = left_coset(g, g0);
  std::map<GraphKey, TemplateGraph> out;
  for (std::size_t d = 0; d <= radius; ++d) collect_shell(coset, g0, d, out);
  return values_of(out);
}

TemplateGraph sample_local(const TemplateGraph& g, std::size_t d, Rng& rng) {
  const Permutation walk =
      sample_local(Permutation::identity(g.num_vertices()), d, rng);
  return d == 0 ? g : apply_to_graph(walk, g);
}

Permutation sample_local(const Permutation& g, std::size_t d, Rng& rng) {
  Permutation out = g;
  const auto n = static_cast<int>(g.size());
  for (std::size_t k = 0; k < d; ++k) {
    const auto [i, j] = draw_distinct_pair(n, rng);
    out = Permutation::transposition(g.size(), i, j) * out;
  }
  return out;
}

}  // namespace tnps
