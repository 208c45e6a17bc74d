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

#include "tnps/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>

#include "tnps/error.hpp"

namespace tnps {

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= k;
  return f;
}

double log_factorial(std::size_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double log_big(const BigInt& x) {
  if (x <= 0) throw InvalidArgument("log_big: non-positive argument");
  // Split off powers of two so the remainder converts to double exactly enough.
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 1000) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 64;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

double gamma_fn(double d) { return std::log(d) + 1.0 / d - 1.0; }

LogBounds log_space_bounds(double n, double d1, double d2, double rank_max) {
  if (!(d2 > 1.0) || d1 < d2)
    throw InvalidArgument("log_space_bounds: requires d1 >= d2 > 1");
  const double log_r = std::log(rank_max);
  LogBounds b;
  b.log_upper = n * n / (2.0 * d2) * log_r + std::lgamma(n + 1.0);
  b.log_lower = n * n / (2.0 * d1) * log_r + gamma_fn(d2) * n - 0.5 * std::log(d2) - 1.0 / 24.0;
  return b;
}

SpaceCount count_space(const TemplateGraph& graph, std::size_t rank_max,
                       std::size_t aut_limit) {
  if (rank_max < 1) throw InvalidArgument("count_space: rank_max must be >= 1");
  const std::size_t n = graph.num_vertices();
  const AutGroup aut = enumerate_automorphisms(graph, aut_limit);

  SpaceCount c;
  c.aut_size = aut.size();
  c.class_size = factorial(n) / c.aut_size;
  c.exact = c.class_size * boost::multiprecision::pow(BigInt(rank_max),
                                                      static_cast<unsigned>(graph.num_edges()));

  const double delta = static_cast<double>(graph.min_degree());
  const double big_delta = static_cast<double>(graph.max_degree());
  if (delta >= 1.0 && big_delta < static_cast<double>(n)) {
    const double nn = static_cast<double>(n);
    const LogBounds b = log_space_bounds(nn, nn / delta, nn / big_delta,
                                         static_cast<double>(rank_max));
    c.log_bounds = b;
    c.lower = std::exp(b.log_lower);
    c.upper = std::exp(b.log_upper);
  }
  return c;
}

std::vector<TemplateGraph> enumerate_class(const TemplateGraph& graph, std::size_t limit) {
  const std::size_t n = graph.num_vertices();
  if (n > limit)
    throw LimitExceeded("enumerate_class: " + std::to_string(n) + " vertices exceeds the limit of " +
                        std::to_string(limit));
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::set<std::pair<std::vector<Edge>, std::vector<bool>>> seen;
  std::vector<TemplateGraph> out;
  do {
    TemplateGraph g = apply_to_graph(Permutation(images), graph);
    if (seen.emplace(g.edges(), g.external_flags()).second) out.push_back(std::move(g));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace tnps
