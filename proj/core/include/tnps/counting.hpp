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

#ifndef TNPS_COUNTING_HPP_
#define TNPS_COUNTING_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <vector>

#include "tnps/automorphism.hpp"
#include "tnps/graph.hpp"

namespace tnps {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(std::size_t n);
double log_factorial(std::size_t n);
// Natural log of a positive big integer.
double log_big(const BigInt& x);

// gamma(d) = log d + 1/d - 1; positive and increasing for d > 1.
double gamma_fn(double d);

struct LogBounds {
  double log_lower = 0.0;
  double log_upper = 0.0;
};

// Log-domain sandwich for the size of the (permutation, rank) search space of
// an n-vertex template whose minimum and maximum degrees are n/d1 and n/d2:
//   upper = R^(n^2 / (2 d2)) * n!
//   lower = R^(n^2 / (2 d1)) * exp(gamma(d2) n - log(d2) / 2 - 1/24)
// Requires d1 >= d2 > 1.
LogBounds log_space_bounds(double n, double d1, double d2, double rank_max);

// Lagrange-style count of the search space of a template with ranks in [1, R].
struct SpaceCount {
  BigInt exact;       // class_size * R^|E|
  BigInt aut_size;    // |Aut(G0)|
  BigInt class_size;  // n! / |Aut(G0)|, the number of distinct relabelings
  std::optional<double> lower;
  std::optional<double> upper;
  std::optional<LogBounds> log_bounds;  // absent when d2 <= 1
};

SpaceCount count_space(const TemplateGraph& graph, std::size_t rank_max,
                       std::size_t aut_limit = kDefaultAutomorphismLimit);

// All distinct labelled graphs g . G0 for g in S_n, by brute force over n!
// permutations. Throws LimitExceeded for n > limit.
std::vector<TemplateGraph> enumerate_class(const TemplateGraph& graph, std::size_t limit = 9);

}  // namespace tnps

#endif  // TNPS_COUNTING_HPP_
