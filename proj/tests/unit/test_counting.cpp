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

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "tnps/counting.hpp"
#include "tnps/error.hpp"
#include "tnps/templates.hpp"

namespace tnps {
namespace {

TEST(CountSpace, CycleFourRankTwo) {
  const SpaceCount c = count_space(templates::cycle(4), 2);
  EXPECT_EQ(c.class_size, 3);
  EXPECT_EQ(c.aut_size, 8);
  EXPECT_EQ(c.exact, 48);
}

TEST(CountSpace, PathRankOneLeavesPermutations) {
  EXPECT_EQ(count_space(templates::path(4), 1).exact, 12);
  EXPECT_EQ(count_space(templates::path(5), 1).exact, 60);
}

TEST(CountSpace, CycleSixSandwich) {
  const SpaceCount c = count_space(templates::cycle(6), 4);
  ASSERT_TRUE(c.lower && c.upper);
  EXPECT_EQ(c.exact, 60 * 4096);
  EXPECT_LE(*c.lower, static_cast<double>(c.exact));
  EXPECT_GE(*c.upper, static_cast<double>(c.exact));
  // Closed forms evaluated directly: d1 = d2 = 3, gamma(3) = log 3 - 2/3.
  const double g = std::log(3.0) + 1.0 / 3 - 1;
  EXPECT_NEAR(c.log_bounds->log_upper, 6.0 * std::log(4.0) + std::log(720.0), 1e-12);
  EXPECT_NEAR(c.log_bounds->log_lower, 6.0 * std::log(4.0) + 6 * g - 0.5 * std::log(3.0) - 1.0 / 24,
              1e-12);
}

TEST(CountSpace, LagrangeIdentityAgainstBruteForceClasses) {
  for (std::size_t n = 4; n <= 7; ++n)
    for (const auto& g : {templates::path(n), templates::cycle(n), templates::star(n),
                          templates::binary_tree(n)}) {
      const SpaceCount c = count_space(g, 3);
      EXPECT_EQ(c.class_size, oracle::brute_class(g).size()) << templates::spec_of(g);
      EXPECT_EQ(c.class_size * c.aut_size, factorial(n));
      EXPECT_EQ(c.exact, c.class_size * boost::multiprecision::pow(BigInt(3), g.num_edges()));
    }
}

TEST(CountSpace, CycleClassSizeClosedForm) {
  for (std::size_t n = 3; n <= 9; ++n)
    EXPECT_EQ(count_space(templates::cycle(n), 1).class_size, factorial(n - 1) / 2);
}

TEST(EnumerateClass, MatchesBruteForce) {
  const TemplateGraph g = templates::lattice(2, 3);
  const auto listed = enumerate_class(g);
  std::set<oracle::EdgeSet> mine;
  for (const auto& x : listed) mine.insert(oracle::edge_set(x));
  EXPECT_EQ(mine.size(), listed.size());
  EXPECT_EQ(mine, oracle::brute_class(g));
  EXPECT_THROW(enumerate_class(templates::cycle(10)), LimitExceeded);
}

TEST(Gamma, PositiveAndIncreasing) {
  const double grid[] = {1.1, 1.5, 2, 4, 8};
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_GT(gamma_fn(grid[i]), 0);
    if (i) EXPECT_GT(gamma_fn(grid[i]), gamma_fn(grid[i - 1]));
  }
  EXPECT_DOUBLE_EQ(gamma_fn(1.0), 0.0);
}

TEST(LogBounds, TightenAsDegreeRatioGrows) {
  const auto wide = log_space_bounds(12, 1.5, 1.5, 4);
  const auto tight = log_space_bounds(12, 4, 4, 4);
  EXPECT_LT(tight.log_upper - tight.log_lower, wide.log_upper - wide.log_lower);
  EXPECT_THROW(log_space_bounds(12, 2, 1, 4), InvalidArgument);
}

TEST(BigArithmetic, FactorialAndLogs) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
  EXPECT_NEAR(log_big(factorial(30)), log_factorial(30), 1e-9);
  EXPECT_NEAR(log_factorial(100), std::lgamma(101.0), 1e-9);
}

}  // namespace
}  // namespace tnps
