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

#include <map>

#include "oracles.hpp"
#include "tnps/automorphism.hpp"
#include "tnps/error.hpp"
#include "tnps/neighborhood.hpp"
#include "tnps/templates.hpp"

namespace tnps {
namespace {

std::vector<TemplateGraph> small_templates() {
  return {templates::path(5), templates::cycle(5), templates::star(5), templates::cycle(6),
          templates::binary_tree(6), templates::lattice(2, 3)};
}

TemplateGraph random_member(const TemplateGraph& g0, Rng& rng) {
  std::vector<int> p(g0.num_vertices());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return apply_to_graph(Permutation(p), g0);
}

TEST(SemiMetric, MatchesCosetBruteForce) {
  Rng rng(21);
  for (const auto& g0 : small_templates())
    for (int k = 0; k < 15; ++k) {
      const TemplateGraph a = random_member(g0, rng), b = random_member(g0, rng);
      EXPECT_EQ(semi_metric(a, b, g0), oracle::brute_semi_metric(a, b, g0));
    }
}

TEST(SemiMetric, SeparationAndSymmetry) {
  Rng rng(22);
  for (const auto& g0 : small_templates())
    for (int k = 0; k < 40; ++k) {
      const TemplateGraph a = random_member(g0, rng), b = random_member(g0, rng);
      EXPECT_EQ(semi_metric(a, a, g0), 0);
      EXPECT_EQ(semi_metric(a, b, g0), semi_metric(b, a, g0));
      EXPECT_EQ(semi_metric(a, b, g0) == 0, a == b);
    }
}

TEST(SemiMetric, RepresentativeIndependent) {
  const TemplateGraph g0 = templates::cycle(5);
  const AutGroup aut = enumerate_automorphisms(g0);
  const Permutation g1({2, 0, 4, 1, 3}), g2({1, 3, 0, 2, 4});
  const auto base = semi_metric(g1, g2, aut);
  for (const auto& a : aut.elements)
    for (const auto& b : aut.elements) EXPECT_EQ(semi_metric(g1 * a, g2 * b, aut), base);
  EXPECT_EQ(base, semi_metric(apply_to_graph(g1, g0), apply_to_graph(g2, g0), g0));
}

TEST(SemiMetric, RejectsNonMembers) {
  EXPECT_THROW(semi_metric(templates::path(5), templates::cycle(5), templates::cycle(5)),
               InvalidArgument);
}

TEST(Ball, RadiusZeroIsSingleton) {
  const TemplateGraph g0 = templates::cycle(5);
  const auto ball = enumerate_ball(g0, g0, 0);
  ASSERT_EQ(ball.size(), 1u);
  EXPECT_EQ(ball.front(), g0);
}

TEST(Ball, EqualsSemiMetricFilter) {
  Rng rng(23);
  for (const auto& g0 : small_templates())
    for (std::size_t d = 0; d <= 2; ++d) {
      const TemplateGraph g = random_member(g0, rng);
      std::set<oracle::EdgeSet> got;
      for (const auto& x : enumerate_ball(g, g0, d)) got.insert(oracle::edge_set(x));
      EXPECT_EQ(got, oracle::ball_by_filter(g, g0, static_cast<std::int64_t>(d)))
          << templates::spec_of(g0) << " d=" << d;
    }
}

TEST(Ball, CycleFourRadiusOneCoversWholeClass) {
  const TemplateGraph g0 = templates::cycle(4);
  EXPECT_EQ(enumerate_ball(g0, g0, 1).size(), oracle::ball_by_filter(g0, g0, 1).size());
  EXPECT_EQ(oracle::ball_by_filter(g0, g0, 1).size(), 3u);
}

TEST(Ball, LimitsAreEnforced) {
  const TemplateGraph g0 = templates::cycle(9);
  EXPECT_THROW(enumerate_ball(g0, g0, 1), LimitExceeded);
  EXPECT_THROW(enumerate_ball(templates::cycle(5), templates::cycle(5), 3), LimitExceeded);
}

TEST(SampleLocal, ZeroStepsIsIdentity) {
  Rng rng(1);
  const TemplateGraph g = templates::lattice(2, 3);
  EXPECT_EQ(sample_local(g, 0, rng), g);
  EXPECT_EQ(sample_local(Permutation({2, 0, 1}), 0, rng), Permutation({2, 0, 1}));
}

TEST(SampleLocal, StaysInClass) {
  Rng rng(2);
  const TemplateGraph g0 = templates::binary_tree(6);
  const auto cls = oracle::brute_class(g0);
  TemplateGraph g = g0;
  for (int k = 0; k < 200; ++k) {
    g = sample_local(g, 1 + k % 3, rng);
    EXPECT_TRUE(cls.count(oracle::edge_set(g)));
  }
}

TEST(SampleLocal, SingleSwapCoversDistanceOneShell) {
  Rng rng(3);
  const TemplateGraph g0 = templates::cycle(5);
  std::map<oracle::EdgeSet, int> seen;
  for (int k = 0; k < 10000; ++k) ++seen[oracle::edge_set(sample_local(g0, 1, rng))];
  const auto ball = oracle::ball_by_filter(g0, g0, 1);
  for (const auto& e : ball)
    if (e != oracle::edge_set(g0)) EXPECT_GT(seen[e], 0);
}

TEST(SampleLocal, PermutationWalkMatchesGraphWalk) {
  // Walking a representative and relabelling the template agree.
  const TemplateGraph g0 = templates::cycle(6);
  Rng a(7), b(7);
  Permutation p = Permutation::identity(6);
  TemplateGraph g = g0;
  for (int k = 0; k < 50; ++k) {
    p = sample_local(p, 1, a);
    g = sample_local(g, 1, b);
    EXPECT_EQ(apply_to_graph(p, g0), g);
  }
}

}  // namespace
}  // namespace tnps
