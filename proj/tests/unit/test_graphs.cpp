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

#include <sstream>

#include "oracles.hpp"
#include "tnps/automorphism.hpp"
#include "tnps/error.hpp"
#include "tnps/graph.hpp"
#include "tnps/permutation.hpp"
#include "tnps/templates.hpp"

namespace tnps {
namespace {

const std::filesystem::path kData = TNPS_TEST_DATA_DIR;

TEST(Permutation, Basics) {
  const Permutation p({1, 2, 0});
  EXPECT_EQ(p * p.inverse(), Permutation::identity(3));
  EXPECT_EQ((p * Permutation::transposition(3, 0, 1))(0), 2);
  EXPECT_EQ(p.one_based(), (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(Permutation::from_one_based(std::vector<int>{2, 3, 1}), p);
  EXPECT_THROW(Permutation({0, 0, 1}), InvalidArgument);
  EXPECT_THROW(p * Permutation::identity(2), InvalidArgument);
}

TEST(WordMetric, Examples) {
  const auto id = Permutation::identity(4);
  EXPECT_EQ(word_metric(id, id), 0);
  EXPECT_EQ(word_metric(id, Permutation::transposition(4, 1, 2)), 1);
  EXPECT_EQ(word_metric(id, Permutation({3, 2, 1, 0})), 6);
  EXPECT_EQ(oracle::bfs_word_metric(id, Permutation({3, 2, 1, 0})), 6);
  EXPECT_THROW(word_metric(id, Permutation::identity(3)), InvalidArgument);
}

TEST(WordMetric, MatchesBreadthFirstSearchOnS4) {
  const auto perms = oracle::all_permutations(4);
  for (const auto& a : perms)
    for (const auto& b : perms) ASSERT_EQ(word_metric(a, b), oracle::bfs_word_metric(a, b));
}

TEST(WordMetric, MetricAxiomsAndLeftInvariance) {
  const auto perms = oracle::all_permutations(4);
  for (const auto& a : perms)
    for (const auto& b : perms) {
      EXPECT_EQ(word_metric(a, b), word_metric(b, a));
      EXPECT_EQ(word_metric(a, b) == 0, a == b);
      const Permutation& q = perms[static_cast<std::size_t>(word_metric(a, b)) % perms.size()];
      EXPECT_EQ(word_metric(q * a, q * b), word_metric(a, b));
      for (std::size_t k = 0; k < perms.size(); k += 5)
        EXPECT_LE(word_metric(a, b), word_metric(a, perms[k]) + word_metric(perms[k], b));
    }
}

TEST(TemplateGraph, ValidatesSimpleConnected) {
  EXPECT_THROW(TemplateGraph(3, {{0, 0}, {0, 1}, {1, 2}}), InvalidArgument);
  EXPECT_THROW(TemplateGraph(3, {{0, 1}, {0, 1}, {1, 2}}), InvalidArgument);
  EXPECT_THROW(TemplateGraph(4, {{0, 1}, {2, 3}}), InvalidArgument);
  EXPECT_THROW(TemplateGraph(3, {{0, 3}}), InvalidArgument);
  const TemplateGraph g = templates::star(5);
  EXPECT_EQ(g.min_degree(), 1u);
  EXPECT_EQ(g.max_degree(), 4u);
}

TEST(ApplyToGraph, Examples) {
  const TemplateGraph p3 = templates::path(3);
  EXPECT_EQ(apply_to_graph(Permutation::identity(3), p3), p3);
  // 1-2-3 under the swap of 1 and 3 becomes 3-2-1: the same edge set.
  EXPECT_EQ(apply_to_graph(Permutation::transposition(3, 0, 2), p3), p3);
  const TemplateGraph moved = apply_to_graph(Permutation::transposition(3, 0, 1), p3);
  EXPECT_EQ(oracle::edge_set(moved), (oracle::EdgeSet{{0, 1}, {0, 2}}));
  EXPECT_THROW(apply_to_graph(Permutation::identity(4), p3), InvalidArgument);
}

TEST(Templates, Shapes) {
  EXPECT_EQ(templates::cycle(6).num_edges(), 6u);
  EXPECT_EQ(templates::lattice(2, 3).num_edges(), 7u);
  EXPECT_EQ(templates::binary_tree(7).num_edges(), 6u);
  const TemplateGraph ht = templates::hierarchical_tucker(6);
  EXPECT_EQ(ht.num_external(), 6u);
  EXPECT_EQ(ht.num_vertices(), 11u);
  const TemplateGraph mera = templates::mera(8);
  EXPECT_EQ(mera.num_external(), 8u);
  for (int v : mera.external_vertices()) EXPECT_LE(mera.degree(v), 2u);
  EXPECT_EQ(templates::from_spec("peps:6"), templates::lattice(2, 3));
  EXPECT_EQ(templates::from_spec("lattice:2x3"), templates::lattice(2, 3));
  EXPECT_EQ(templates::from_spec("tr", 5), templates::cycle(5));
  EXPECT_EQ(templates::spec_of(templates::cycle(4)), "cycle:4");
  EXPECT_THROW(templates::from_spec("cycle"), InvalidArgument);
  EXPECT_THROW(templates::from_spec("nonsense:3"), InvalidArgument);
}

TEST(GraphIo, ReadsFixtureWithCommentsAndBlankLines) {
  EXPECT_EQ(load_graph(kData / "cycle4.graph"), templates::cycle(4));
  const TemplateGraph t = load_graph(kData / "tree5_internal.graph");
  EXPECT_EQ(t.num_external(), 3u);
  EXPECT_FALSE(t.is_external(0));
}

TEST(GraphIo, RejectsMultigraph) {
  EXPECT_THROW(load_graph(kData / "multigraph.graph"), InvalidArgument);
}

TEST(GraphIo, RoundTrip) {
  for (const auto& g : {templates::mera(8), templates::lattice(2, 3)}) {
    std::stringstream ss;
    write_graph(ss, g);
    EXPECT_EQ(read_graph(ss), g);
  }
}

TEST(Automorphisms, TableClosedForms) {
  EXPECT_EQ(enumerate_automorphisms(templates::cycle(4)).size(), 8u);
  for (std::size_t n = 2; n <= 9; ++n)
    EXPECT_EQ(enumerate_automorphisms(templates::path(n)).size(), 2u);
  EXPECT_EQ(enumerate_automorphisms(templates::complete(3)).size(), 6u);
}

TEST(Automorphisms, MatchBruteForce) {
  for (const auto& g : {templates::cycle(6), templates::star(6), templates::binary_tree(7),
                        templates::lattice(2, 3), load_graph(kData / "tree5_internal.graph")}) {
    const AutGroup aut = enumerate_automorphisms(g);
    EXPECT_EQ(aut.elements, oracle::brute_automorphisms(g)) << templates::spec_of(g);
    EXPECT_TRUE(aut.elements.front().is_identity());
    for (const auto& a : aut.elements)
      for (const auto& b : aut.elements)
        EXPECT_EQ(apply_to_graph(a * b, g), g);
  }
}

TEST(Automorphisms, RespectExternalFlags) {
  // MERA keeps its inner vertices apart from the open ones.
  const TemplateGraph m = templates::mera(8);
  for (const auto& a : enumerate_automorphisms(m, 16).elements)
    for (int v = 0; v < static_cast<int>(m.num_vertices()); ++v)
      EXPECT_EQ(m.is_external(v), m.is_external(a(v)));
}

TEST(Automorphisms, LimitIsEnforced) {
  EXPECT_THROW(enumerate_automorphisms(templates::cycle(11)), LimitExceeded);
}

TEST(Isomorphism, FindsRelabelling) {
  const TemplateGraph g0 = templates::lattice(2, 3);
  const Permutation g({4, 2, 0, 5, 1, 3});
  const TemplateGraph g1 = apply_to_graph(g, g0);
  const auto found = find_isomorphism(g0, g1);
  ASSERT_TRUE(found.has_value());
  EXPECT_EQ(apply_to_graph(*found, g0), g1);
  EXPECT_FALSE(find_isomorphism(templates::path(6), g0).has_value());
}

}  // namespace
}  // namespace tnps
