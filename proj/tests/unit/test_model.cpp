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

#include <filesystem>
#include <fstream>
#include <iterator>

#include "oracles.hpp"
#include "tnps/automorphism.hpp"
#include "tnps/error.hpp"
#include "tnps/model.hpp"
#include "tnps/model_io.hpp"
#include "tnps/network.hpp"
#include "tnps/templates.hpp"

namespace tnps {
namespace {

const std::filesystem::path kData = TNPS_TEST_DATA_DIR;

GraphPtr share(TemplateGraph g) { return std::make_shared<const TemplateGraph>(std::move(g)); }

double rel_err(const DenseTensor& a, const DenseTensor& b) {
  return frobenius_norm(a - b) / frobenius_norm(b);
}

TEST(ContractNetwork, SingleEdgeIsMatrixProduct) {
  const auto g = share(templates::path(2));
  TnModel m{make_structure(g, {2}), {3, 4}, {}};
  Rng rng(1);
  m.cores = {oracle::random_tensor({3, 2}, rng), oracle::random_tensor({4, 2}, rng)};
  const DenseTensor z = contract_network(m);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      double s = 0;
      for (std::size_t r = 0; r < 2; ++r) s += m.cores[0].at({i, r}) * m.cores[1].at({j, r});
      EXPECT_NEAR(z.at({i, j}), s, 1e-14);
    }
}

TEST(ContractNetwork, RankOneIsOuterProduct) {
  const auto g = share(templates::star(3));
  Rng rng(2);
  const TnModel m = random_model(make_structure(g, {1, 1}), {2, 3, 2}, 1.0, rng);
  const DenseTensor z = contract_network(m);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        EXPECT_NEAR(z.at({i, j, k}), m.cores[0][i] * m.cores[1][j] * m.cores[2][k], 1e-14);
}

TEST(ContractNetwork, TensorRingMatchesTraceOracle) {
  const auto g = share(templates::cycle(4));
  Rng rng(3);
  // Identity mapping, ranks on edges (1,2) (1,4) (2,3) (3,4).
  const TnModel m = random_model(make_structure(g, {2, 3, 4, 2}), {3, 2, 3, 2}, 1.0, rng);
  // Rearrange every core into rank_in x dim x rank_out around the ring 1-2-3-4-1.
  auto ring_core = [&](int v, bool swap_bonds) {
    const DenseTensor& c = m.cores[static_cast<std::size_t>(v)];
    const Permutation p = swap_bonds ? Permutation({1, 2, 0}) : Permutation({1, 0, 2});
    // Core layout is (open, first bond, second bond) with bonds in edge order.
    return permute_modes(c, p);
  };
  // Vertex 0 bonds: (0,1) then (0,3); the ring enters from (0,3).
  // Vertex 1 bonds: (0,1) then (1,2). Vertex 2: (1,2) then (2,3). Vertex 3: (0,3) then (2,3).
  const std::vector<DenseTensor> cores{ring_core(0, true), ring_core(1, false),
                                       ring_core(2, false), ring_core(3, true)};
  EXPECT_LT(rel_err(contract_network(m), oracle::tr_trace(cores)), 1e-13);
}

TEST(ContractNetwork, MatchesBruteForceAcrossTemplates) {
  Rng rng(4);
  std::vector<GraphPtr> graphs{share(templates::cycle(5)), share(templates::binary_tree(5)),
                               share(templates::lattice(2, 3)),
                               share(templates::hierarchical_tucker(4))};
  for (const auto& g : graphs) {
    const TnStructure s = random_structure(g, 2, rng);
    const Shape dims(g->num_external(), 2);
    const TnModel m = random_model(s, dims, 1.0, rng);
    EXPECT_LT(rel_err(contract_network(m), oracle::brute_network(m)), 1e-12)
        << templates::spec_of(*g);
  }
}

TEST(ContractNetwork, ShapeErrors) {
  const auto g = share(templates::path(2));
  TnModel m{make_structure(g, {2}), {3, 4}, {DenseTensor(Shape{3, 2}), DenseTensor(Shape{4, 3})}};
  EXPECT_THROW(contract_network(m), InvalidArgument);
}

TEST(ParamCount, Examples) {
  const auto g = share(templates::cycle(4));
  const TnStructure s = make_structure(g, {2, 2, 2, 2});
  const Shape dims{3, 3, 3, 3};
  EXPECT_EQ(param_count(s, dims), 48u);
  EXPECT_NEAR(phi(s, dims), 48.0 / 81.0, 1e-15);
  EXPECT_EQ(param_count(make_structure(g, {1, 1, 1, 1}), dims), 12u);
  EXPECT_DOUBLE_EQ(phi(make_structure(g, {1, 1, 1, 1}), dims), 12.0 / 81.0);
}

TEST(ParamCount, InternalVerticesCountRanksOnly) {
  const auto g = share(templates::hierarchical_tucker(4));
  // Leaves 0..3 hang off internal nodes; every rank 2.
  const TnStructure s = make_structure(g, std::vector<int>(g->num_edges(), 2));
  // Four leaves 3*2 plus root 2*2 plus two inner 2*2*2.
  EXPECT_EQ(param_count(s, Shape{3, 3, 3, 3}), 4u * 6 + 4 + 2 * 8);
}

TEST(ParamCount, InvariantUnderAutomorphisms) {
  const auto g = share(templates::lattice(2, 3));
  Rng rng(5);
  const TnStructure s = random_structure(g, 4, rng);
  const Shape dims{2, 3, 4, 2, 3, 4};
  for (const auto& a : enumerate_automorphisms(*g).elements) {
    const TnStructure t = transport(s, a);
    EXPECT_EQ(param_count(t, dims), param_count(s, dims));
    // Same network, so the same tensor from transported cores.
    EXPECT_EQ(canonicalize(t, enumerate_automorphisms(*g)), canonicalize(s, enumerate_automorphisms(*g)));
  }
}

TEST(Phi, StrictlyIncreasingInEachRank) {
  const auto g = share(templates::cycle(5));
  const TnStructure s = make_structure(g, {2, 3, 1, 2, 2});
  const Shape dims(5, 3);
  for (std::size_t e = 0; e < 5; ++e) {
    TnStructure t = s;
    ++t.ranks[e];
    EXPECT_GT(phi(t, dims), phi(s, dims));
  }
}

TEST(Efficiency, Examples) {
  const auto g = share(templates::cycle(4));
  const Shape dims(4, 3);
  const TnStructure truth = make_structure(g, {2, 2, 2, 2});
  EXPECT_EQ(efficiency(truth, truth, dims), 1.0);
  EXPECT_GT(efficiency(make_structure(g, {2, 1, 2, 2}), truth, dims), 1.0);
  EXPECT_LT(efficiency(make_structure(g, {4, 4, 4, 4}), truth, dims), 1.0);
}

TEST(GenerateSynthetic, RoundTripAndShape) {
  Rng rng(6);
  const auto g = share(templates::cycle(4));
  const std::vector<int> choices{1, 2, 3, 4};
  const GroundTruth gt = generate_synthetic(g, 3, choices, rng);
  EXPECT_EQ(gt.tensor.shape(), Shape(4, 3));
  EXPECT_EQ(gt.param_count, param_count(gt.structure, gt.tensor.shape()));
  EXPECT_LT(rel_err(contract_network(gt.model()), gt.tensor), 1e-12);
  for (int r : gt.structure.ranks) EXPECT_TRUE(r >= 1 && r <= 4);
}

TEST(GenerateSynthetic, RankOneChoicesGiveOuterProduct) {
  Rng rng(7);
  const std::vector<int> one{1};
  const GroundTruth gt = generate_synthetic(share(templates::cycle(3)), 2, one, rng);
  // A rank-1 order-3 tensor has every 2x4 unfolding of rank 1.
  const DenseTensor m = tensorize_reshape(gt.tensor, {2, 4});
  const double s1 = oracle::top_singular_value(m);
  EXPECT_NEAR(s1, frobenius_norm(gt.tensor), 1e-10 * s1);
}

TEST(GenerateSynthetic, SupportsOtherFormats) {
  const std::vector<int> choices{1, 2};
  for (const auto& spec : {"tree:7", "peps:6", "ht:6", "mera:8"}) {
    Rng rng(8);
    const auto g = share(templates::from_spec(spec));
    const GroundTruth gt = generate_synthetic(g, 2, choices, rng);
    EXPECT_EQ(gt.tensor.order(), g->num_external()) << spec;
    EXPECT_LT(rel_err(contract_network(gt.model()), gt.tensor), 1e-12) << spec;
  }
}

TEST(GenerateSynthetic, SameSeedSameOutput) {
  const std::vector<int> choices{1, 2, 3};
  Rng a(9), b(9);
  const auto g = share(templates::cycle(4));
  EXPECT_EQ(generate_synthetic(g, 3, choices, a).tensor, generate_synthetic(g, 3, choices, b).tensor);
}

TEST(RankOneEdge, MatchesNetworkWithEdgeDeleted) {
  // Cycle edges in order (0,1) (0,3) (1,2) (2,3); give (0,3) rank 1.
  Rng rng(10);
  const auto ring = share(templates::cycle(4));
  const TnModel m = random_model(make_structure(ring, {3, 1, 2, 3}), {2, 3, 2, 3}, 1.0, rng);
  const auto chain = share(templates::path(4));
  TnModel cut{make_structure(chain, {3, 2, 3}), m.dims, {}};
  for (const auto& c : m.cores) {
    Shape squeezed;
    for (std::size_t d : c.shape()) if (d != 1) squeezed.push_back(d);
    cut.cores.push_back(tensorize_reshape(c, squeezed));
  }
  // The open mode keeps its place, so a dim-1 filter is safe here only
  // because every open dim exceeds 1.
  EXPECT_LT(rel_err(contract_network(cut), contract_network(m)), 1e-12);
}

TEST(StructureJson, GoldenFile) {
  const TnStructure s = load_structure(kData / "tr4_structure.json");
  EXPECT_EQ(s.perm, Permutation::from_one_based(std::vector<int>{2, 1, 4, 3}));
  EXPECT_EQ(s.ranks, (std::vector<int>{3, 1, 2, 4}));
  std::ifstream is(kData / "tr4_structure.json");
  const std::string golden{std::istreambuf_iterator<char>(is), {}};
  EXPECT_EQ(structure_to_json(s), golden);
}

TEST(StructureJson, Errors) {
  EXPECT_THROW(structure_from_json(R"({"template":"cycle:3","permutation":[1,2,3],)"
                                   R"("ranks":[[1,3,2]]})"),
               InvalidArgument);
  EXPECT_THROW(structure_from_json(R"({"template":"cycle:3","permutation":[1,2,3],)"
                                   R"("ranks":[[1,2,2],[2,3,2],[1,3,2],[1,2,5]]})"),
               InvalidArgument);
  EXPECT_THROW(structure_from_json(R"({"template":"cycle:3","permutation":[1,2,2],)"
                                   R"("ranks":[[1,2,2],[2,3,2],[1,3,2]]})"),
               InvalidArgument);
  EXPECT_THROW(structure_from_json("{"), IoError);
}

TEST(ModelIo, RoundTrip) {
  Rng rng(11);
  const auto g = share(templates::mera(8));
  const TnModel m = random_model(random_structure(g, 2, rng), Shape(8, 2), 1.0, rng);
  const auto dir = std::filesystem::temp_directory_path() / "tnps_model_io";
  save_model(dir, m);
  const TnModel back = load_model(dir);
  EXPECT_EQ(back.structure, m.structure);
  EXPECT_EQ(back.cores, m.cores);
  EXPECT_EQ(back.dims, m.dims);
  std::filesystem::remove_all(dir);
}

TEST(NetworkPlan, EnvironmentMatchesReversePass) {
  Rng rng(12);
  const auto g = share(templates::lattice(2, 3));
  const TnStructure s = random_structure(g, 3, rng);
  const Shape dims(6, 2);
  const TnModel m = random_model(s, dims, 1.0, rng);
  NetworkPlan plan(s, dims);
  std::vector<std::span<const double>> cores;
  for (const auto& c : m.cores) cores.push_back(c.values());
  const auto z = plan.forward(cores);
  const DenseTensor residual = oracle::random_tensor(Shape(6, 2), rng);
  std::vector<DenseTensor> grads;
  std::vector<std::span<double>> gspans;
  for (const auto& c : m.cores) grads.emplace_back(c.shape());
  for (auto& x : grads) gspans.push_back(x.values());
  plan.gradients(residual.values(), gspans);
  for (int v = 0; v < 6; ++v) {
    DenseTensor env(m.cores[static_cast<std::size_t>(v)].shape());
    plan.environment(v, residual.values(), cores, env.values());
    EXPECT_LT(rel_err(grads[static_cast<std::size_t>(v)], env), 1e-12);
  }
  EXPECT_EQ(z.size(), 64u);
}

}  // namespace
}  // namespace tnps
