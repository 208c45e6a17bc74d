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

#include <benchmark/benchmark.h>

#include <memory>
#include <vector>

#include "tnps/contraction.hpp"
#include "tnps/fit.hpp"
#include "tnps/model.hpp"
#include "tnps/network.hpp"
#include "tnps/random.hpp"
#include "tnps/templates.hpp"

namespace {

using namespace tnps;

DenseTensor normal_tensor(const Shape& shape, Rng& rng) {
  DenseTensor t(shape);
  std::normal_distribution<double> n(0.0, 1.0);
  for (double& x : t.values()) x = n(rng);
  return t;
}

// Matrix-like contraction (d x r) . (r x d) with d = r = range(0).
void BM_ContractPair(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const DenseTensor a = normal_tensor({d, d}, rng), b = normal_tensor({d, d}, rng);
  const Labels la{{0, d}, {1, d}}, lb{{1, d}, {2, d}};
  for (auto _ : state) benchmark::DoNotOptimize(contract_pair(a, la, b, lb));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ContractPair)->RangeMultiplier(2)->Range(8, 128)->Complexity();

// One forward pass plus all core gradients of a TR network, the inner loop
// of every fit step. Order range(0), dims 3, ranks 4.
void BM_NetworkForwardBackward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto g = std::make_shared<const TemplateGraph>(templates::cycle(n));
  const TnStructure s = make_structure(g, std::vector<int>(g->num_edges(), 4));
  const Shape dims(n, 3);
  NetworkPlan plan(s, dims);
  Rng rng(2);
  std::vector<std::vector<double>> cores, grads;
  std::vector<std::span<const double>> in;
  std::vector<std::span<double>> out;
  for (const auto& shape : plan.core_shapes()) {
    const DenseTensor t = normal_tensor(shape, rng);
    cores.emplace_back(t.values().begin(), t.values().end());
    grads.emplace_back(cores.back().size());
  }
  for (std::size_t v = 0; v < cores.size(); ++v) {
    in.emplace_back(cores[v]);
    out.emplace_back(grads[v]);
  }
  const std::vector<double> residual(shape_size(plan.slot_shape()), 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(plan.forward(in).data());
    plan.gradients(residual, out);
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_NetworkForwardBackward)->DenseRange(4, 8, 2);

// A short full fit of an order-4 TR truth.
void BM_Fit(benchmark::State& state) {
  auto g = std::make_shared<const TemplateGraph>(templates::cycle(4));
  const std::vector<int> choices{2, 3};
  Rng rng(3);
  const GroundTruth gt = generate_synthetic(g, 3, choices, rng);
  FitConfig cfg;
  cfg.max_steps = 1000;
  cfg.restarts = 1;
  cfg.tolerance = 0;
  for (auto _ : state) benchmark::DoNotOptimize(fit(gt.tensor, gt.structure, cfg).rse);
  state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_Fit)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
