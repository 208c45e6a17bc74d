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

#include "tnps/model.hpp"

#include <algorithm>
#include <numeric>

#include "tnps/error.hpp"

namespace tnps {

void TnModel::validate() const {
  structure.validate();
  if (dims.size() != structure.order())
    throw InvalidArgument("model dims do not match structure order");
  if (cores.size() != structure.graph->num_vertices())
    throw InvalidArgument("model has " + std::to_string(cores.size()) + " cores for " +
                          std::to_string(structure.graph->num_vertices()) + " vertices");
  for (std::size_t v = 0; v < cores.size(); ++v) {
    const Shape expected = core_shape(structure, dims, static_cast<int>(v));
    if (cores[v].shape() != expected)
      throw InvalidArgument("core " + std::to_string(v) + " has shape " +
                            shape_to_string(cores[v].shape()) + ", expected " +
                            shape_to_string(expected));
  }
}

TnModel random_model(const TnStructure& s, const Shape& dims, double std_dev, Rng& rng) {
  s.validate();
  TnModel m{s, dims, {}};
  std::normal_distribution<double> normal(0.0, std_dev);
  for (std::size_t v = 0; v < s.graph->num_vertices(); ++v) {
    DenseTensor core(core_shape(s, dims, static_cast<int>(v)));
    for (double& x : core.values()) x = normal(rng);
    m.cores.push_back(std::move(core));
  }
  return m;
}

DenseTensor contract_network(const TnModel& m) {
  m.validate();
  NetworkPlan plan(m.structure, m.dims);
  std::vector<std::span<const double>> cores;
  for (const auto& c : m.cores) cores.push_back(c.values());
  return plan.to_mode_order(plan.forward(cores));
}

std::size_t param_count(const TnStructure& s, std::span<const std::size_t> dims) {
  s.validate();
  if (dims.size() != s.order()) throw InvalidArgument("param_count: dims length mismatch");
  std::size_t total = 0;
  for (std::size_t v = 0; v < s.graph->num_vertices(); ++v)
    total += shape_size(core_shape(s, dims, static_cast<int>(v)));
  return total;
}

double phi(const TnStructure& s, std::span<const std::size_t> dims) {
  return static_cast<double>(param_count(s, dims)) / static_cast<double>(shape_size(dims));
}

double efficiency(const TnStructure& found, const TnStructure& truth,
                  std::span<const std::size_t> dims) {
  return static_cast<double>(param_count(truth, dims)) /
         static_cast<double>(param_count(found, dims));
}

TnModel GroundTruth::model() const {
  return TnModel{structure, tensor.shape(), cores};
}

GroundTruth generate_synthetic(GraphPtr graph, std::size_t dim,
                               std::span<const int> rank_choices, Rng& rng,
                               double core_std) {
  if (dim < 1) throw InvalidArgument("generate_synthetic: dim must be >= 1");
  if (rank_choices.empty()) throw InvalidArgument("generate_synthetic: no rank choices");
  for (int r : rank_choices)
    if (r < 1) throw InvalidArgument("generate_synthetic: ranks must be >= 1");

  const Shape dims(graph->num_external(), dim);
  std::uniform_int_distribution<std::size_t> pick(0, rank_choices.size() - 1);
  std::vector<int> ranks(graph->num_edges());
  for (int& r : ranks) r = rank_choices[pick(rng)];

  std::vector<int> hidden(graph->num_external());
  std::iota(hidden.begin(), hidden.end(), 0);
  std::shuffle(hidden.begin(), hidden.end(), rng);
  TnStructure s{graph, Permutation(std::move(hidden)), std::move(ranks)};

  // A numerically zero tensor has no defined relative error; redraw cores.
  for (;;) {
    TnModel m = random_model(s, dims, core_std, rng);
    DenseTensor x = contract_network(m);
    if (frobenius_norm(x) > 1e-300) {
      GroundTruth gt{std::move(x), s, std::move(m.cores), param_count(s, dims)};
      return gt;
    }
  }
}

}  // namespace tnps
