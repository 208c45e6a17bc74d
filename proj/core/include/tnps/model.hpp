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

#ifndef TNPS_MODEL_HPP_
#define TNPS_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tnps/network.hpp"
#include "tnps/random.hpp"
#include "tnps/structure.hpp"
#include "tnps/tensor.hpp"

namespace tnps {

// A structure together with one core per template vertex (layout as in
// core_shape) and the mode dimensions of the tensor it represents.
struct TnModel {
  TnStructure structure;
  Shape dims;
  std::vector<DenseTensor> cores;

  void validate() const;
};

// Cores with i.i.d. N(0, std_dev^2) entries.
TnModel random_model(const TnStructure& s, const Shape& dims, double std_dev, Rng& rng);

// Contracts every bond; output mode n is tensor mode n (shape == dims).
DenseTensor contract_network(const TnModel& m);

// Sum over vertices of (open dim) * product of incident ranks; internal
// vertices contribute only the rank product.
std::size_t param_count(const TnStructure& s, std::span<const std::size_t> dims);

// Compression ratio: param_count / number of tensor entries.
double phi(const TnStructure& s, std::span<const std::size_t> dims);

// Generating structure's parameter count over the found structure's.
double efficiency(const TnStructure& found, const TnStructure& truth,
                  std::span<const std::size_t> dims);

struct GroundTruth {
  DenseTensor tensor;
  TnStructure structure;
  std::vector<DenseTensor> cores;
  std::size_t param_count = 0;

  TnModel model() const;
};

// Synthetic data: ranks i.i.d. uniform over `rank_choices`, core entries
// i.i.d. N(0, core_std^2), contraction, then a uniformly random hidden mode
// permutation (recorded in the returned structure).
GroundTruth generate_synthetic(GraphPtr graph, std::size_t dim,
                               std::span<const int> rank_choices, Rng& rng,
                               double core_std = 1.0);

}  // namespace tnps

#endif  // TNPS_MODEL_HPP_
