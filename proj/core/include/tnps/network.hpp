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

#ifndef TNPS_NETWORK_HPP_
#define TNPS_NETWORK_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "tnps/contraction.hpp"
#include "tnps/structure.hpp"
#include "tnps/tensor.hpp"

namespace tnps {

// Core layout for vertex v: the open mode first (external vertices only,
// dimension dims[mode]), then one bond per incident edge ordered by
// (min endpoint, max endpoint).
Shape core_shape(const TnStructure& s, std::span<const std::size_t> dims, int v);
Labels core_labels(const TnStructure& s, std::span<const std::size_t> dims, int v);

// Compiled contraction schedule for one structure: the full network and, for
// every vertex, its environment against a residual tensor. Buffers are owned
// by the plan, so a plan must not be shared between threads.
//
// Both the forward result and residuals use "slot order": axis k belongs to
// the k-th external vertex. Callers translate from mode order once with
// `to_slot_order`.
class NetworkPlan {
 public:
  NetworkPlan(const TnStructure& s, std::span<const std::size_t> dims);

  std::size_t num_cores() const { return core_shapes_.size(); }
  const std::vector<Shape>& core_shapes() const { return core_shapes_; }
  const Shape& slot_shape() const { return slot_shape_; }
  // Vertices in the order the forward pass folds them.
  const std::vector<int>& fold_order() const { return fold_order_; }

  // Full contraction in slot order.
  std::span<const double> forward(std::span<const std::span<const double>> cores);

  // Contraction of `residual` (slot order) with every core except v, laid
  // out like core v: d<residual, network>/d core_v.
  void environment(int v, std::span<const double> residual,
                   std::span<const std::span<const double>> cores, std::span<double> out);

  // d<residual, network>/d core_v for every v at once, by a reverse pass
  // over the last forward(); the cores passed there must still be alive.
  void gradients(std::span<const double> residual, std::span<const std::span<double>> out);

  DenseTensor to_slot_order(const DenseTensor& mode_ordered) const;
  DenseTensor to_mode_order(std::span<const double> slot_ordered) const;

 private:
  struct EnvPlan {
    FoldPlan fold;
    std::vector<int> operand_vertices;  // cores after the residual
    std::vector<std::size_t> out_order;
    bool in_place = true;
  };

  Permutation slot_to_mode_;
  std::vector<Shape> core_shapes_;
  Shape slot_shape_;
  std::vector<int> fold_order_;
  FoldPlan forward_;
  std::vector<std::size_t> forward_order_;
  bool forward_in_place_ = true;
  std::vector<double> forward_out_;
  std::vector<Labels> ops_;
  Labels slot_labels_;
  std::vector<EnvPlan> env_;  // built on first use
  std::vector<std::span<const double>> operand_scratch_;
  std::vector<std::span<double>> grad_scratch_;
  std::vector<double> residual_scratch_;
};

}  // namespace tnps

#endif  // TNPS_NETWORK_HPP_
