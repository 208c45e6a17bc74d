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

#ifndef TNPS_CONTRACTION_HPP_
#define TNPS_CONTRACTION_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tnps/tensor.hpp"

namespace tnps {

// Names one mode of a tensor taking part in a contraction. Two occurrences
// of the same id across the two operands are summed over.
struct IndexLabel {
  int id = 0;
  std::size_t dim = 1;

  friend bool operator==(const IndexLabel&, const IndexLabel&) = default;
};

using Labels = std::vector<IndexLabel>;

// Precomputed layout for one pairwise contraction. The operands are
// transposed to (free_a, shared) and (shared, free_b) and multiplied as
// matrices; the result keeps the free labels of `a` followed by those of `b`.
struct PairPlan {
  Shape a_shape;
  Shape b_shape;
  std::vector<std::size_t> a_order;
  std::vector<std::size_t> b_order;
  bool a_in_place = true;
  bool b_in_place = true;
  std::size_t rows = 1;   // product of free dims of a
  std::size_t inner = 1;  // product of shared dims
  std::size_t cols = 1;   // product of free dims of b
  Shape out_shape;
  Labels out_labels;
};

PairPlan plan_pair(std::span<const IndexLabel> a_labels,
                   std::span<const IndexLabel> b_labels);

// Scratch buffers reused across executions to avoid reallocating.
struct PairScratch {
  std::vector<double> a;
  std::vector<double> b;
};

void execute_pair(const PairPlan& plan, std::span<const double> a,
                  std::span<const double> b, std::span<double> out,
                  PairScratch& scratch);

// Einstein-summation over every id shared by the two label lists.
std::pair<DenseTensor, Labels> contract_pair(const DenseTensor& a,
                                             std::span<const IndexLabel> a_labels,
                                             const DenseTensor& b,
                                             std::span<const IndexLabel> b_labels);

// A left-to-right fold of pairwise contractions over a fixed list of
// operands, compiled once and executed many times with different values.
class FoldPlan {
 public:
  FoldPlan() = default;
  explicit FoldPlan(std::vector<Labels> operand_labels);

  // Executes the fold; result labels are `result_labels()`.
  std::span<const double> run(std::span<const std::span<const double>> operands);

  // Reverse pass for the operands of the last run(), which must still be
  // alive: given d(loss)/d(result) in result layout, writes d(loss)/d(operand)
  // in each operand's own layout.
  void backward(std::span<const double> result_grad,
                std::span<const std::span<double>> operand_grads);

  const Labels& result_labels() const { return result_labels_; }
  std::size_t num_operands() const { return operand_labels_.size(); }

 private:
  std::vector<Labels> operand_labels_;
  std::vector<PairPlan> steps_;
  std::vector<std::vector<double>> buffers_;
  // Per step: the operands as multiplied, kept for backward().
  std::vector<PairScratch> scratch_;
  std::vector<const double*> a_used_;
  std::vector<const double*> b_used_;
  std::vector<double> grad_a_;
  std::vector<double> grad_acc_;
  std::vector<double> grad_t_;
  Labels result_labels_;
};

// Order of `from` labels that yields the `to` label sequence (same multiset).
std::vector<std::size_t> label_order(std::span<const IndexLabel> from,
                                     std::span<const IndexLabel> to);

}  // namespace tnps

#endif  // TNPS_CONTRACTION_HPP_
