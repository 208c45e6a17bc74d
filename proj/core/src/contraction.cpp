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

#include "tnps/contraction.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <string>

#include "tnps/error.hpp"

namespace tnps {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const RowMatrix>;
using Map = Eigen::Map<RowMatrix>;

std::ptrdiff_t find_id(std::span<const IndexLabel> labels, int id) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i].id == id) return static_cast<std::ptrdiff_t>(i);
  return -1;
}

void check_unique(std::span<const IndexLabel> labels, const char* which) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      if (labels[i].id == labels[j].id)
        throw InvalidArgument(std::string("contract_pair: repeated id ") +
                              std::to_string(labels[i].id) + " within operand " + which);
}

bool is_iota(std::span<const std::size_t> order) {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] != i) return false;
  return true;
}

}  // namespace

PairPlan plan_pair(std::span<const IndexLabel> a_labels,
                   std::span<const IndexLabel> b_labels) {
  check_unique(a_labels, "a");
  check_unique(b_labels, "b");
  PairPlan plan;
  for (const auto& l : a_labels) plan.a_shape.push_back(l.dim);
  for (const auto& l : b_labels) plan.b_shape.push_back(l.dim);

  std::vector<std::size_t> a_free, a_shared, b_shared, b_free;
  for (std::size_t i = 0; i < a_labels.size(); ++i) {
    const auto j = find_id(b_labels, a_labels[i].id);
    if (j < 0) {
      a_free.push_back(i);
      continue;
    }
    if (b_labels[static_cast<std::size_t>(j)].dim != a_labels[i].dim)
      throw InvalidArgument("contract_pair: dimension mismatch on id " +
                            std::to_string(a_labels[i].id) + " (" +
                            std::to_string(a_labels[i].dim) + " vs " +
                            std::to_string(b_labels[static_cast<std::size_t>(j)].dim) + ")");
    a_shared.push_back(i);
    b_shared.push_back(static_cast<std::size_t>(j));
  }
  for (std::size_t j = 0; j < b_labels.size(); ++j)
    if (find_id(a_labels, b_labels[j].id) < 0) b_free.push_back(j);

  plan.a_order = a_free;
  plan.a_order.insert(plan.a_order.end(), a_shared.begin(), a_shared.end());
  plan.b_order = b_shared;
  plan.b_order.insert(plan.b_order.end(), b_free.begin(), b_free.end());
  plan.a_in_place = is_iota(plan.a_order);
  plan.b_in_place = is_iota(plan.b_order);

  for (std::size_t i : a_free) {
    plan.rows *= a_labels[i].dim;
    plan.out_shape.push_back(a_labels[i].dim);
    plan.out_labels.push_back(a_labels[i]);
  }
  for (std::size_t i : a_shared) plan.inner *= a_labels[i].dim;
  for (std::size_t j : b_free) {
    plan.cols *= b_labels[j].dim;
    plan.out_shape.push_back(b_labels[j].dim);
    plan.out_labels.push_back(b_labels[j]);
  }
  return plan;
}

void execute_pair(const PairPlan& plan, std::span<const double> a,
                  std::span<const double> b, std::span<double> out,
                  PairScratch& scratch) {
  const double* a_ptr = a.data();
  const double* b_ptr = b.data();
  if (!plan.a_in_place) {
    scratch.a.resize(a.size());
    transpose_into(a, plan.a_shape, plan.a_order, scratch.a);
    a_ptr = scratch.a.data();
  }
  if (!plan.b_in_place) {
    scratch.b.resize(b.size());
    transpose_into(b, plan.b_shape, plan.b_order, scratch.b);
    b_ptr = scratch.b.data();
  }
  const auto m = static_cast<Eigen::Index>(plan.rows);
  const auto k = static_cast<Eigen::Index>(plan.inner);
  const auto n = static_cast<Eigen::Index>(plan.cols);
  Map(out.data(), m, n).noalias() = ConstMap(a_ptr, m, k) * ConstMap(b_ptr, k, n);
}

std::pair<DenseTensor, Labels> contract_pair(const DenseTensor& a,
                                             std::span<const IndexLabel> a_labels,
                                             const DenseTensor& b,
                                             std::span<const IndexLabel> b_labels) {
  if (a_labels.size() != a.order() || b_labels.size() != b.order())
    throw InvalidArgument("contract_pair: label count does not match tensor order");
  for (std::size_t i = 0; i < a_labels.size(); ++i)
    if (a_labels[i].dim != a.dim(i))
      throw InvalidArgument("contract_pair: label dim does not match mode " +
                            std::to_string(i) + " of a");
  for (std::size_t i = 0; i < b_labels.size(); ++i)
    if (b_labels[i].dim != b.dim(i))
      throw InvalidArgument("contract_pair: label dim does not match mode " +
                            std::to_string(i) + " of b");
  PairPlan plan = plan_pair(a_labels, b_labels);
  DenseTensor out(plan.out_shape);
  PairScratch scratch;
  execute_pair(plan, a.values(), b.values(), out.values(), scratch);
  return {std::move(out), std::move(plan.out_labels)};
}

FoldPlan::FoldPlan(std::vector<Labels> operand_labels)
    : operand_labels_(std::move(operand_labels)) {
  if (operand_labels_.empty()) throw InvalidArgument("FoldPlan: no operands");
  Labels acc = operand_labels_.front();
  for (std::size_t i = 1; i < operand_labels_.size(); ++i) {
    steps_.push_back(plan_pair(acc, operand_labels_[i]));
    acc = steps_.back().out_labels;
    buffers_.emplace_back(shape_size(steps_.back().out_shape));
  }
  result_labels_ = std::move(acc);
  scratch_.resize(steps_.size());
  a_used_.resize(steps_.size());
  b_used_.resize(steps_.size());
}

std::span<const double> FoldPlan::run(std::span<const std::span<const double>> operands) {
  if (operands.size() != operand_labels_.size())
    throw InvalidArgument("FoldPlan::run: operand count mismatch");
  std::span<const double> acc = operands[0];
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const PairPlan& step = steps_[i];
    execute_pair(step, acc, operands[i + 1], buffers_[i], scratch_[i]);
    a_used_[i] = step.a_in_place ? acc.data() : scratch_[i].a.data();
    b_used_[i] = step.b_in_place ? operands[i + 1].data() : scratch_[i].b.data();
    acc = buffers_[i];
  }
  return acc;
}

namespace {

// dst = src with the transpose `order` undone.
void untranspose(std::span<const double> src, const Shape& original,
                 const std::vector<std::size_t>& order, std::span<double> dst) {
  Shape shape(order.size());
  std::vector<std::size_t> inverse(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    shape[k] = original[order[k]];
    inverse[order[k]] = k;
  }
  transpose_into(src, shape, inverse, dst);
}

}  // namespace

void FoldPlan::backward(std::span<const double> result_grad,
                        std::span<const std::span<double>> operand_grads) {
  if (operand_grads.size() != operand_labels_.size())
    throw InvalidArgument("FoldPlan::backward: operand count mismatch");
  if (steps_.empty()) {
    std::copy(result_grad.begin(), result_grad.end(), operand_grads[0].begin());
    return;
  }
  grad_acc_.assign(result_grad.begin(), result_grad.end());
  for (std::size_t i = steps_.size(); i-- > 0;) {
    const PairPlan& step = steps_[i];
    const auto m = static_cast<Eigen::Index>(step.rows);
    const auto k = static_cast<Eigen::Index>(step.inner);
    const auto n = static_cast<Eigen::Index>(step.cols);
    const ConstMap g(grad_acc_.data(), m, n);

    // Operand b: A^T G, then back to b's layout.
    std::span<double> gb = operand_grads[i + 1];
    if (step.b_in_place) {
      Map(gb.data(), k, n).noalias() = ConstMap(a_used_[i], m, k).transpose() * g;
    } else {
      grad_t_.resize(static_cast<std::size_t>(k * n));
      Map(grad_t_.data(), k, n).noalias() = ConstMap(a_used_[i], m, k).transpose() * g;
      untranspose(grad_t_, step.b_shape, step.b_order, gb);
    }

    // Operand a: G B^T, then back to a's layout.
    std::span<double> ga;
    if (i == 0) {
      ga = operand_grads[0];
    } else {
      grad_a_.resize(static_cast<std::size_t>(m * k));
      ga = grad_a_;
    }
    if (step.a_in_place) {
      Map(ga.data(), m, k).noalias() = g * ConstMap(b_used_[i], k, n).transpose();
    } else {
      grad_t_.resize(static_cast<std::size_t>(m * k));
      Map(grad_t_.data(), m, k).noalias() = g * ConstMap(b_used_[i], k, n).transpose();
      untranspose(grad_t_, step.a_shape, step.a_order, ga);
    }
    if (i > 0) grad_acc_.swap(grad_a_);
  }
}

std::vector<std::size_t> label_order(std::span<const IndexLabel> from,
                                     std::span<const IndexLabel> to) {
  if (from.size() != to.size())
    throw InvalidArgument("label_order: label sets differ in size");
  std::vector<std::size_t> order(to.size());
  for (std::size_t k = 0; k < to.size(); ++k) {
    const auto i = find_id(from, to[k].id);
    if (i < 0) throw InvalidArgument("label_order: missing id " + std::to_string(to[k].id));
    order[k] = static_cast<std::size_t>(i);
  }
  return order;
}

}  // namespace tnps
