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

#include "tnps/network.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tnps/error.hpp"

namespace tnps {

namespace {

int open_id(int v) { return v; }
int bond_id(const TemplateGraph& g, int e) { return static_cast<int>(g.num_vertices()) + e; }

bool has_id(const Labels& labels, int id) {
  return std::any_of(labels.begin(), labels.end(), [id](const IndexLabel& l) { return l.id == id; });
}

// Labels left after contracting a with b, and the multiply-add count.
std::pair<Labels, double> simulate(const Labels& a, const Labels& b) {
  Labels out;
  double rows = 1, inner = 1, cols = 1;
  for (const auto& l : a) {
    if (has_id(b, l.id)) {
      inner *= static_cast<double>(l.dim);
    } else {
      rows *= static_cast<double>(l.dim);
      out.push_back(l);
    }
  }
  for (const auto& l : b)
    if (!has_id(a, l.id)) {
      cols *= static_cast<double>(l.dim);
      out.push_back(l);
    }
  return {std::move(out), rows * inner * cols};
}

double label_volume(const Labels& l) {
  double v = 1;
  for (const auto& x : l) v *= static_cast<double>(x.dim);
  return v;
}

// Greedy fold: starting from `start`, repeatedly absorb the candidate whose
// contraction yields the smallest intermediate. Returns (order, total cost).
std::pair<std::vector<int>, double> greedy_fold(const Labels& start,
                                                const std::vector<Labels>& ops,
                                                std::vector<int> candidates) {
  Labels acc = start;
  double total = 0;
  std::vector<int> order;
  while (!candidates.empty()) {
    std::size_t best = 0;
    double best_size = std::numeric_limits<double>::infinity();
    double best_cost = best_size;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      auto [labels, cost] = simulate(acc, ops[static_cast<std::size_t>(candidates[i])]);
      const double size = label_volume(labels);
      if (size < best_size || (size == best_size && cost < best_cost)) {
        best = i;
        best_size = size;
        best_cost = cost;
      }
    }
    acc = simulate(acc, ops[static_cast<std::size_t>(candidates[best])]).first;
    total += best_cost;
    order.push_back(candidates[best]);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return {order, total};
}

bool is_iota(std::span<const std::size_t> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != i) return false;
  return true;
}

}  // namespace

Labels core_labels(const TnStructure& s, std::span<const std::size_t> dims, int v) {
  const TemplateGraph& g = *s.graph;
  Labels labels;
  if (g.is_external(v)) {
    const int mode = s.mode_of_vertex(v);
    labels.push_back({open_id(v), dims[static_cast<std::size_t>(mode)]});
  }
  for (int e : g.incident_edges(v))
    labels.push_back({bond_id(g, e), static_cast<std::size_t>(s.ranks[static_cast<std::size_t>(e)])});
  return labels;
}

Shape core_shape(const TnStructure& s, std::span<const std::size_t> dims, int v) {
  Shape shape;
  for (const auto& l : core_labels(s, dims, v)) shape.push_back(l.dim);
  return shape;
}

NetworkPlan::NetworkPlan(const TnStructure& s, std::span<const std::size_t> dims)
    : slot_to_mode_(s.perm) {
  s.validate();
  if (dims.size() != s.order())
    throw InvalidArgument("network: tensor order " + std::to_string(dims.size()) +
                          " does not match the structure's " + std::to_string(s.order()) +
                          " external vertices");
  const TemplateGraph& g = *s.graph;
  const int n = static_cast<int>(g.num_vertices());

  std::vector<Labels> ops;
  for (int v = 0; v < n; ++v) {
    ops.push_back(core_labels(s, dims, v));
    core_shapes_.emplace_back();
    for (const auto& l : ops.back()) core_shapes_.back().push_back(l.dim);
  }

  Labels slot_labels;
  for (int v : g.external_vertices()) {
    slot_labels.push_back({open_id(v), dims[static_cast<std::size_t>(s.mode_of_vertex(v))]});
    slot_shape_.push_back(slot_labels.back().dim);
  }

  // Forward pass: cheapest greedy fold over all starting vertices.
  double best_cost = std::numeric_limits<double>::infinity();
  for (int start = 0; start < n; ++start) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (v != start) rest.push_back(v);
    auto [order, cost] = greedy_fold(ops[static_cast<std::size_t>(start)], ops, rest);
    if (cost < best_cost) {
      best_cost = cost;
      fold_order_ = {start};
      fold_order_.insert(fold_order_.end(), order.begin(), order.end());
    }
  }
  std::vector<Labels> fold_ops;
  for (int v : fold_order_) fold_ops.push_back(ops[static_cast<std::size_t>(v)]);
  forward_ = FoldPlan(std::move(fold_ops));
  forward_order_ = label_order(forward_.result_labels(), slot_labels);
  forward_in_place_ = is_iota(forward_order_);
  forward_out_.resize(shape_size(slot_shape_));

  operand_scratch_.resize(static_cast<std::size_t>(n) + 1);
  grad_scratch_.resize(static_cast<std::size_t>(n));
  ops_ = std::move(ops);
  slot_labels_ = std::move(slot_labels);
}

std::span<const double> NetworkPlan::forward(std::span<const std::span<const double>> cores) {
  if (cores.size() != core_shapes_.size())
    throw InvalidArgument("network: core count mismatch");
  for (std::size_t i = 0; i < fold_order_.size(); ++i)
    operand_scratch_[i] = cores[static_cast<std::size_t>(fold_order_[i])];
  auto result = forward_.run(std::span(operand_scratch_.data(), fold_order_.size()));
  if (forward_in_place_) return result;
  Shape result_shape;
  for (const auto& l : forward_.result_labels()) result_shape.push_back(l.dim);
  transpose_into(result, result_shape, forward_order_, forward_out_);
  return forward_out_;
}

void NetworkPlan::environment(int v, std::span<const double> residual,
                              std::span<const std::span<const double>> cores,
                              std::span<double> out) {
  if (env_.empty()) {
    // The residual absorbs every other core.
    const int n = static_cast<int>(ops_.size());
    for (int w = 0; w < n; ++w) {
      std::vector<int> rest;
      for (int u = 0; u < n; ++u)
        if (u != w) rest.push_back(u);
      auto order = greedy_fold(slot_labels_, ops_, rest).first;
      std::vector<Labels> env_ops = {slot_labels_};
      for (int u : order) env_ops.push_back(ops_[static_cast<std::size_t>(u)]);
      EnvPlan plan{FoldPlan(std::move(env_ops)), order, {}, true};
      plan.out_order = label_order(plan.fold.result_labels(), ops_[static_cast<std::size_t>(w)]);
      plan.in_place = is_iota(plan.out_order);
      env_.push_back(std::move(plan));
    }
  }
  EnvPlan& plan = env_[static_cast<std::size_t>(v)];
  operand_scratch_[0] = residual;
  for (std::size_t i = 0; i < plan.operand_vertices.size(); ++i)
    operand_scratch_[i + 1] = cores[static_cast<std::size_t>(plan.operand_vertices[i])];
  auto result =
      plan.fold.run(std::span(operand_scratch_.data(), plan.operand_vertices.size() + 1));
  if (plan.in_place) {
    std::copy(result.begin(), result.end(), out.begin());
    return;
  }
  Shape result_shape;
  for (const auto& l : plan.fold.result_labels()) result_shape.push_back(l.dim);
  transpose_into(result, result_shape, plan.out_order, out);
}

void NetworkPlan::gradients(std::span<const double> residual,
                            std::span<const std::span<double>> out) {
  if (out.size() != core_shapes_.size()) throw InvalidArgument("network: core count mismatch");
  std::span<const double> grad = residual;
  if (!forward_in_place_) {
    // Undo the final transpose into slot order.
    Shape result_shape;
    for (const auto& l : forward_.result_labels()) result_shape.push_back(l.dim);
    Shape slot_shape(forward_order_.size());
    std::vector<std::size_t> inverse(forward_order_.size());
    for (std::size_t k = 0; k < forward_order_.size(); ++k) {
      slot_shape[k] = result_shape[forward_order_[k]];
      inverse[forward_order_[k]] = k;
    }
    residual_scratch_.resize(residual.size());
    transpose_into(residual, slot_shape, inverse, residual_scratch_);
    grad = residual_scratch_;
  }
  for (std::size_t i = 0; i < fold_order_.size(); ++i)
    grad_scratch_[i] = out[static_cast<std::size_t>(fold_order_[i])];
  forward_.backward(grad, grad_scratch_);
}

DenseTensor NetworkPlan::to_slot_order(const DenseTensor& mode_ordered) const {
  if (mode_ordered.order() != slot_to_mode_.size())
    throw InvalidArgument("network: target order does not match structure");
  std::vector<std::size_t> order(slot_to_mode_.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    order[k] = static_cast<std::size_t>(slot_to_mode_(static_cast<int>(k)));
  Shape shape;
  for (std::size_t k : order) shape.push_back(mode_ordered.dim(k));
  if (shape != slot_shape_)
    throw InvalidArgument("network: target shape " + shape_to_string(mode_ordered.shape()) +
                          " inconsistent with structure");
  DenseTensor out(std::move(shape));
  transpose_into(mode_ordered.values(), mode_ordered.shape(), order, out.values());
  return out;
}

DenseTensor NetworkPlan::to_mode_order(std::span<const double> slot_ordered) const {
  DenseTensor slot(slot_shape_, std::vector<double>(slot_ordered.begin(), slot_ordered.end()));
  return permute_modes(slot, slot_to_mode_);
}

}  // namespace tnps
