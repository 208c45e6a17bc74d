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

#include "tnps/evaluator.hpp"

#include <cmath>

#include "tnps/error.hpp"
#include "tnps/model.hpp"
#include "tnps/parallel.hpp"
#include "tnps/random.hpp"

namespace tnps {

namespace {

// Canonicalisation only needs the group once per run, so a generous limit
// is affordable for the larger templates.
constexpr std::size_t kEvaluatorAutLimit = 24;

AutGroup automorphisms_or_trivial(const TemplateGraph& g) {
  try {
    return enumerate_automorphisms(g, kEvaluatorAutLimit);
  } catch (const LimitExceeded&) {
    return AutGroup{{Permutation::identity(g.num_vertices())}};
  }
}

}  // namespace

void Objective::validate() const {
  if (!(lambda >= 0) || !std::isfinite(lambda))
    throw InvalidArgument("objective: lambda must be finite and >= 0");
}

double Objective::combine(double phi, double rse) const {
  if (lambda == 0) return phi;
  if (!std::isfinite(rse)) return std::numeric_limits<double>::infinity();
  return phi + lambda * rse;
}

Evaluation objective_eval(const TnStructure& s, const DenseTensor& target, const Objective& obj,
                          const FitConfig& fit_cfg) {
  obj.validate();
  auto result = std::make_shared<FitResult>(fit(target, s, fit_cfg, obj.mask));
  Evaluation e;
  e.structure = s;
  e.param_count = param_count(s, target.shape());
  e.phi = phi(s, target.shape());
  e.rse = result->rse;
  e.loss = obj.combine(e.phi, e.rse);
  e.fit = std::move(result);
  return e;
}

Evaluator::Evaluator(const DenseTensor& target, GraphPtr graph, Objective obj, FitConfig fit,
                     std::uint64_t seed, std::size_t jobs)
    : target_(&target),
      graph_(std::move(graph)),
      obj_(obj),
      fit_(fit),
      seed_(seed),
      jobs_(jobs),
      aut_(automorphisms_or_trivial(*graph_)) {
  obj_.validate();
  fit_.validate();
  if (target.order() != graph_->num_external())
    throw InvalidArgument("search: tensor order " + std::to_string(target.order()) +
                          " does not match the template's " +
                          std::to_string(graph_->num_external()) + " external vertices");
}

TnStructure Evaluator::canonical(const TnStructure& s) const { return canonicalize(s, aut_); }

std::vector<std::shared_ptr<const Evaluation>> Evaluator::evaluate(
    const std::vector<TnStructure>& batch, double prune_at) {
  std::vector<std::shared_ptr<const Evaluation>> out(batch.size());
  std::vector<TnStructure> canon;
  std::vector<std::string> keys;
  for (const auto& s : batch) {
    canon.push_back(canonical(s));
    keys.push_back(canon.back().key());
  }

  // Unique uncached structures that survive pruning, in first-seen order.
  std::map<std::string, std::size_t> pending;
  std::vector<std::size_t> jobs;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    if (auto it = cache_.find(keys[i]); it != cache_.end()) {
      out[i] = it->second;
      continue;
    }
    const double lower = phi(canon[i], target_->shape());
    if (lower >= prune_at) {
      auto e = std::make_shared<Evaluation>();
      e->structure = canon[i];
      e->phi = lower;
      e->loss = lower;
      e->rse = std::numeric_limits<double>::quiet_NaN();
      e->param_count = param_count(canon[i], target_->shape());
      out[i] = std::move(e);
      continue;
    }
    if (pending.emplace(keys[i], jobs.size()).second) jobs.push_back(i);
  }

  std::vector<std::shared_ptr<const Evaluation>> fitted(jobs.size());
  parallel_for(jobs.size(), jobs_, [&](std::size_t j) {
    const std::size_t i = jobs[j];
    FitConfig cfg = fit_;
    cfg.seed = derive_seed({seed_, hash_string(keys[i])});
    fitted[j] = std::make_shared<const Evaluation>(objective_eval(canon[i], *target_, obj_, cfg));
  });
  for (std::size_t j = 0; j < jobs.size(); ++j) cache_.emplace(keys[jobs[j]], fitted[j]);
  for (std::size_t i = 0; i < batch.size(); ++i)
    if (!out[i]) out[i] = cache_.at(keys[i]);

  evaluations_ += batch.size();
  return out;
}

std::shared_ptr<const Evaluation> Evaluator::evaluate(const TnStructure& s) {
  return evaluate(std::vector<TnStructure>{s}).front();
}

}  // namespace tnps
