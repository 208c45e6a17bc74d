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

#ifndef TNPS_EVALUATOR_HPP_
#define TNPS_EVALUATOR_HPP_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "tnps/automorphism.hpp"
#include "tnps/fit.hpp"
#include "tnps/structure.hpp"
#include "tnps/tensor.hpp"

namespace tnps {

// f = phi + lambda * RSE. The mask, when set, must outlive every use.
struct Objective {
  double lambda = 200.0;
  const DenseTensor* mask = nullptr;

  void validate() const;
  // +inf when rse is not finite (and lambda > 0); exactly phi when lambda == 0.
  double combine(double phi, double rse) const;
};

struct Evaluation {
  TnStructure structure;
  double loss = 0.0;
  double rse = 0.0;
  double phi = 0.0;
  std::size_t param_count = 0;
  // Null for pruned candidates (see Evaluator::evaluate).
  std::shared_ptr<const FitResult> fit;

  bool pruned() const { return fit == nullptr; }
};

// Fits s with fit_cfg as given and scores it.
Evaluation objective_eval(const TnStructure& s, const DenseTensor& target, const Objective& obj,
                          const FitConfig& fit_cfg);

// Scores candidate structures for one search run.
//
// Every candidate is first mapped to the canonical member of its orbit under
// the template's automorphisms, since those describe the same network. The
// fit for a canonical structure is seeded from (seed, structure key) alone
// and memoised, which makes each loss a pure function of the structure: the
// outcome does not depend on batch order, thread count or search history.
class Evaluator {
 public:
  Evaluator(const DenseTensor& target, GraphPtr graph, Objective obj, FitConfig fit,
            std::uint64_t seed, std::size_t jobs);

  TnStructure canonical(const TnStructure& s) const;

  // Scores a batch, fitting unseen structures in parallel. Each candidate
  // counts as one evaluation, cached or not. Candidates that are not cached
  // and whose phi is >= prune_at skip the fit: they are returned pruned with
  // loss = phi, a lower bound of their true loss.
  std::vector<std::shared_ptr<const Evaluation>> evaluate(
      const std::vector<TnStructure>& batch,
      double prune_at = std::numeric_limits<double>::infinity());
  std::shared_ptr<const Evaluation> evaluate(const TnStructure& s);

  std::size_t evaluations() const { return evaluations_; }
  std::size_t fits() const { return cache_.size(); }
  const DenseTensor& target() const { return *target_; }
  const GraphPtr& graph() const { return graph_; }

 private:
  const DenseTensor* target_;
  GraphPtr graph_;
  Objective obj_;
  FitConfig fit_;
  std::uint64_t seed_;
  std::size_t jobs_;
  AutGroup aut_;
  std::map<std::string, std::shared_ptr<const Evaluation>> cache_;
  std::size_t evaluations_ = 0;
};

}  // namespace tnps

#endif  // TNPS_EVALUATOR_HPP_
