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

#include <algorithm>
#include <cmath>

#include "tnps/error.hpp"
#include "tnps/neighborhood.hpp"
#include "tnps/search.hpp"

namespace tnps {

namespace {

constexpr std::uint64_t kProposalStream = 0x746e6c73;  // "tnls"

}  // namespace

void SearchConfig::validate() const {
  if (rank_max < 1) throw InvalidArgument("search: rank_max must be >= 1");
  if (iters < 1) throw InvalidArgument("search: iters must be >= 1");
  if (samples < 1) throw InvalidArgument("search: samples must be >= 1");
  if (!(c1 >= 0.9 && c1 < 1)) throw InvalidArgument("search: c1 must lie in [0.9, 1)");
  if (!(c2 >= 0.9 && c2 < 1)) throw InvalidArgument("search: c2 must lie in [0.9, 1)");
  Objective{lambda, nullptr}.validate();
  fit.validate();
}

double SearchConfig::rank_variance(std::size_t m) const {
  return std::pow(c1, static_cast<double>(m) - 1.0);
}

double SearchConfig::swap_probability(std::size_t m) const {
  return std::pow(c2, static_cast<double>(m) - 1.0);
}

std::vector<int> sample_rank(std::span<const int> current, double variance, int rank_max,
                             Rng& rng) {
  if (variance < 0) throw InvalidArgument("sample_rank: variance must be >= 0");
  std::vector<int> out(current.begin(), current.end());
  if (variance == 0) return out;
  std::normal_distribution<double> normal(0.0, std::sqrt(variance));
  for (int& r : out) {
    const double draw = std::round(static_cast<double>(r) + normal(rng));
    r = static_cast<int>(std::clamp(draw, 1.0, static_cast<double>(rank_max)));
  }
  return out;
}

SearchResult tnls(const DenseTensor& target, GraphPtr graph, const SearchConfig& cfg,
                  const DenseTensor* mask) {
  cfg.validate();
  Evaluator eval(target, graph, Objective{cfg.lambda, mask}, cfg.fit, cfg.seed, cfg.jobs);
  Rng rng(derive_seed({cfg.seed, kProposalStream}));

  SearchResult result;
  auto incumbent = eval.evaluate(random_structure(graph, cfg.rank_max, rng));
  result.evaluations_to_best = 1;
  const auto reached = [&](const Evaluation& e) {
    return cfg.target_loss && e.loss <= *cfg.target_loss;
  };
  const auto record = [&](std::size_t m) {
    result.trace.records.push_back({m, eval.evaluations(), incumbent->loss, incumbent->rse,
                                    incumbent->phi, incumbent->structure});
  };
  record(0);
  if (reached(*incumbent)) result.evaluations_to_target = 1;

  const bool can_swap = graph->num_external() >= 2;
  for (std::size_t m = 1; m <= cfg.iters && !result.evaluations_to_target; ++m) {
    const double variance = cfg.rank_variance(m);
    std::bernoulli_distribution gate(cfg.swap_probability(m));
    std::vector<TnStructure> batch;
    for (std::size_t k = 0; k < cfg.samples; ++k) {
      TnStructure c = incumbent->structure;
      if (gate(rng) && can_swap) c.perm = sample_local(c.perm, 1, rng);
      c.ranks = sample_rank(c.ranks, variance, cfg.rank_max, rng);
      batch.push_back(std::move(c));
    }

    const std::size_t before = eval.evaluations();
    const double bound = cfg.prune ? incumbent->loss : std::numeric_limits<double>::infinity();
    auto scored = eval.evaluate(batch, bound);
    std::size_t best = 0;
    for (std::size_t k = 0; k < scored.size(); ++k) {
      if (scored[k]->loss < scored[best]->loss) best = k;
      if (!result.evaluations_to_target && reached(*scored[k]))
        result.evaluations_to_target = before + k + 1;
    }
    if (scored[best]->loss < incumbent->loss) {
      incumbent = scored[best];
      result.evaluations_to_best = before + best + 1;
    }
    record(m);
  }

  result.best = incumbent->structure;
  result.fit = *incumbent->fit;
  result.loss = incumbent->loss;
  result.rse = incumbent->rse;
  result.phi = incumbent->phi;
  result.param_count = incumbent->param_count;
  result.evaluations = eval.evaluations();
  result.fits = eval.fits();
  return result;
}

}  // namespace tnps
