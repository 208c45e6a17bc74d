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
#include <numeric>

#include "tnps/error.hpp"
#include "tnps/search.hpp"

namespace tnps {

namespace {

constexpr std::uint64_t kGaStream = 0x746e6761;  // "tnga"

struct Individual {
  std::vector<int> ranks;
  std::vector<double> keys;
};

TnStructure to_structure(const GraphPtr& graph, const Individual& ind) {
  return TnStructure{graph, decode_random_keys(ind.keys), ind.ranks};
}

// Boltzmann weights exp(-alpha * u^beta) with u the loss rescaled to [0, 1]
// over the survivors; non-finite losses get u = 1.
std::vector<double> parent_weights(const std::vector<double>& losses, double alpha, double beta) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double l : losses)
    if (std::isfinite(l)) {
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
  std::vector<double> w;
  for (double l : losses) {
    double u = 1.0;
    if (std::isfinite(l)) u = hi > lo ? (l - lo) / (hi - lo) : 0.0;
    w.push_back(std::exp(-alpha * std::pow(u, beta)));
  }
  return w;
}

}  // namespace

void GaConfig::validate() const {
  if (rank_max < 1) throw InvalidArgument("ga: rank_max must be >= 1");
  if (population < 2) throw InvalidArgument("ga: population must be >= 2");
  if (generations < 1) throw InvalidArgument("ga: generations must be >= 1");
  if (!(elimination_rate >= 0 && elimination_rate < 1))
    throw InvalidArgument("ga: elimination_rate must lie in [0, 1)");
  if (reproduction >= population)
    throw InvalidArgument("ga: reproduction must be smaller than the population");
  if (!(mutation_rate >= 0 && mutation_rate <= 1))
    throw InvalidArgument("ga: mutation_rate must lie in [0, 1]");
  if (!(alpha >= 0) || !(beta > 0)) throw InvalidArgument("ga: need alpha >= 0 and beta > 0");
  Objective{lambda, nullptr}.validate();
  fit.validate();
}

Permutation decode_random_keys(std::span<const double> keys) {
  std::vector<int> order(keys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)]; });
  std::vector<int> p(keys.size());
  for (std::size_t r = 0; r < order.size(); ++r) p[static_cast<std::size_t>(order[r])] = static_cast<int>(r);
  return Permutation(std::move(p));
}

SearchResult tnga_plus(const DenseTensor& target, GraphPtr graph, const GaConfig& cfg,
                       const DenseTensor* mask) {
  cfg.validate();
  Evaluator eval(target, graph, Objective{cfg.lambda, mask}, cfg.fit, cfg.seed, cfg.jobs);
  Rng rng(derive_seed({cfg.seed, kGaStream}));
  const std::size_t n_ranks = graph->num_edges();
  const std::size_t n_keys = graph->num_external();
  std::uniform_int_distribution<int> rank_gene(1, cfg.rank_max);
  std::uniform_real_distribution<double> key_gene(0.0, 1.0);

  std::vector<Individual> pop(cfg.population);
  for (auto& ind : pop) {
    for (std::size_t e = 0; e < n_ranks; ++e) ind.ranks.push_back(rank_gene(rng));
    for (std::size_t k = 0; k < n_keys; ++k) ind.keys.push_back(key_gene(rng));
  }

  SearchResult result;
  std::shared_ptr<const Evaluation> best;
  std::vector<std::shared_ptr<const Evaluation>> scores;
  // Scores pop[from..] and folds them into the running best.
  const auto score_from = [&](std::size_t from) {
    std::vector<TnStructure> batch;
    for (std::size_t i = from; i < pop.size(); ++i) batch.push_back(to_structure(graph, pop[i]));
    const std::size_t before = eval.evaluations();
    auto fresh = eval.evaluate(batch);
    scores.resize(from);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      if (!best || fresh[i]->loss < best->loss) {
        best = fresh[i];
        result.evaluations_to_best = before + i + 1;
      }
      if (cfg.target_loss && !result.evaluations_to_target && fresh[i]->loss <= *cfg.target_loss)
        result.evaluations_to_target = before + i + 1;
      scores.push_back(std::move(fresh[i]));
    }
  };
  const auto record = [&](std::size_t gen) {
    result.trace.records.push_back(
        {gen, eval.evaluations(), best->loss, best->rse, best->phi, best->structure});
  };

  score_from(0);
  record(1);
  const auto eliminated =
      static_cast<std::size_t>(std::floor(cfg.elimination_rate * static_cast<double>(cfg.population)));
  const std::size_t survivors = std::max({cfg.population - eliminated, cfg.reproduction, std::size_t{1}});
  std::bernoulli_distribution mutate(cfg.mutation_rate);
  std::bernoulli_distribution coin(0.5);

  for (std::size_t gen = 2; gen <= cfg.generations && !result.evaluations_to_target; ++gen) {
    std::vector<std::size_t> order(pop.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a]->loss < scores[b]->loss; });
    order.resize(survivors);

    std::vector<double> losses;
    for (std::size_t i : order) losses.push_back(scores[i]->loss);
    const auto w = parent_weights(losses, cfg.alpha, cfg.beta);
    std::discrete_distribution<std::size_t> pick(w.begin(), w.end());

    std::vector<Individual> next;
    std::vector<std::shared_ptr<const Evaluation>> kept;
    for (std::size_t e = 0; e < cfg.reproduction; ++e) {
      next.push_back(pop[order[e]]);
      kept.push_back(scores[order[e]]);
    }
    while (next.size() < cfg.population) {
      const Individual& a = pop[order[pick(rng)]];
      const Individual& b = pop[order[pick(rng)]];
      Individual child;
      for (std::size_t e = 0; e < n_ranks; ++e) {
        int gene = coin(rng) ? a.ranks[e] : b.ranks[e];
        if (mutate(rng)) gene = rank_gene(rng);
        child.ranks.push_back(gene);
      }
      for (std::size_t k = 0; k < n_keys; ++k) {
        double gene = coin(rng) ? a.keys[k] : b.keys[k];
        if (mutate(rng)) gene = key_gene(rng);
        child.keys.push_back(gene);
      }
      next.push_back(std::move(child));
    }
    pop = std::move(next);
    scores = std::move(kept);
    score_from(cfg.reproduction);
    record(gen);
  }

  result.best = best->structure;
  result.fit = *best->fit;
  result.loss = best->loss;
  result.rse = best->rse;
  result.phi = best->phi;
  result.param_count = best->param_count;
  result.evaluations = eval.evaluations();
  result.fits = eval.fits();
  return result;
}

}  // namespace tnps
