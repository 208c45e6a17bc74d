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

#ifndef TNPS_SEARCH_HPP_
#define TNPS_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tnps/evaluator.hpp"
#include "tnps/fit.hpp"
#include "tnps/random.hpp"
#include "tnps/structure.hpp"
#include "tnps/tensor.hpp"

namespace tnps {

// TNLS parameters. Defaults are the synthetic order-4 setting.
struct SearchConfig {
  int rank_max = 7;
  std::size_t iters = 30;
  std::size_t samples = 60;
  double c1 = 0.9;
  double c2 = 0.9;
  double lambda = 200.0;
  FitConfig fit;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  // Stop as soon as some evaluated loss is <= target_loss.
  std::optional<double> target_loss;
  // Skip fits of candidates whose phi alone rules out an improvement. Exact:
  // the trajectory is unchanged, only the fitted count drops.
  bool prune = true;

  void validate() const;
  // Variance of the rank proposal at iteration m >= 1: c1^(m-1).
  double rank_variance(std::size_t m) const;
  // Probability of proposing a new permutation at iteration m >= 1: c2^(m-1).
  double swap_probability(std::size_t m) const;
};

// TNGA+ parameters; defaults are the synthetic TR setting.
struct GaConfig {
  int rank_max = 7;
  std::size_t population = 150;
  std::size_t generations = 30;
  double elimination_rate = 0.36;
  // Best individuals copied unchanged into the next generation.
  std::size_t reproduction = 2;
  double alpha = 20.0;
  double beta = 1.0;
  double mutation_rate = 0.24;
  double lambda = 200.0;
  FitConfig fit;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::optional<double> target_loss;

  void validate() const;
};

struct TraceRecord {
  std::size_t iteration = 0;
  std::size_t evaluations = 0;
  double best_loss = 0.0;
  double best_rse = 0.0;
  double best_phi = 0.0;
  TnStructure structure;
};

struct SearchTrace {
  std::vector<TraceRecord> records;
};

struct SearchResult {
  TnStructure best;
  FitResult fit;
  double loss = 0.0;
  double rse = 0.0;
  double phi = 0.0;
  std::size_t param_count = 0;
  // Candidates scored in total, and up to and including the one that
  // became the final incumbent.
  std::size_t evaluations = 0;
  std::size_t evaluations_to_best = 0;
  // Set when target_loss was given and reached.
  std::optional<std::size_t> evaluations_to_target;
  // Distinct structures actually fitted.
  std::size_t fits = 0;
  SearchTrace trace;
};

// Per-entry draw from N(current, variance), rounded to nearest and clamped
// to [1, rank_max]. variance == 0 returns current unchanged.
std::vector<int> sample_rank(std::span<const int> current, double variance, int rank_max,
                             Rng& rng);

// Random-key decoding: p[k] is the 0-based rank of keys[k] in ascending
// order, ties broken by index. Keys (0.46, 0.91, 0.33) decode to 1-based
// (2, 3, 1).
Permutation decode_random_keys(std::span<const double> keys);

// TN-structure local sampling. Starts from a uniformly random structure;
// each iteration proposes cfg.samples candidates around the incumbent and
// moves to the best of them only on strict improvement. The returned
// structure is the canonical representative of its automorphism orbit.
SearchResult tnls(const DenseTensor& target, GraphPtr graph, const SearchConfig& cfg,
                  const DenseTensor* mask = nullptr);

// Random-key genetic search baseline. Returns the best individual ever
// evaluated.
SearchResult tnga_plus(const DenseTensor& target, GraphPtr graph, const GaConfig& cfg,
                       const DenseTensor* mask = nullptr);

}  // namespace tnps

#endif  // TNPS_SEARCH_HPP_
