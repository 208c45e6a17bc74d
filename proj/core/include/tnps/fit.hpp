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

#ifndef TNPS_FIT_HPP_
#define TNPS_FIT_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "tnps/model.hpp"
#include "tnps/structure.hpp"
#include "tnps/tensor.hpp"

namespace tnps {

// Adam-based core fitting. Defaults follow the synthetic experiments:
// learning rate 1e-3, N(0, 0.1) initialisation, four restarts.
struct FitConfig {
  double learning_rate = 1e-3;
  std::size_t max_steps = 10000;
  std::size_t restarts = 4;
  double init_std = std::sqrt(0.1);
  // A restart stops as soon as its RSE drops below this.
  double tolerance = 1e-5;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  // Stall detection: every `stall_window` steps, a restart whose best RSE has
  // not shrunk by at least a factor (1 - stall_improvement) stops early.
  // A window of 0 disables the check.
  std::size_t stall_window = 1000;
  double stall_improvement = 0.01;
  std::uint64_t seed = 0;

  void validate() const;
};

struct FitResult {
  TnModel model;
  double rse = 0.0;  // on observed entries when a mask was used
  std::size_t steps_used = 0;
  std::size_t restart_index = 0;
  std::size_t total_steps = 0;  // across all restarts
};

// ||x - z||_F / ||x||_F. Throws InvalidArgument for a zero-norm x.
double rse(const DenseTensor& x, const DenseTensor& z);
// The same restricted to entries where mask != 0.
double masked_rse(const DenseTensor& x, const DenseTensor& z, const DenseTensor& mask);

// Gradients of 0.5 * ||M o (target - contract(m))||_F^2 with respect to each
// core (M is all ones when mask is null).
std::vector<DenseTensor> gradient(const DenseTensor& target, const TnModel& m,
                                  const DenseTensor* mask = nullptr);

// Fits cores for a fixed structure from `cfg.restarts` random starts and
// returns the restart with the lowest RSE. Restart k draws its initial cores
// from derive_seed({cfg.seed, k}) alone, so results are reproducible.
// The target is scaled to unit RMS over observed entries before fitting and
// the returned cores are scaled back. Restarts after one that reaches
// `tolerance` are skipped. If every restart
// diverges the result carries rse = +inf.
FitResult fit(const DenseTensor& target, const TnStructure& s, const FitConfig& cfg,
              const DenseTensor* mask = nullptr);

}  // namespace tnps

#endif  // TNPS_FIT_HPP_
