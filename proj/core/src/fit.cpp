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

#include "tnps/fit.hpp"

#include <algorithm>
#include <limits>
#include <optional>

#include "tnps/error.hpp"
#include "tnps/network.hpp"
#include "tnps/random.hpp"

namespace tnps {

void FitConfig::validate() const {
  if (!(learning_rate > 0)) throw InvalidArgument("fit: learning_rate must be > 0");
  if (restarts < 1) throw InvalidArgument("fit: restarts must be >= 1");
  if (!(init_std > 0)) throw InvalidArgument("fit: init_std must be > 0");
  if (!(beta1 >= 0 && beta1 < 1) || !(beta2 >= 0 && beta2 < 1))
    throw InvalidArgument("fit: beta1 and beta2 must lie in [0, 1)");
  if (!(epsilon > 0)) throw InvalidArgument("fit: epsilon must be > 0");
  if (tolerance < 0) throw InvalidArgument("fit: tolerance must be >= 0");
  if (stall_improvement < 0 || stall_improvement >= 1)
    throw InvalidArgument("fit: stall_improvement must lie in [0, 1)");
}

double rse(const DenseTensor& x, const DenseTensor& z) {
  if (x.shape() != z.shape()) throw InvalidArgument("rse: shape mismatch");
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - z[i];
    num += d * d;
    den += x[i] * x[i];
  }
  if (den == 0) throw InvalidArgument("rse: target has zero norm");
  return std::sqrt(num) / std::sqrt(den);
}

double masked_rse(const DenseTensor& x, const DenseTensor& z, const DenseTensor& mask) {
  if (x.shape() != z.shape() || x.shape() != mask.shape())
    throw InvalidArgument("masked_rse: shape mismatch");
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (mask[i] == 0) continue;
    const double d = x[i] - z[i];
    num += d * d;
    den += x[i] * x[i];
  }
  if (den == 0) throw InvalidArgument("masked_rse: no observed entries with nonzero norm");
  return std::sqrt(num) / std::sqrt(den);
}

namespace {

// Loss, residual and gradients for one structure against one target.
class FitProblem {
 public:
  // `relative` requires a nonzero observed target, since the RSE divides by it.
  FitProblem(const DenseTensor& target, const TnStructure& s, const DenseTensor* mask,
             bool relative = true)
      : plan_(s, target.shape()), target_(plan_.to_slot_order(target)) {
    if (mask) {
      if (mask->shape() != target.shape()) throw InvalidArgument("fit: mask shape mismatch");
      DenseTensor binary = *mask;
      for (double& m : binary.values()) m = m != 0 ? 1.0 : 0.0;
      mask_ = plan_.to_slot_order(binary);
    }
    double den = 0;
    for (std::size_t i = 0; i < target_.size(); ++i) {
      const double x = mask_ ? target_[i] * (*mask_)[i] : target_[i];
      den += x * x;
    }
    if (den == 0 && relative)
      throw InvalidArgument(mask_ ? "fit: no observed entries (mask is empty or target is zero there)"
                                  : "fit: target has zero norm");
    target_norm_ = den > 0 ? std::sqrt(den) : 1.0;
    residual_.resize(target_.size());
    spans_.resize(plan_.num_cores());
  }

  NetworkPlan& plan() { return plan_; }

  // Contracts the network and returns the RSE; keeps the residual.
  double evaluate(const std::vector<std::vector<double>>& cores) {
    for (std::size_t v = 0; v < cores.size(); ++v) spans_[v] = cores[v];
    const auto z = plan_.forward(spans_);
    double ss = 0;
    if (mask_) {
      for (std::size_t i = 0; i < z.size(); ++i) {
        residual_[i] = (z[i] - target_[i]) * (*mask_)[i];
        ss += residual_[i] * residual_[i];
      }
    } else {
      for (std::size_t i = 0; i < z.size(); ++i) {
        residual_[i] = z[i] - target_[i];
        ss += residual_[i] * residual_[i];
      }
    }
    return std::sqrt(ss) / target_norm_;
  }

  // Gradients at the point of the last evaluate().
  void gradients(std::vector<std::vector<double>>& out) {
    grad_spans_.resize(out.size());
    for (std::size_t v = 0; v < out.size(); ++v) grad_spans_[v] = out[v];
    plan_.gradients(residual_, grad_spans_);
  }

 private:
  NetworkPlan plan_;
  DenseTensor target_;
  std::optional<DenseTensor> mask_;
  double target_norm_ = 1;
  std::vector<double> residual_;
  std::vector<std::span<const double>> spans_;
  std::vector<std::span<double>> grad_spans_;
};

struct RestartOutcome {
  std::vector<std::vector<double>> best;
  double rse = std::numeric_limits<double>::infinity();
  std::size_t steps = 0;
};

RestartOutcome run_restart(FitProblem& obj, const FitConfig& cfg, std::uint64_t seed) {
  const auto& shapes = obj.plan().core_shapes();
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, cfg.init_std);
  std::vector<std::vector<double>> params, m1, m2, grads;
  for (const auto& shape : shapes) {
    std::vector<double> core(shape_size(shape));
    for (double& x : core) x = normal(rng);
    params.push_back(std::move(core));
    m1.emplace_back(params.back().size(), 0.0);
    m2.emplace_back(params.back().size(), 0.0);
    grads.emplace_back(params.back().size(), 0.0);
  }

  RestartOutcome out;
  out.best = params;
  double window_ref = std::numeric_limits<double>::infinity();
  double b1_pow = 1, b2_pow = 1;
  std::size_t step = 0;
  for (; step < cfg.max_steps; ++step) {
    const double err = obj.evaluate(params);
    if (!std::isfinite(err)) {
      out.rse = std::numeric_limits<double>::infinity();
      break;
    }
    if (err < out.rse) {
      out.rse = err;
      out.best = params;
    }
    if (err < cfg.tolerance) break;
    if (cfg.stall_window && (step + 1) % cfg.stall_window == 0) {
      if (out.rse > (1.0 - cfg.stall_improvement) * window_ref) break;
      window_ref = out.rse;
    }

    obj.gradients(grads);
    b1_pow *= cfg.beta1;
    b2_pow *= cfg.beta2;
    const double step_size = cfg.learning_rate * std::sqrt(1 - b2_pow) / (1 - b1_pow);
    const double eps_hat = cfg.epsilon * std::sqrt(1 - b2_pow);
    for (std::size_t v = 0; v < params.size(); ++v) {
      auto& p = params[v];
      auto& a = m1[v];
      auto& b = m2[v];
      const auto& g = grads[v];
      for (std::size_t i = 0; i < p.size(); ++i) {
        a[i] = cfg.beta1 * a[i] + (1 - cfg.beta1) * g[i];
        b[i] = cfg.beta2 * b[i] + (1 - cfg.beta2) * g[i] * g[i];
        p[i] -= step_size * a[i] / (std::sqrt(b[i]) + eps_hat);
      }
    }
  }
  out.steps = step;
  return out;
}

}  // namespace

std::vector<DenseTensor> gradient(const DenseTensor& target, const TnModel& m,
                                  const DenseTensor* mask) {
  m.validate();
  if (target.shape() != m.dims) throw InvalidArgument("gradient: target shape mismatch");
  FitProblem obj(target, m.structure, mask, false);
  std::vector<std::vector<double>> cores, grads;
  for (const auto& c : m.cores) {
    cores.emplace_back(c.values().begin(), c.values().end());
    grads.emplace_back(c.size(), 0.0);
  }
  obj.evaluate(cores);
  obj.gradients(grads);
  std::vector<DenseTensor> out;
  for (std::size_t v = 0; v < grads.size(); ++v)
    out.emplace_back(m.cores[v].shape(), std::move(grads[v]));
  return out;
}

FitResult fit(const DenseTensor& target, const TnStructure& s, const FitConfig& cfg,
              const DenseTensor* mask) {
  cfg.validate();
  s.validate();
  if (target.order() != s.order())
    throw InvalidArgument("fit: target order " + std::to_string(target.order()) +
                          " does not match structure order " + std::to_string(s.order()));
  // The problem is solved for the target scaled to unit RMS over observed
  // entries, so the step size and init scale do not depend on the data scale.
  // RSE is invariant under the scaling; the cores are scaled back at the end.
  double ss = 0, observed = 0;
  for (std::size_t i = 0; i < target.size(); ++i) {
    if (mask && (*mask)[i] == 0) continue;
    ss += target[i] * target[i];
    observed += 1;
  }
  const double scale = ss > 0 ? std::sqrt(observed / ss) : 1.0;
  DenseTensor scaled = target;
  for (double& x : scaled.values()) x *= scale;
  FitProblem obj(scaled, s, mask);

  FitResult result;
  result.rse = std::numeric_limits<double>::infinity();
  std::optional<RestartOutcome> best;
  for (std::size_t k = 0; k < cfg.restarts; ++k) {
    RestartOutcome r = run_restart(obj, cfg, derive_seed({cfg.seed, k}));
    result.total_steps += r.steps;
    const bool done = r.rse < cfg.tolerance;
    if (!best || r.rse < best->rse) {
      result.restart_index = k;
      best = std::move(r);
    }
    if (done) break;
  }

  result.model.structure = s;
  result.model.dims = target.shape();
  result.rse = best->rse;
  result.steps_used = best->steps;
  const auto& shapes = obj.plan().core_shapes();
  const double per_core = std::pow(scale, -1.0 / static_cast<double>(shapes.size()));
  for (std::size_t v = 0; v < shapes.size(); ++v) {
    for (double& x : best->best[v]) x *= per_core;
    result.model.cores.emplace_back(shapes[v], std::move(best->best[v]));
  }
  return result;
}

}  // namespace tnps
