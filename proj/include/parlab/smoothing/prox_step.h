// Copyright 2026 The Parlab Authors
//
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

#ifndef PARLAB_SMOOTHING_PROX_STEP_H_
#define PARLAB_SMOOTHING_PROX_STEP_H_

#include <cstddef>
#include <cstdint>

#include "parlab/accel/prox_oracles.h"
#include "parlab/core/objective.h"
#include "parlab/core/oracle.h"
#include "parlab/core/rng.h"
#include "parlab/smoothing/plan.h"

namespace parlab {

struct ProxStepResult {
  Vec y;
  std::size_t iterations = 0;
  double residual_norm = 0.0;  // ||field(y) + omega(||y - c||)(y - c)||
  double max_radius = 0.0;     // largest ||y - c|| over the iterates
  bool converged = false;
  // Steps that would have left the trust ball and were pulled back onto it.
  std::size_t trust_clamps = 0;
};

// Approximate omega-proximal step of the smoothed function at c: samples one
// field around c, then runs fixed-step gradient descent from y = c on
// field(y) + omega(||y - c||)(y - c) until its norm is at most
// (5/6) L eps_oracle or the iteration cap is hit.
ProxStepResult ProxStepGd(ParallelOracle& f, VecView c,
                          const SmoothingPlan& plan, RngStream& rng);

// ProxStepGd as a proximal step oracle with alpha = 0, delta = L eps_oracle.
// Each query uses its own random substream.
class SmoothedProxOracle final : public ProxOracle {
 public:
  SmoothedProxOracle(ParallelOracle& f, const SmoothingPlan& plan,
                     RngStream rng);
  Vec Query(VecView x) override;
  double alpha() const override { return 0.0; }
  double delta() const override { return plan_.L * plan_.eps_oracle; }
  const OmegaSpec& omega() const override { return plan_.omega; }

  std::size_t inner_iterations() const { return inner_iterations_; }
  std::size_t unconverged() const { return unconverged_; }
  std::size_t trust_clamps() const { return trust_clamps_; }
  double last_residual() const { return last_residual_; }

 private:
  ParallelOracle& f_;
  SmoothingPlan plan_;
  RngStream rng_;
  std::size_t inner_iterations_ = 0;
  std::size_t unconverged_ = 0;
  std::size_t trust_clamps_ = 0;
  double last_residual_ = 0.0;
};

// Gradient oracle: a fresh field sampled at the query point, evaluated there.
class FieldGradOracle final : public GradOracle {
 public:
  FieldGradOracle(ParallelOracle& f, const SmoothingPlan& plan, RngStream rng);
  Vec Query(VecView x) override;
  double grad_delta() const override { return plan_.L * plan_.eps_apx; }

 private:
  ParallelOracle& f_;
  SmoothingPlan plan_;
  RngStream rng_;
};

struct McGradient {
  Vec estimate;
  double standard_error = 0.0;  // sqrt(trace(covariance) / count)
};

// Plain Monte Carlo estimate of the smoothed gradient at x, averaging
// subgradients of f at x - r * xi. Calls f directly; not ledgered.
McGradient McGradientOracle(const Objective& f, VecView x, double r,
                            std::size_t sample_count, RngStream& rng);

struct McValue {
  double estimate = 0.0;
  double standard_error = 0.0;
};
McValue McSmoothedValue(const Objective& f, VecView x, double r,
                        std::size_t sample_count, RngStream& rng);

}  // namespace parlab

#endif  // PARLAB_SMOOTHING_PROX_STEP_H_
