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

#include "parlab/smoothing/prox_step.h"

#include <algorithm>
#include <cmath>

#include "parlab/core/linalg.h"
#include "parlab/smoothing/vector_field.h"

namespace parlab {

ProxStepResult ProxStepGd(ParallelOracle& f, VecView c,
                          const SmoothingPlan& plan, RngStream& rng) {
  const std::size_t d = c.size();
  const SampledVectorField field = SampledVectorField::Sample(
      f, c, plan.r, plan.eta, plan.sample_count, rng);
  const double target = 5.0 / 6.0 * plan.L * plan.eps_oracle;
  const double radius = std::min(plan.r_tilde, field.trust_radius());

  ProxStepResult out;
  out.y.assign(c.begin(), c.end());
  Vec step(d), offset(d, 0.0);
  Vec scratch(field.kept_count());
  for (std::size_t it = 0;; ++it) {
    field.EvalInto(out.y, step, scratch);
    const double dist = Norm(offset);
    Axpy(plan.omega(dist), offset, step);
    out.residual_norm = Norm(step);
    out.iterations = it;
    if (out.residual_norm <= target) {
      out.converged = true;
      break;
    }
    if (it >= plan.gd_iteration_cap) break;
    Axpy(-plan.gd_step, step, offset);
    const double n = Norm(offset);
    if (n > radius) {
      Scale(radius / n, offset);
      ++out.trust_clamps;
    }
    out.max_radius = std::max(out.max_radius, std::min(n, radius));
    for (std::size_t j = 0; j < d; ++j) out.y[j] = c[j] + offset[j];
  }
  return out;
}

SmoothedProxOracle::SmoothedProxOracle(ParallelOracle& f,
                                       const SmoothingPlan& plan, RngStream rng)
    : f_(f), plan_(plan), rng_(std::move(rng)) {}

Vec SmoothedProxOracle::Query(VecView x) {
  RngStream sub = rng_.Derive(queries_);
  ++queries_;
  ProxStepResult r = ProxStepGd(f_, x, plan_, sub);
  inner_iterations_ += r.iterations;
  trust_clamps_ += r.trust_clamps;
  if (!r.converged) ++unconverged_;
  last_residual_ = r.residual_norm;
  return std::move(r.y);
}

FieldGradOracle::FieldGradOracle(ParallelOracle& f, const SmoothingPlan& plan,
                                 RngStream rng)
    : f_(f), plan_(plan), rng_(std::move(rng)) {}

Vec FieldGradOracle::Query(VecView x) {
  RngStream sub = rng_.Derive(queries_);
  ++queries_;
  const SampledVectorField field = SampledVectorField::Sample(
      f_, x, plan_.r, plan_.eta, plan_.sample_count, sub);
  return field.Eval(x);
}

McGradient McGradientOracle(const Objective& f, VecView x, double r,
                            std::size_t sample_count, RngStream& rng) {
  const std::size_t d = x.size();
  // Welford accumulation per coordinate.
  Vec mean(d, 0.0), m2(d, 0.0), pt(d), noise(d);
  for (std::size_t n = 1; n <= sample_count; ++n) {
    rng.FillNormal(noise);
    for (std::size_t j = 0; j < d; ++j) pt[j] = x[j] - r * noise[j];
    const Vec g = f.Evaluate(pt).gradient;
    for (std::size_t j = 0; j < d; ++j) {
      const double delta = g[j] - mean[j];
      mean[j] += delta / static_cast<double>(n);
      m2[j] += delta * (g[j] - mean[j]);
    }
  }
  double trace = 0.0;
  for (double v : m2) trace += v / static_cast<double>(sample_count - 1);
  return {mean, std::sqrt(trace / static_cast<double>(sample_count))};
}

McValue McSmoothedValue(const Objective& f, VecView x, double r,
                        std::size_t sample_count, RngStream& rng) {
  const std::size_t d = x.size();
  Vec pt(d), noise(d);
  double mean = 0.0, m2 = 0.0;
  for (std::size_t n = 1; n <= sample_count; ++n) {
    rng.FillNormal(noise);
    for (std::size_t j = 0; j < d; ++j) pt[j] = x[j] - r * noise[j];
    const double v = f.Value(pt);
    const double delta = v - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (v - mean);
  }
  const double var = m2 / static_cast<double>(sample_count - 1);
  return {mean, std::sqrt(var / static_cast<double>(sample_count))};
}

}  // namespace parlab
