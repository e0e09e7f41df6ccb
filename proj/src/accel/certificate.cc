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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "parlab/accel/framework.h"
#include "parlab/core/linalg.h"

namespace parlab {

CertificateCheck ConvergenceCertificate(const FrameworkTrace& trace,
                                        const Objective& g, VecView x_star,
                                        double slack) {
  if (trace.records.empty()) throw std::invalid_argument("empty trace");
  const double g_star = g.optimal_value().value_or(g.Value(x_star));
  const double delta = std::max(trace.oracle_delta, trace.grad_delta);
  const double one_minus_sigma = 1.0 - trace.sigma;
  const double base = 0.5 * Dot(x_star, x_star);

  CertificateCheck out;
  double potential_sum = 0.0;
  double drift = 0.0;
  double a_sq = 0.0;
  for (const FrameworkRecord& r : trace.records) {
    // Records that end the run without a step carry no lambda.
    if (r.lambda <= 0.0) continue;
    if (r.x.size() != x_star.size() || r.y.size() != x_star.size()) {
      throw std::invalid_argument("trace record is incomplete");
    }
    potential_sum += one_minus_sigma * r.A / (2.0 * r.lambda) * r.step_norm *
                     r.step_norm;
    const double dist = Distance(r.x, x_star);
    drift += r.a * dist;
    a_sq += r.a * r.a;
    const double lhs = r.A * (g.Value(r.y) - g_star) + 0.5 * dist * dist +
                       potential_sum;
    const double rhs =
        base + delta * drift + delta * delta / (2.0 * one_minus_sigma) * a_sq;
    out.lhs.push_back(lhs);
    out.rhs.push_back(rhs);
    if (out.holds && lhs > rhs + slack) {
      out.holds = false;
      out.first_failure = r.k;
    }
  }
  return out;
}

bool DiameterBoundsHold(const FrameworkTrace& trace, VecView x_star,
                        double slack) {
  const double r = Norm(x_star);
  for (const FrameworkRecord& rec : trace.records) {
    if (Distance(rec.x, x_star) > 2.0 * r + slack) return false;
    if (Distance(rec.y, x_star) > trace.mu * r + slack) return false;
  }
  return true;
}

}  // namespace parlab
