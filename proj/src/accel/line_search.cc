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

#include "parlab/accel/line_search.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "parlab/core/errors.h"
#include "parlab/core/linalg.h"

namespace parlab {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ZetaResult ProbeAt(double theta, double A, VecView x1, VecView x2,
                   ProxOracle& prox) {
  ZetaResult z;
  z.x_tilde = Combine(1.0 - theta, x1, theta, x2);
  z.y = prox.Query(z.x_tilde);
  z.step_norm = Distance(z.y, z.x_tilde);
  if (theta == 0.0) {
    z.lambda = kInf;
    z.zeta = z.step_norm == 0.0 ? 0.0 : kInf;
  } else {
    z.lambda = (1.0 - theta) * (1.0 - theta) * A / theta;
    z.zeta = z.lambda == 0.0 ? 0.0 : z.lambda * prox.omega()(z.step_norm);
  }
  return z;
}

bool InUnitBracket(double zeta) { return zeta >= 0.5 && zeta <= 1.0; }

}  // namespace

StepCoefficients ComputeStepCoefficients(double lambda, double A) {
  if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
  if (!(A >= 0.0)) throw std::invalid_argument("A must be non-negative");
  StepCoefficients s;
  s.a = 0.5 * (lambda + std::sqrt(lambda * lambda + 4.0 * lambda * A));
  s.A_next = A + s.a;
  return s;
}

ZetaResult Zeta(double theta, double A, VecView x1, VecView x2,
                ProxOracle& prox) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw std::invalid_argument("theta must lie in (0, 1]");
  }
  if (!(A > 0.0)) throw std::invalid_argument("A must be positive");
  return ProbeAt(theta, A, x1, x2, prox);
}

const char* LineSearchKindName(LineSearchKind kind) {
  return kind == LineSearchKind::kBracketed ? "bracketed"
                                            : "approximate-minimizer";
}

double LineSearchThreshold(double A, double delta, const LineSearchParams& p,
                           const OmegaSpec& omega) {
  const double w = omega(8.0 * p.c * p.mu * p.R);
  const double g = omega.growth_gamma();
  const double mr = p.mu * p.R;
  double tau = 0.25;
  tau = std::min(tau, 0.5 * std::sqrt(1.0 / (4.0 * A * w)));
  tau = std::min(tau, A * delta / (64.0 * mr));
  tau = std::min(tau, p.c * delta / (360.0 * g * mr * w));
  tau = std::min(tau, 1.0 / (200.0 * (1.0 + A * w + 4.0 * mr / (A * delta) +
                                      mr * w / delta)));
  return tau;
}

double LineSearchQueryBudget(double delta, const LineSearchParams& p,
                             const OmegaSpec& omega) {
  return 6.0 + std::log2((160.0 * p.mu * p.R * p.c / delta +
                          9.0 * p.R * p.R / p.epsilon) *
                         omega(8.0 * p.c * p.mu * p.R));
}

LineSearchOutcome LineSearch(ProxOracle& prox, VecView x1, VecView x2,
                             double A, const LineSearchParams& params) {
  const OmegaSpec& omega = prox.omega();
  const double mr = params.mu * params.R;
  const double a_lo = 1.0 / (2.0 * omega(2.0 * mr));
  const double a_hi = params.R * params.R / params.epsilon;
  if (A < a_lo * (1.0 - 1e-12) || A > a_hi * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "line search: A = " << A << " outside [" << a_lo << ", " << a_hi
        << "]";
    throw ContractViolation(msg.str());
  }
  const double alpha = prox.alpha();
  const double c = params.c;
  const double eps_prime =
      params.epsilon / (9.0 * c * ((1.0 + alpha) * c + 1.0));
  if (prox.delta() > 8.0 * mr * omega(8.0 * mr) &&
      prox.delta() > eps_prime / mr) {
    std::ostringstream msg;
    msg << "line search: oracle error " << prox.delta()
        << " exceeds both admissible bounds";
    throw ContractViolation(msg.str());
  }
  const double delta = std::max(prox.delta(), params.delta_floor);

  LineSearchOutcome out;
  out.tau = LineSearchThreshold(A, delta, params, omega);
  out.query_budget = LineSearchQueryBudget(delta, params, omega);

  const std::size_t before = prox.queries();
  auto probe = [&](double theta) {
    ZetaResult z = ProbeAt(theta, A, x1, x2, prox);
    out.probes.push_back({theta, z.zeta, z.step_norm});
    return z;
  };
  auto near_minimizer = [&](const ZetaResult& z) {
    return omega(z.step_norm) * z.step_norm <= c * delta;
  };
  auto finish = [&](LineSearchKind kind, const ZetaResult& z, double theta) {
    out.kind = kind;
    out.y = z.y;
    out.x_tilde = z.x_tilde;
    out.theta = theta;
    out.zeta_value = z.zeta;
    out.step_norm = z.step_norm;
    out.lambda = kind == LineSearchKind::kBracketed ? z.lambda : 0.0;
    out.prox_queries = prox.queries() - before;
    return out;
  };

  double lo = 0.0, hi = 1.0;
  std::optional<ZetaResult> at_lo, at_hi;
  while (hi - lo >= out.tau) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    ZetaResult z = probe(mid);
    if (params.early_accept && InUnitBracket(z.zeta) && !near_minimizer(z)) {
      return finish(LineSearchKind::kBracketed, z, mid);
    }
    if (z.zeta >= 0.75) {
      lo = mid;
      at_lo = std::move(z);
    } else {
      hi = mid;
      at_hi = std::move(z);
    }
    const double zl = at_lo ? at_lo->zeta : kInf;
    const double zh = at_hi ? at_hi->zeta : 0.0;
    if (!(zl >= 0.75 && zh < 0.75)) out.invariants_held = false;
  }
  if (!at_lo) at_lo = probe(0.0);
  if (!at_hi) at_hi = probe(1.0);

  if (near_minimizer(*at_lo)) {
    return finish(LineSearchKind::kApproximateMinimizer, *at_lo, lo);
  }
  if (near_minimizer(*at_hi)) {
    return finish(LineSearchKind::kApproximateMinimizer, *at_hi, hi);
  }
  if (InUnitBracket(at_lo->zeta)) {
    return finish(LineSearchKind::kBracketed, *at_lo, lo);
  }
  if (InUnitBracket(at_hi->zeta)) {
    return finish(LineSearchKind::kBracketed, *at_hi, hi);
  }
  std::ostringstream msg;
  msg << "line search ended without a bracket: zeta(" << lo
      << ") = " << at_lo->zeta << ", zeta(" << hi << ") = " << at_hi->zeta;
  throw ContractViolation(msg.str());
}

}  // namespace parlab
