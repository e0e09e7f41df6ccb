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

#include "parlab/instances/lowerbound_params.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace parlab {
namespace {

double DeltaMap(double delta) { return delta / std::log2(1.0 / delta); }

}  // namespace

double LowerBoundConstant(std::size_t d, double Q, double rho) {
  return 12.0 + 4.0 * std::log(Q / rho) / std::log(static_cast<double>(d));
}

double DeltaTarget(std::size_t d, std::size_t N, double C) {
  const double dd = static_cast<double>(d), nn = static_cast<double>(N);
  return 4.0 * std::sqrt(C * nn * std::log(dd) / dd) + 1.0 / std::sqrt(nn);
}

double ConstantForTarget(std::size_t d, std::size_t N, double target) {
  const double dd = static_cast<double>(d), nn = static_cast<double>(N);
  const double s = (target - 1.0 / std::sqrt(nn)) / 4.0;
  if (s <= 0.0) {
    std::ostringstream msg;
    msg << "target " << target << " is not above 1/sqrt(N) = "
        << 1.0 / std::sqrt(nn);
    throw std::domain_error(msg.str());
  }
  return s * s * dd / (nn * std::log(dd));
}

double SolveDeltaForTarget(double target) {
  // delta / log2(1/delta) increases from 0 to 1/2 on (0, 1/2).
  if (!(target > 0.0) || !(target < 0.5)) {
    std::ostringstream msg;
    msg << "delta equation has no root in (0, 1/2): target " << target
        << " must lie in (0, 0.5)";
    throw std::domain_error(msg.str());
  }
  double lo = 0.0, hi = 0.5;
  while (hi - lo > 1e-12 * 1e-3) {
    const double mid = 0.5 * (lo + hi);
    if (DeltaMap(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

LowerBoundParams DeriveLowerBoundParams(std::size_t d, std::size_t N, double Q,
                                        double rho,
                                        const LowerBoundOptions& options) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
  if (N < 1 || 2 * N > d) throw std::invalid_argument("need 1 <= N <= d/2");
  if (!(Q >= 1.0)) throw std::invalid_argument("Q must be at least 1");
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("rho in (0,1)");

  LowerBoundParams p;
  p.d = d;
  p.N = N;
  p.Q = Q;
  p.rho = rho;
  p.C = options.C ? *options.C : LowerBoundConstant(d, Q, rho);
  const double dd = static_cast<double>(d), nn = static_cast<double>(N);
  p.cone_threshold = std::sqrt(p.C * std::log(dd) / dd);
  p.delta_target = DeltaTarget(d, N, p.C);
  p.theorem_condition_holds =
      std::log(nn) * nn * p.cone_threshold <= 0.25;

  if (p.delta_target > 0.0 && p.delta_target < 0.5) {
    p.delta_wall = SolveDeltaForTarget(p.delta_target);
    p.delta_equation_solved = true;
  } else if (options.fallback_delta) {
    p.delta_wall = *options.fallback_delta;
    if (!(p.delta_wall > 0.0 && p.delta_wall < 0.5)) {
      throw std::invalid_argument("fallback delta must lie in (0, 1/2)");
    }
  } else {
    SolveDeltaForTarget(p.delta_target);  // throws with the target
  }
  p.alpha_wall = 1.0 / std::log2(1.0 / p.delta_wall);
  p.gamma = 2.0 * p.delta_wall * p.cone_threshold;
  return p;
}

}  // namespace parlab
