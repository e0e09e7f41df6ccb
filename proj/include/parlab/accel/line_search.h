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

#ifndef PARLAB_ACCEL_LINE_SEARCH_H_
#define PARLAB_ACCEL_LINE_SEARCH_H_

#include <cstddef>
#include <vector>

#include "parlab/accel/omega.h"
#include "parlab/accel/prox_oracles.h"
#include "parlab/core/types.h"

namespace parlab {

struct StepCoefficients {
  double a = 0.0;
  double A_next = 0.0;
};

// a = (lambda + sqrt(lambda^2 + 4 lambda A)) / 2 and A_next = A + a, so that
// lambda * A_next = a^2.
StepCoefficients ComputeStepCoefficients(double lambda, double A);

struct ZetaResult {
  double zeta = 0.0;
  double lambda = 0.0;
  double step_norm = 0.0;  // ||y - x_tilde||
  Vec x_tilde;
  Vec y;
};

// Queries the oracle at (1 - theta) x1 + theta x2 and returns
// lambda_theta * omega(||y - x_tilde||) with lambda_theta = (1-theta)^2 A / theta.
ZetaResult Zeta(double theta, double A, VecView x1, VecView x2,
                ProxOracle& prox);

struct LineSearchParams {
  double epsilon = 1e-6;
  double R = 1.0;
  double c = 150.0;
  double mu = 8.0;
  // Stop at the first probe whose zeta already lies in [1/2, 1].
  bool early_accept = true;
  // Lower bound on the error level used for the stopping threshold, so that
  // exact oracles (delta = 0) still terminate.
  double delta_floor = 1e-12;
};

enum class LineSearchKind { kBracketed, kApproximateMinimizer };
const char* LineSearchKindName(LineSearchKind kind);

struct LineSearchProbe {
  double theta = 0.0;
  double zeta = 0.0;
  double step_norm = 0.0;
};

struct LineSearchOutcome {
  LineSearchKind kind = LineSearchKind::kBracketed;
  Vec y;
  Vec x_tilde;
  double lambda = 0.0;  // bracketed only
  double theta = 0.0;
  double zeta_value = 0.0;
  double step_norm = 0.0;
  std::size_t prox_queries = 0;
  double query_budget = 0.0;
  double tau = 0.0;
  bool invariants_held = true;  // zeta(lo) >= 3/4 > zeta(hi) at every step
  std::vector<LineSearchProbe> probes;
};

// Bisection threshold tau of the search.
double LineSearchThreshold(double A, double delta, const LineSearchParams& p,
                           const OmegaSpec& omega);
// 6 + log2[(160 mu R c / delta + 9 R^2 / epsilon) omega(8 c mu R)].
double LineSearchQueryBudget(double delta, const LineSearchParams& p,
                             const OmegaSpec& omega);

// Binary search over theta in [0, 1] for a proximal step whose
// lambda * omega(||y - x_tilde||) lies in [1/2, 1], keeping
// zeta(lo) >= 3/4 > zeta(hi). x1 is the x-sequence point, x2 the y-sequence
// point. Throws ContractViolation if A lies outside
// [1 / (2 omega(2 mu R)), R^2 / epsilon] or no valid bracket is found.
LineSearchOutcome LineSearch(ProxOracle& prox, VecView x1, VecView x2,
                             double A, const LineSearchParams& params);

}  // namespace parlab

#endif  // PARLAB_ACCEL_LINE_SEARCH_H_
