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

#ifndef PARLAB_INSTANCES_LOWERBOUND_PARAMS_H_
#define PARLAB_INSTANCES_LOWERBOUND_PARAMS_H_

#include <cstddef>
#include <optional>

namespace parlab {

struct LowerBoundParams {
  std::size_t d = 0;
  std::size_t N = 0;
  double Q = 0.0;
  double rho = 0.0;
  double C = 0.0;
  double cone_threshold = 0.0;  // sqrt(C ln d / d)
  double delta_target = 0.0;    // right-hand side of the delta equation
  double delta_wall = 0.0;
  double alpha_wall = 0.0;
  double gamma = 0.0;
  bool delta_equation_solved = false;   // delta_wall solves the equation
  bool theorem_condition_holds = false; // ln(N) N sqrt(C ln d / d) <= 1/4
};

struct LowerBoundOptions {
  // Replaces C = 12 + 4 log_d(Q / rho).
  std::optional<double> C;
  // Used for delta_wall when the delta equation has no root in (0, 1/2).
  // Without it, an unsolvable equation throws std::domain_error.
  std::optional<double> fallback_delta;
};

// C = 12 + 4 ln(Q / rho) / ln d.
double LowerBoundConstant(std::size_t d, double Q, double rho);

// 4 sqrt(C N ln d / d) + 1 / sqrt(N).
double DeltaTarget(std::size_t d, std::size_t N, double C);

// Solves delta / log2(1 / delta) = target on (0, 1/2) by bisection.
// Throws std::domain_error carrying the target when there is no root.
double SolveDeltaForTarget(double target);

// C from a target value of the delta equation (the inverse of DeltaTarget).
double ConstantForTarget(std::size_t d, std::size_t N, double target);

LowerBoundParams DeriveLowerBoundParams(std::size_t d, std::size_t N, double Q,
                                        double rho,
                                        const LowerBoundOptions& options = {});

}  // namespace parlab

#endif  // PARLAB_INSTANCES_LOWERBOUND_PARAMS_H_
