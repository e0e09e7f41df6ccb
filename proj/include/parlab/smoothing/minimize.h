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

#ifndef PARLAB_SMOOTHING_MINIMIZE_H_
#define PARLAB_SMOOTHING_MINIMIZE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "parlab/accel/framework.h"
#include "parlab/core/objective.h"
#include "parlab/smoothing/plan.h"

namespace parlab {

struct SolverRecord {
  std::size_t outer_k = 0;
  std::size_t inner_iters = 0;
  std::uint64_t depth = 0;
  std::uint64_t work = 0;
  double gap_estimate = 0.0;  // f(x) - f* if f* is known, else f(x)
  double residual_norm = 0.0;
};

struct SolverTrace {
  std::string method;
  std::vector<SolverRecord> records;
  nlohmann::json plan;  // echoed parameters
  std::uint64_t depth = 0;
  std::uint64_t work = 0;
  std::string stop_reason;
  // Highly-parallel solver only.
  std::optional<FrameworkTrace> framework;
  nlohmann::json diagnostics;
};

struct SolverResult {
  Vec x;
  double value = 0.0;
  std::optional<double> gap;  // when f* is known
  SolverTrace trace;
};

inline constexpr const char* kSolverTraceHeader =
    "outer_k,inner_iters,depth,work,gap_estimate,residual_norm";
void WriteSolverTraceCsv(std::ostream& os, const SolverTrace& trace);

// Accelerated proximal-point framework on the Gaussian smoothing of f, with
// sampled-field proximal steps and field gradients. Returns the last
// y-iterate.
SolverResult HighlyParallelMinimize(std::shared_ptr<const Objective> f,
                                    std::size_t d, double L, double R,
                                    double eps, double nu, std::uint64_t seed,
                                    const SmoothingConstants& constants = {});

// Projected subgradient descent on the ball of radius R with step
// R / (L sqrt(T)), T = ceil((L R / eps)^2), one query per round. Returns the
// averaged iterate.
SolverResult BaselineSubgradient(std::shared_ptr<const Objective> f, double R,
                                 double L, double eps);

struct DrsOptions {
  std::optional<std::size_t> batch;  // default ceil((8 R L / eps)^2)
  double r_factor = 1.0 / 3.0;
};

// Accelerated gradient descent on the Gaussian smoothing of f with
// mini-batch Monte Carlo gradients, one batch per round.
SolverResult BaselineDrs(std::shared_ptr<const Objective> f, std::size_t d,
                         double L, double R, double eps, std::uint64_t seed,
                         const DrsOptions& options = {});

}  // namespace parlab

#endif  // PARLAB_SMOOTHING_MINIMIZE_H_
