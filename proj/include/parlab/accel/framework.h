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

#ifndef PARLAB_ACCEL_FRAMEWORK_H_
#define PARLAB_ACCEL_FRAMEWORK_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "parlab/accel/line_search.h"
#include "parlab/accel/prox_oracles.h"
#include "parlab/core/ledger.h"
#include "parlab/core/objective.h"

namespace parlab {

struct FrameworkParams {
  std::size_t dim = 0;  // taken from the reference when zero
  double R = 1.0;
  double epsilon = 1e-6;
  std::optional<double> sigma;  // default (1 + alpha) / 2
  std::optional<double> c;      // default 150 * growth_gamma^2
  std::size_t K_max = 10000;
  bool early_accept = true;
  double delta_floor = 1e-12;
  // Stop once A_k exceeds R^2 / epsilon.
  bool stop_on_A_bound = true;
  // Abort on a violated contract when a reference function is supplied.
  bool check_contracts = true;
  double contract_slack = 1e-9;
};

struct FrameworkRecord {
  std::size_t k = 0;
  double A = 0.0;
  double lambda = 0.0;
  double a = 0.0;
  double step_norm = 0.0;  // ||y_k - x_tilde_{k-1}||
  double gap = 0.0;        // NaN without a reference optimum
  Vec x_tilde_prev;
  Vec y;
  Vec x;
  std::size_t prox_queries = 0;  // cumulative
  std::size_t depth = 0;         // cumulative
  std::size_t work = 0;          // cumulative
  LineSearchKind search_kind = LineSearchKind::kBracketed;
  std::size_t search_queries = 0;
  double search_budget = 0.0;
};

struct FrameworkTrace {
  std::vector<FrameworkRecord> records;
  double alpha = 0.0;
  double sigma = 0.0;
  double mu = 0.0;
  double c = 0.0;
  double oracle_delta = 0.0;
  double grad_delta = 0.0;
  std::string stop_reason;
  std::size_t budget_overruns = 0;
};

struct FrameworkResult {
  Vec y;
  FrameworkTrace trace;
};

// Accelerated outer loop driven by a proximal step oracle and a gradient
// oracle, starting from x_0 = y_0 = 0. `reference` enables gap recording,
// the gap stopping rule and contract checks. `ledger`, if given, supplies
// the cumulative depth and work columns; otherwise every oracle call counts
// as one round of one point. `on_iteration` runs after each record.
FrameworkResult FrameworkRun(
    ProxOracle& prox, GradOracle& grad, const FrameworkParams& params,
    const Objective* reference = nullptr,
    const DepthWorkLedger* ledger = nullptr,
    const std::function<void(const FrameworkRecord&)>& on_iteration = {});

struct CertificateCheck {
  bool holds = true;
  std::size_t first_failure = 0;  // k of the first failing record
  std::vector<double> lhs;
  std::vector<double> rhs;
};

// Potential inequality
//   A_k [g(y_k) - g*] + ||x_k - x*||^2 / 2
//     + sum_{i<=k} ((1 - sigma) A_i / (2 lambda_i)) ||y_i - x_tilde_{i-1}||^2
//   <= ||x*||^2 / 2 + delta_k,
// delta_k = delta sum_i a_i ||x_i - x*|| + delta^2 / (2 (1 - sigma)) sum_i a_i^2,
// checked at every record within `slack`.
CertificateCheck ConvergenceCertificate(const FrameworkTrace& trace,
                                        const Objective& g, VecView x_star,
                                        double slack = 1e-8);

// Whether every recorded ||x_k - x*|| <= 2 ||x*|| and ||y_k - x*|| <= mu ||x*||.
bool DiameterBoundsHold(const FrameworkTrace& trace, VecView x_star,
                        double slack = 1e-9);

}  // namespace parlab

#endif  // PARLAB_ACCEL_FRAMEWORK_H_
