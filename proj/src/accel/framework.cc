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

#include "parlab/accel/framework.h"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "parlab/core/errors.h"
#include "parlab/core/linalg.h"

namespace parlab {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void CheckStep(const Objective& g, VecView x_tilde, VecView y, double lambda,
               double alpha, double sigma, double delta, const OmegaSpec& omega,
               double slack, std::size_t k) {
  const ProxContractCheck prox = CheckProxContract(g, x_tilde, y, alpha, delta, omega);
  if (!prox.holds(slack)) {
    std::ostringstream msg;
    msg << "proximal step contract violated at k = " << k << ": residual "
        << prox.residual << " > bound " << prox.bound;
    throw ContractViolation(msg.str());
  }
  // || lambda grad g(y) + y - x_tilde || <= sigma ||y - x_tilde|| + lambda delta
  Vec r = g.Evaluate(y).gradient;
  Scale(lambda, r);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] += y[j] - x_tilde[j];
  const double lhs = Norm(r);
  const double rhs = sigma * Distance(y, x_tilde) + lambda * delta;
  if (lhs > rhs + slack * std::max(1.0, lambda)) {
    std::ostringstream msg;
    msg << "relaxed proximal condition violated at k = " << k << ": " << lhs
        << " > " << rhs;
    throw ContractViolation(msg.str());
  }
}

}  // namespace

FrameworkResult FrameworkRun(
    ProxOracle& prox, GradOracle& grad, const FrameworkParams& params,
    const Objective* reference, const DepthWorkLedger* ledger,
    const std::function<void(const FrameworkRecord&)>& on_iteration) {
  const std::size_t d =
      params.dim != 0 ? params.dim : (reference ? reference->dim() : 0);
  FrameworkResult result;
  FrameworkTrace& trace = result.trace;
  const OmegaSpec& omega = prox.omega();
  trace.alpha = prox.alpha();
  if (!(trace.alpha >= 0.0 && trace.alpha < 1.0)) {
    throw ContractViolation("proximal oracle alpha must lie in [0, 1)");
  }
  trace.sigma = params.sigma.value_or((1.0 + trace.alpha) / 2.0);
  trace.mu = 8.0 / std::sqrt(1.0 - trace.alpha);
  const double g = omega.growth_gamma();
  trace.c = params.c.value_or(150.0 * g * g);
  trace.oracle_delta = prox.delta();
  trace.grad_delta = grad.grad_delta();
  const double delta = std::max(prox.delta(), params.delta_floor);

  LineSearchParams ls;
  ls.epsilon = params.epsilon;
  ls.R = params.R;
  ls.c = trace.c;
  ls.mu = trace.mu;
  ls.early_accept = params.early_accept;
  ls.delta_floor = params.delta_floor;

  // NaN when the optimal value is unknown, so gaps come out as NaN.
  const double g_star =
      reference ? reference->optimal_value().value_or(kNaN) : kNaN;
  const bool check = reference != nullptr && params.check_contracts;

  auto counters = [&](FrameworkRecord& rec) {
    rec.prox_queries = prox.queries();
    if (ledger != nullptr) {
      const LedgerSnapshot s = ledger->Snapshot();
      rec.depth = s.depth;
      rec.work = s.work;
    } else {
      rec.depth = prox.queries() + grad.queries();
      rec.work = rec.depth;
    }
  };
  auto gap_of = [&](VecView y) {
    return std::isnan(g_star) ? kNaN : reference->Value(y) - g_star;
  };
  auto emit = [&](FrameworkRecord rec) {
    counters(rec);
    trace.records.push_back(std::move(rec));
    if (on_iteration) on_iteration(trace.records.back());
  };

  // First step: A_0 = 0 so x_tilde_0 = x_0 and the prox answer fixes lambda_1.
  if (d == 0) throw std::invalid_argument("framework dimension is unknown");
  const Vec x0 = Zeros(d);
  const Vec y1 = prox.Query(x0);
  const double s1 = Distance(y1, x0);
  FrameworkRecord first;
  first.k = 1;
  first.x_tilde_prev = x0;
  first.y = y1;
  first.step_norm = s1;
  first.search_queries = 1;
  if (omega(s1) * s1 <= trace.c * delta) {
    first.x = x0;
    first.search_kind = LineSearchKind::kApproximateMinimizer;
    first.gap = gap_of(y1);
    emit(std::move(first));
    trace.stop_reason = "approximate-minimizer";
    result.y = y1;
    return result;
  }
  first.lambda = 1.0 / omega(s1);
  first.a = first.lambda;
  first.A = first.lambda;
  if (check) {
    CheckStep(*reference, x0, y1, first.lambda, trace.alpha, trace.sigma,
              trace.oracle_delta, omega, params.contract_slack, 1);
  }
  first.x = x0;
  Axpy(-first.a, grad.Query(y1), first.x);
  first.gap = gap_of(y1);
  emit(std::move(first));

  while (true) {
    const FrameworkRecord& last = trace.records.back();
    if (!std::isnan(last.gap) && last.gap <= params.epsilon) {
      trace.stop_reason = "gap";
      break;
    }
    if (trace.records.size() >= params.K_max) {
      trace.stop_reason = "iteration-limit";
      break;
    }
    if (params.stop_on_A_bound &&
        last.A >= params.R * params.R / params.epsilon) {
      trace.stop_reason = "A-bound";
      break;
    }
    const Vec x_k = last.x;
    const double A_k = last.A;
    LineSearchOutcome out = LineSearch(prox, x_k, last.y, A_k, ls);
    if (out.prox_queries > out.query_budget) ++trace.budget_overruns;

    FrameworkRecord rec;
    rec.k = last.k + 1;
    rec.x_tilde_prev = out.x_tilde;
    rec.y = out.y;
    rec.step_norm = out.step_norm;
    rec.search_kind = out.kind;
    rec.search_queries = out.prox_queries;
    rec.search_budget = out.query_budget;
    if (out.kind == LineSearchKind::kApproximateMinimizer) {
      rec.A = A_k;
      rec.x = x_k;
      rec.gap = gap_of(rec.y);
      emit(std::move(rec));
      trace.stop_reason = "approximate-minimizer";
      break;
    }
    const StepCoefficients sc = ComputeStepCoefficients(out.lambda, A_k);
    rec.lambda = out.lambda;
    rec.a = sc.a;
    rec.A = sc.A_next;
    if (check) {
      CheckStep(*reference, rec.x_tilde_prev, rec.y, rec.lambda, trace.alpha,
                trace.sigma, trace.oracle_delta, omega, params.contract_slack,
                rec.k);
    }
    rec.x = x_k;
    Axpy(-rec.a, grad.Query(rec.y), rec.x);
    rec.gap = gap_of(rec.y);
    emit(std::move(rec));
  }
  result.y = trace.records.back().y;
  return result;
}

}  // namespace parlab
