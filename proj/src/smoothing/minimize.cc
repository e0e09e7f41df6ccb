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

#include "parlab/smoothing/minimize.h"

#include <cmath>
#include <iomanip>
#include <limits>

#include "parlab/core/linalg.h"
#include "parlab/core/oracle.h"
#include "parlab/smoothing/prox_step.h"

namespace parlab {

void WriteSolverTraceCsv(std::ostream& os, const SolverTrace& trace) {
  os << kSolverTraceHeader << '\n' << std::setprecision(17);
  for (const SolverRecord& r : trace.records) {
    os << r.outer_k << ',' << r.inner_iters << ',' << r.depth << ',' << r.work
       << ',' << r.gap_estimate << ',' << r.residual_norm << '\n';
  }
}

SolverResult HighlyParallelMinimize(std::shared_ptr<const Objective> f,
                                    std::size_t d, double L, double R,
                                    double eps, double nu, std::uint64_t seed,
                                    const SmoothingConstants& constants) {
  const SmoothingPlan plan = SmoothingParams(d, L, R, eps, nu, constants);
  auto ledger = std::make_shared<DepthWorkLedger>();
  ParallelOracle oracle(f, plan.sample_count,
                        std::numeric_limits<double>::infinity(), ledger);
  const RngStream base(seed, MixKey(0x68706d696eULL, 0));
  SmoothedProxOracle prox(oracle, plan, base.Derive(1));
  FieldGradOracle grad(oracle, plan, base.Derive(2));

  FrameworkParams fp;
  fp.dim = d;
  fp.R = R;
  fp.epsilon = eps * (1.0 - 2.0 * constants.r_factor);
  fp.c = plan.c;
  fp.K_max = plan.K_max;
  fp.check_contracts = false;

  const std::optional<double> f_star = f->optimal_value();
  SolverResult result;
  SolverTrace& trace = result.trace;
  trace.method = "highly-parallel";
  trace.plan = plan.ToJson();
  std::size_t inner_seen = 0;
  auto on_iteration = [&](const FrameworkRecord& rec) {
    SolverRecord s;
    s.outer_k = rec.k;
    s.inner_iters = prox.inner_iterations() - inner_seen;
    inner_seen = prox.inner_iterations();
    s.depth = rec.depth;
    s.work = rec.work;
    const double v = f->Value(rec.y);
    s.gap_estimate = f_star ? v - *f_star : v;
    s.residual_norm = prox.last_residual();
    trace.records.push_back(s);
  };
  FrameworkResult fr = FrameworkRun(prox, grad, fp, nullptr, ledger.get(),
                                    on_iteration);
  result.x = std::move(fr.y);
  result.value = f->Value(result.x);
  if (f_star) result.gap = result.value - *f_star;
  const LedgerSnapshot snap = ledger->Snapshot();
  trace.depth = snap.depth;
  trace.work = snap.work;
  trace.stop_reason = fr.trace.stop_reason;
  std::size_t ls_queries = 0;
  for (const FrameworkRecord& r : fr.trace.records) ls_queries += r.search_queries;
  trace.diagnostics = {
      {"prox_queries", prox.queries()},
      {"grad_queries", grad.queries()},
      {"inner_iterations", prox.inner_iterations()},
      {"unconverged_prox_steps", prox.unconverged()},
      {"trust_clamps", prox.trust_clamps()},
      {"line_search_budget_overruns", fr.trace.budget_overruns},
      {"line_search_queries", ls_queries},
      {"outer_iterations", fr.trace.records.size()}};
  trace.framework = std::move(fr.trace);
  return result;
}

}  // namespace parlab
